#include "bhk/term_parser.hpp"

#include <cctype>

namespace bhk {

namespace {

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  [[nodiscard]] bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  [[nodiscard]] char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[nodiscard]] std::size_t position() const { return pos_; }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError(start, "expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  ParsedFactor factor() {
    skip_space();
    ParsedFactor f;
    f.position = pos_;
    if (pos_ >= text_.size() ||
        !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, "expected a variable");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    while (pos_ < text_.size() && text_[pos_] == '\'')
      ++pos_;
    f.name = std::string(text_.substr(start, pos_ - start));
    if (accept('^')) {
      std::size_t at = position();
      std::string e = digits();
      if (e.size() > 5 || std::stoul(e) == 0 || std::stoul(e) > 65535)
        throw ParseError(at, "exponent must be a positive integer below 65536");
      f.exponent = static_cast<unsigned>(std::stoul(e));
    }
    return f;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text) {
  Lexer lex(text);
  std::vector<ParsedTerm> terms;
  if (lex.done())
    throw ParseError(0, "empty polynomial");
  bool negate_next = false;
  for (;;) {
    ParsedTerm term;
    term.position = lex.position();
    if (lex.accept('-'))
      negate_next = !negate_next;
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = lex.position();
      std::string num = lex.digits();
      std::string den = "1";
      if (lex.accept('/'))
        den = lex.digits();
      Integer d(den);
      if (d == 0)
        throw ParseError(at, "zero denominator");
      term.coefficient = Rational(Integer(num), d);
      term.coefficient.canonicalize();
      if (!lex.accept('*')) {
        // A bare constant term.
        if (negate_next)
          term.coefficient = -term.coefficient;
        negate_next = false;
        terms.push_back(std::move(term));
        if (lex.done())
          break;
        if (lex.accept('+'))
          continue;
        if (lex.peek() == '-')
          continue;
        throw ParseError(lex.position(), "expected '+' or '*'");
      }
    }
    term.factors.push_back(lex.factor());
    while (lex.accept('*'))
      term.factors.push_back(lex.factor());
    if (negate_next)
      term.coefficient = -term.coefficient;
    negate_next = false;
    terms.push_back(std::move(term));
    if (lex.done())
      break;
    if (lex.accept('+'))
      continue;
    if (lex.peek() == '-')
      continue;
    throw ParseError(lex.position(), "expected '+' between terms");
  }
  return terms;
}

} // namespace bhk
