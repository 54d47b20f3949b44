#include "bhk/polynomial.hpp"

#include <algorithm>

#include "bhk/term_parser.hpp"

namespace bhk {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    throw Error(ErrorCode::ResourceLimit,
                std::to_string(names_.size()) + " variables exceed the limit of " +
                    std::to_string(kMaxVars));
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw Error(ErrorCode::InvalidArgument, "duplicate variable " + names_[i]);
}

std::optional<std::size_t> Ring::index_of(std::string_view n) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n)
      return i;
  return std::nullopt;
}

Ring Ring::extended(const std::string& name) const {
  auto names = names_;
  names.push_back(name);
  return Ring(std::move(names));
}

Polynomial Polynomial::constant(const Rational& c) {
  return term(Monomial{}, c);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0)
    p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t i) {
  return term(Monomial::variable(i));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_compare(a.m, b.m) > 0;
  });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m)
      p.terms_.back().c += t.c;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().c == 0)
      p.terms_.pop_back();
  }
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_)
    d = std::max<unsigned>(d, t.m.deg);
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_)
    d = std::max<unsigned>(d, t.m[var]);
  return d;
}

namespace {

// out = a + s * b (s = +1 or -1), both sorted.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        bool negate) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size()   ? -1
              : j == b.size() ? 1
                              : grevlex_compare(a[i].m, b[j].m);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
      if (negate)
        out.back().c = -out.back().c;
    } else {
      Rational c = a[i].c;
      if (negate)
        c -= b[j].c;
      else
        c += b[j].c;
      if (c != 0)
        out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Term> all;
  all.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      all.push_back({s.m * t.m, s.c * t.c});
  return Polynomial::from_terms(std::move(all));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0)
    return {};
  Polynomial p = *this;
  for (auto& t : p.terms_)
    t.c *= c;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0)
    return {};
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    p.terms_.push_back({t.m * m, t.c * c});
  return p;
}

void Polynomial::subtract_multiple(const Polynomial& g, const Monomial& m,
                                   const Rational& c) {
  if (c == 0 || g.is_zero())
    return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& a = terms_;
  const auto& b = g.terms_;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial bm = b[j].m * m;
    int cmp = i == a.size() ? -1 : grevlex_compare(a[i].m, bm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({bm, -(b[j].c * c)});
      ++j;
    } else {
      Rational v = a[i].c - b[j].c * c;
      if (v != 0)
        out.push_back({bm, std::move(v)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1), base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero())
    return {};
  return scaled(1 / leading().c);
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned k = t.m[var];
    if (k == 0)
      continue;
    Monomial m = t.m;
    m.set(var, k - 1);
    out.push_back({m, t.c * k});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned k = t.m[var];
    Monomial m = t.m;
    m.set(var, 0);
    Rational c = t.c;
    for (unsigned i = 0; i < k; ++i)
      c *= v;
    if (c != 0)
      out.push_back({m, c});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::coefficient_of(std::size_t var, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.m[var] != k)
      continue;
    Monomial m = t.m;
    m.set(var, 0);
    out.push_back({m, t.c});
  }
  return from_terms(std::move(out));
}

std::string format_monomial(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += "*";
    out += i < ring.size() ? ring.name(i) : "v" + std::to_string(i);
    if (m[i] != 1)
      out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string(const Ring& ring) const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational c = t.c;
    if (i == 0) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    }
    if (t.m.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1)
        out += c.get_str() + "*";
      out += format_monomial(t.m, ring);
    }
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text, const Ring& ring) {
  std::string trimmed(text);
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (trimmed == "0")
    return {};
  std::vector<Term> terms;
  for (const auto& pt : parse_terms(text)) {
    Monomial m;
    for (const auto& f : pt.factors) {
      auto idx = ring.index_of(f.name);
      if (!idx)
        throw ParseError(f.position, "unknown variable " + f.name);
      m.set(*idx, m[*idx] + f.exponent);
    }
    terms.push_back({m, pt.coefficient});
  }
  return from_terms(std::move(terms));
}

} // namespace bhk
