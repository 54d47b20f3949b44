#include "bhk/invertible.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "bhk/symmetry.hpp"
#include "bhk/term_parser.hpp"

namespace bhk {

InvertiblePolynomial::InvertiblePolynomial(IntMatrix a, RatVector b,
                                           std::vector<std::string> names)
    : A(std::move(a)), coeffs(std::move(b)), var_names(std::move(names)) {
  if (!A.square())
    throw Error(ErrorCode::ShapeError,
                "exponent matrix must be square, got " +
                    std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
  std::size_t n = A.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (A(i, j) < 0)
        throw Error(ErrorCode::InvalidArgument, "negative exponent");
  if (coeffs.empty())
    coeffs.assign(n, Rational(1));
  if (coeffs.size() != n)
    throw Error(ErrorCode::ShapeError, "one coefficient per monomial expected");
  for (const auto& c : coeffs)
    if (c == 0)
      throw Error(ErrorCode::InvalidArgument, "zero coefficient");
  if (var_names.empty())
    for (std::size_t i = 0; i < n; ++i)
      var_names.push_back("x" + std::to_string(i));
  if (var_names.size() != n)
    throw Error(ErrorCode::ShapeError, "one name per variable expected");
}

InvertiblePolynomial parse_polynomial(std::string_view text) {
  auto terms = parse_terms(text);
  std::map<std::size_t, std::size_t> seen;
  std::vector<std::map<std::size_t, unsigned>> rows;
  RatVector coeffs;
  for (const auto& term : terms) {
    std::map<std::size_t, unsigned> row;
    for (const auto& f : term.factors) {
      if (f.name.size() < 2 || f.name.size() > 6 || f.name[0] != 'x' ||
          f.name.find_first_not_of("0123456789", 1) != std::string::npos)
        throw ParseError(f.position, "expected a variable x<i>, got " + f.name);
      std::size_t idx = std::stoul(f.name.substr(1));
      row[idx] += f.exponent;
      seen.emplace(idx, f.position);
    }
    if (row.empty())
      throw ParseError(term.position, "constant term in an invertible polynomial");
    if (term.coefficient == 0)
      throw ParseError(term.position, "zero coefficient");
    rows.push_back(std::move(row));
    coeffs.push_back(term.coefficient);
  }
  std::size_t nvars = seen.rbegin()->first + 1;
  if (seen.size() != nvars) {
    for (std::size_t i = 0; i < nvars; ++i)
      if (!seen.contains(i))
        throw ParseError(text.size(),
                         "variables must be x0..x" + std::to_string(nvars - 1) +
                             " without gaps, x" + std::to_string(i) + " missing");
  }
  if (rows.size() != nvars)
    throw Error(ErrorCode::ShapeError,
                std::to_string(rows.size()) + " monomials in " +
                    std::to_string(nvars) + " variables");
  IntMatrix a(nvars, nvars);
  for (std::size_t r = 0; r < nvars; ++r)
    for (auto [v, e] : rows[r])
      a(r, v) = e;
  return InvertiblePolynomial(std::move(a), std::move(coeffs));
}

std::string format_polynomial(const InvertiblePolynomial& p,
                              std::string_view prefix) {
  std::string out;
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (r > 0)
      out += " + ";
    bool first = true;
    if (p.coeffs[r] != 1) {
      out += p.coeffs[r].get_str() + "*";
    }
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (p.A(r, c) == 0)
        continue;
      if (!first)
        out += "*";
      first = false;
      out += std::string(prefix) + std::to_string(c);
      if (p.A(r, c) != 1)
        out += "^" + p.A(r, c).get_str();
    }
  }
  return out;
}

std::string_view to_string(AtomicKind kind) {
  switch (kind) {
  case AtomicKind::Fermat:
    return "Fermat";
  case AtomicKind::Chain:
    return "Chain";
  case AtomicKind::Loop:
    return "Loop";
  }
  return "?";
}

std::string AtomicPart::to_string() const {
  std::string out(bhk::to_string(kind));
  out += "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i)
      out += ",";
    out += exponents[i].get_str();
  }
  return out + ")";
}

std::string AtomicDecomposition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += " + ";
    out += parts[i].to_string();
  }
  return out;
}

namespace {

struct RowShape {
  std::vector<std::size_t> support;
};

// Assigns each row a leading variable so that the remaining entry, if any,
// is an exponent-1 arrow target and the arrow digraph has in/out degree <= 1.
class Assigner {
public:
  Assigner(const IntMatrix& a, std::vector<RowShape> shapes)
      : a_(a), shapes_(std::move(shapes)), own_(a.rows()),
        used_(a.rows(), false) {}

  std::optional<std::vector<std::size_t>> run() {
    if (search(0))
      return own_;
    return std::nullopt;
  }

private:
  bool candidate(std::size_t r, std::size_t v) const {
    if (used_[v])
      return false;
    const auto& s = shapes_[r].support;
    if (s.size() == 1)
      return a_(r, v) >= 2;
    std::size_t other = s[0] == v ? s[1] : s[0];
    return a_(r, other) == 1;
  }

  bool search(std::size_t r) {
    std::size_t n = a_.rows();
    if (r == n)
      return valid();
    std::vector<std::size_t> order;
    if (std::ranges::find(shapes_[r].support, r) != shapes_[r].support.end())
      order.push_back(r);
    for (auto v : shapes_[r].support)
      if (v != r)
        order.push_back(v);
    for (auto v : order) {
      if (!candidate(r, v))
        continue;
      used_[v] = true;
      own_[r] = v;
      if (search(r + 1))
        return true;
      used_[v] = false;
    }
    return false;
  }

  bool valid() const {
    std::size_t n = a_.rows();
    std::vector<int> indeg(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      const auto& s = shapes_[r].support;
      if (s.size() == 2) {
        std::size_t other = s[0] == own_[r] ? s[1] : s[0];
        if (++indeg[other] > 1)
          return false;
      }
    }
    return true;
  }

  const IntMatrix& a_;
  std::vector<RowShape> shapes_;
  std::vector<std::size_t> own_;
  std::vector<bool> used_;
};

} // namespace

AtomicDecomposition classify(const IntMatrix& a) {
  if (!a.square())
    throw Error(ErrorCode::ShapeError, "exponent matrix must be square");
  std::size_t n = a.rows();
  std::vector<RowShape> shapes(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a(r, c) < 0)
        throw Error(ErrorCode::NotInvertibleShape, "negative exponent");
      if (a(r, c) != 0)
        shapes[r].support.push_back(c);
    }
    if (shapes[r].support.empty() || shapes[r].support.size() > 2)
      throw Error(ErrorCode::NotInvertibleShape,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(shapes[r].support.size()) +
                      " nonzero entries");
  }
  if (determinant(a) == 0)
    throw Error(ErrorCode::SingularMatrix, "exponent matrix is singular");

  auto own = Assigner(a, shapes).run();
  if (!own)
    throw Error(ErrorCode::NotInvertibleShape,
                "monomials do not form disjoint Fermat, chain and loop parts");

  AtomicDecomposition out;
  out.row_of_var.assign(n, 0);
  std::vector<std::optional<std::size_t>> next(n);
  std::vector<bool> has_pred(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t v = (*own)[r];
    out.row_of_var[v] = r;
    const auto& s = shapes[r].support;
    if (s.size() == 2) {
      std::size_t other = s[0] == v ? s[1] : s[0];
      next[v] = other;
      has_pred[other] = true;
    }
  }

  std::vector<bool> visited(n, false);
  auto walk = [&](std::size_t start, AtomicPart& part) {
    std::size_t v = start;
    for (;;) {
      visited[v] = true;
      part.vars.push_back(v);
      part.rows.push_back(out.row_of_var[v]);
      part.exponents.push_back(a(out.row_of_var[v], v));
      if (!next[v] || *next[v] == start)
        break;
      v = *next[v];
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (visited[v] || has_pred[v])
      continue;
    AtomicPart part;
    walk(v, part);
    part.kind = part.vars.size() == 1 ? AtomicKind::Fermat : AtomicKind::Chain;
    out.parts.push_back(std::move(part));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (visited[v])
      continue;
    AtomicPart part;
    walk(v, part);
    part.kind = AtomicKind::Loop;
    out.parts.push_back(std::move(part));
  }
  for (const auto& part : out.parts) {
    // The last variable of a chain (or a Fermat) needs exponent >= 2,
    // otherwise the origin is not a critical point.
    if (part.kind != AtomicKind::Loop && part.exponents.back() < 2)
      throw Error(ErrorCode::NotInvertibleShape,
                  "variable x" + std::to_string(part.vars.back()) +
                      " appears linearly");
  }
  std::ranges::sort(out.parts, [](const AtomicPart& x, const AtomicPart& y) {
    return std::ranges::min(x.vars) < std::ranges::min(y.vars);
  });
  return out;
}

AtomicDecomposition classify(const InvertiblePolynomial& p) {
  return classify(p.A);
}

InvertiblePolynomial normalize_rows(const InvertiblePolynomial& p) {
  auto dec = classify(p);
  std::size_t n = p.size();
  IntMatrix a(n, n);
  RatVector b(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = dec.row_of_var[v];
    for (std::size_t c = 0; c < n; ++c)
      a(v, c) = p.A(r, c);
    b[v] = p.coeffs[r];
  }
  return InvertiblePolynomial(std::move(a), std::move(b), p.var_names);
}

InvertiblePolynomial transpose(const InvertiblePolynomial& p) {
  return InvertiblePolynomial(p.A.transpose(), p.coeffs, p.var_names);
}

Rational calabi_yau_index(const IntMatrix& a) {
  auto inv = rational_inverse(a);
  Rational sum = 0;
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j)
      sum += inv(i, j);
  return sum;
}

bool is_calabi_yau(const IntMatrix& a) { return calabi_yau_index(a) == 1; }

bool is_fano_calabi_yau(const IntMatrix& a) {
  Rational s = calabi_yau_index(a);
  return s.get_den() == 1 && s > 0;
}

bool is_gorenstein(const WeightSystem& w, const DiagonalGroup& g) {
  if (g.dimension() != w.size())
    throw Error(ErrorCode::ShapeError, "group and weights differ in size");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.d % w.q[i] != 0)
      return false;
    IntVector s(w.size(), Integer(0));
    s[i] = w.d / w.q[i];
    if (!is_invariant(s, g))
      return false;
  }
  return true;
}

Diagram Diagram::reversed() const {
  Diagram out{labels, {}};
  for (auto [from, to] : arrows)
    out.arrows.emplace_back(to, from);
  std::ranges::sort(out.arrows);
  return out;
}

std::string Diagram::to_dot() const {
  std::ostringstream os;
  os << "digraph F {\n";
  for (std::size_t v = 0; v < labels.size(); ++v)
    os << "  x" << v << " [label=\"" << labels[v] << "\"];\n";
  for (auto [from, to] : arrows)
    os << "  x" << from << " -> x" << to << ";\n";
  os << "}\n";
  return os.str();
}

Diagram diagram(const IntMatrix& a) {
  auto dec = classify(a);
  Diagram out;
  out.labels.assign(a.rows(), Integer(0));
  for (const auto& part : dec.parts) {
    for (std::size_t i = 0; i < part.vars.size(); ++i) {
      out.labels[part.vars[i]] = part.exponents[i];
      if (part.kind == AtomicKind::Fermat)
        continue;
      if (i + 1 < part.vars.size())
        out.arrows.emplace_back(part.vars[i], part.vars[i + 1]);
      else if (part.kind == AtomicKind::Loop)
        out.arrows.emplace_back(part.vars[i], part.vars[0]);
    }
  }
  std::ranges::sort(out.arrows);
  return out;
}

Diagram diagram(const InvertiblePolynomial& p) { return diagram(p.A); }

} // namespace bhk
