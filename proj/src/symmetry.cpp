#include "bhk/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "bhk/invertible.hpp"

namespace bhk {

Phase reduce_phase(const Phase& p) {
  Phase out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i] = frac(p[i]);
  return out;
}

DiagonalGroup::DiagonalGroup(std::size_t m)
    : m_(m), exponent_(1), hnf_(IntMatrix::identity(m)), order_(1) {}

DiagonalGroup DiagonalGroup::generated_by(std::size_t m,
                                          const std::vector<Phase>& generators) {
  std::vector<Phase> reduced;
  RatVector all;
  for (const auto& g : generators) {
    if (g.size() != m)
      throw Error(ErrorCode::ShapeError, "generator has " +
                                             std::to_string(g.size()) +
                                             " phases, expected " +
                                             std::to_string(m));
    reduced.push_back(reduce_phase(g));
    all.insert(all.end(), reduced.back().begin(), reduced.back().end());
  }
  Integer d = lcm_of_denominators(all);
  IntMatrix basis(reduced.size(), m);
  for (std::size_t r = 0; r < reduced.size(); ++r)
    for (std::size_t c = 0; c < m; ++c) {
      Rational v = reduced[r][c] * d;
      basis(r, c) = v.get_num();
    }
  return from_lattice(d, basis);
}

DiagonalGroup DiagonalGroup::from_lattice(const Integer& exponent,
                                          const IntMatrix& basis) {
  if (exponent <= 0)
    throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  std::size_t m = basis.cols();
  IntMatrix stacked(basis.rows() + m, m);
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t c = 0; c < m; ++c)
      stacked(r, c) = basis(r, c);
  for (std::size_t c = 0; c < m; ++c)
    stacked(basis.rows() + c, c) = exponent;
  IntMatrix h = lattice_basis(stacked);

  // Shrink the exponent to the true one (lcm of element orders).
  Integer g = exponent;
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < m; ++c)
      g = gcd(g, h(r, c));
  DiagonalGroup out;
  out.m_ = m;
  out.exponent_ = exponent / g;
  out.hnf_ = IntMatrix(m, m);
  Integer det = 1;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c)
      out.hnf_(r, c) = h(r, c) / g;
    det *= out.hnf_(r, r);
  }
  Integer full = 1;
  for (std::size_t i = 0; i < m; ++i)
    full *= out.exponent_;
  out.order_ = full / det;
  for (std::size_t r = 0; r < m; ++r) {
    Phase p(m);
    bool nonzero = false;
    for (std::size_t c = 0; c < m; ++c) {
      p[c] = frac(Rational(out.hnf_(r, c), out.exponent_));
      nonzero = nonzero || p[c] != 0;
    }
    if (nonzero)
      out.generators_.push_back(std::move(p));
  }
  return out;
}

IntMatrix DiagonalGroup::lattice_at(const Integer& scale) const {
  if (scale % exponent_ != 0)
    throw Error(ErrorCode::InvalidArgument,
                "lattice scale must be a multiple of the exponent");
  Integer f = scale / exponent_;
  IntMatrix out = hnf_;
  for (std::size_t r = 0; r < m_; ++r)
    for (std::size_t c = 0; c < m_; ++c)
      out(r, c) *= f;
  return out;
}

bool DiagonalGroup::contains(const Phase& g) const {
  if (g.size() != m_)
    throw Error(ErrorCode::ShapeError, "phase length differs from group");
  Integer e = exponent_;
  for (const auto& x : g)
    e = lcm(e, Integer(x.get_den()));
  IntMatrix l = lattice_at(e);
  IntVector v(m_);
  for (std::size_t i = 0; i < m_; ++i) {
    Rational x = g[i] * e;
    v[i] = x.get_num();
  }
  return lattice_coordinates(l, v).has_value();
}

bool DiagonalGroup::contains(const DiagonalGroup& h) const {
  if (h.m_ != m_)
    throw Error(ErrorCode::ShapeError, "groups act on different dimensions");
  return std::ranges::all_of(h.generators_,
                             [&](const Phase& g) { return contains(g); });
}

std::vector<Phase> DiagonalGroup::elements(std::size_t limit) const {
  if (order_ > limit)
    throw Error(ErrorCode::TooLarge,
                "group of order " + order_.get_str() + " exceeds " +
                    std::to_string(limit));
  std::set<Phase> seen{Phase(m_, Rational(0))};
  std::deque<Phase> todo{Phase(m_, Rational(0))};
  while (!todo.empty()) {
    Phase x = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : generators_) {
      Phase y(m_);
      for (std::size_t i = 0; i < m_; ++i)
        y[i] = frac(x[i] + g[i]);
      if (seen.insert(y).second)
        todo.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

std::string DiagonalGroup::to_string() const {
  std::ostringstream os;
  os << "order " << order_ << ", generators";
  if (generators_.empty())
    os << " none";
  for (const auto& g : generators_) {
    os << " (";
    for (std::size_t i = 0; i < g.size(); ++i)
      os << (i ? "," : "") << g[i];
    os << ")";
  }
  return os.str();
}

bool operator<(const DiagonalGroup& a, const DiagonalGroup& b) {
  if (a.order_ != b.order_)
    return a.order_ < b.order_;
  if (a.m_ != b.m_)
    return a.m_ < b.m_;
  if (a.exponent_ != b.exponent_)
    return a.exponent_ < b.exponent_;
  for (std::size_t r = 0; r < a.m_; ++r)
    for (std::size_t c = 0; c < a.m_; ++c)
      if (a.hnf_(r, c) != b.hnf_(r, c))
        return a.hnf_(r, c) < b.hnf_(r, c);
  return false;
}

namespace {

void require_same_dimension(const DiagonalGroup& a, const DiagonalGroup& b) {
  if (a.dimension() != b.dimension())
    throw Error(ErrorCode::ShapeError, "groups act on different dimensions");
}

// Rows of h (a sublattice basis) expressed in the basis g.
IntMatrix coordinates_in(const IntMatrix& g, const IntMatrix& h) {
  IntMatrix out(h.rows(), g.rows());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    auto c = lattice_coordinates(g, h.row(r));
    if (!c)
      throw Error(ErrorCode::NotSubgroup, "lattice is not contained");
    for (std::size_t j = 0; j < g.rows(); ++j)
      out(r, j) = (*c)[j];
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out;
  for (Integer k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n)
        out.push_back(n / k);
    }
  std::ranges::sort(out);
  return out;
}

} // namespace

DiagonalGroup intersect(const DiagonalGroup& a, const DiagonalGroup& b) {
  require_same_dimension(a, b);
  std::size_t m = a.dimension();
  Integer e = lcm(a.exponent(), b.exponent());
  IntMatrix la = a.lattice_at(e), lb = b.lattice_at(e);
  IntMatrix big(2 * m, 2 * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      big(r, c) = la(r, c);
      big(r, m + c) = la(r, c);
      big(m + r, c) = lb(r, c);
    }
  IntMatrix h = hermite_normal_form(big).H;
  IntMatrix meet(m, m);
  std::size_t k = 0;
  for (std::size_t r = 0; r < h.rows() && k < m; ++r) {
    bool head_zero = true;
    for (std::size_t c = 0; c < m; ++c)
      head_zero = head_zero && h(r, c) == 0;
    bool tail_zero = true;
    for (std::size_t c = 0; c < m; ++c)
      tail_zero = tail_zero && h(r, m + c) == 0;
    if (head_zero && !tail_zero) {
      for (std::size_t c = 0; c < m; ++c)
        meet(k, c) = h(r, m + c);
      ++k;
    }
  }
  return DiagonalGroup::from_lattice(e, meet);
}

DiagonalGroup join(const DiagonalGroup& a, const DiagonalGroup& b) {
  require_same_dimension(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return DiagonalGroup::generated_by(a.dimension(), gens);
}

DiagonalGroup character_kernel(const DiagonalGroup& g,
                               std::span<const Integer> w) {
  std::size_t m = g.dimension();
  if (w.size() != m)
    throw Error(ErrorCode::ShapeError, "character length differs from group");
  const IntMatrix& b = g.canonical_form();
  IntMatrix col(m + 1, 1);
  for (std::size_t r = 0; r < m; ++r) {
    Integer v = 0;
    for (std::size_t c = 0; c < m; ++c)
      v += b(r, c) * w[c];
    col(r, 0) = v;
  }
  col(m, 0) = g.exponent();
  IntMatrix ker = left_kernel_lattice(col);
  IntMatrix coeffs(ker.rows(), m);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t c = 0; c < m; ++c)
      coeffs(r, c) = ker(r, c);
  return DiagonalGroup::from_lattice(g.exponent(), coeffs * b);
}

DiagonalGroup aut_diag(const IntMatrix& a) {
  RatMatrix inv = rational_inverse(a);
  std::vector<Phase> gens;
  for (std::size_t c = 0; c < inv.cols(); ++c)
    gens.push_back(inv.column(c));
  return DiagonalGroup::generated_by(a.rows(), gens);
}

DiagonalGroup sl_group(const IntMatrix& a) {
  IntVector ones(a.rows(), Integer(1));
  return character_kernel(aut_diag(a), ones);
}

DiagonalGroup j_group(const IntMatrix& a) {
  RatMatrix inv = rational_inverse(a);
  Phase g(a.rows(), Rational(0));
  for (std::size_t r = 0; r < inv.rows(); ++r)
    for (std::size_t c = 0; c < inv.cols(); ++c)
      g[r] += inv(r, c);
  return DiagonalGroup::generated_by(a.rows(), {g});
}

bool is_invariant(std::span<const Integer> s, const DiagonalGroup& g) {
  if (s.size() != g.dimension())
    throw Error(ErrorCode::ShapeError, "exponent length differs from group");
  for (const auto& gen : g.generators()) {
    Rational sum = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      sum += gen[i] * s[i];
    if (sum.get_den() != 1)
      return false;
  }
  return true;
}

IntMatrix invariant_lattice(const DiagonalGroup& g) {
  std::size_t m = g.dimension();
  RatMatrix inv = rational_inverse(g.canonical_form());
  IntMatrix basis(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      Rational v = inv(c, r) * g.exponent();
      if (v.get_den() != 1)
        throw Error(ErrorCode::InvarianceViolation,
                    "invariant lattice is not integral");
      basis(r, c) = v.get_num();
    }
  return lattice_basis(basis);
}

DiagonalGroup dual_group(const IntMatrix& a, const DiagonalGroup& g) {
  if (g.dimension() != a.rows())
    throw Error(ErrorCode::ShapeError, "group and matrix differ in size");
  if (!aut_diag(a).contains(g))
    throw Error(ErrorCode::NotSubgroup,
                "group is not contained in the diagonal automorphisms");
  RatMatrix inv = rational_inverse(a);
  IntMatrix l = invariant_lattice(g);
  // prod_j (rho_j^T)^{s_j} with rho_j^T the j-th row of A^{-1}.
  std::vector<Phase> gens;
  for (std::size_t r = 0; r < l.rows(); ++r) {
    RatVector s(l.cols());
    for (std::size_t c = 0; c < l.cols(); ++c)
      s[c] = l(r, c);
    gens.push_back(row_times(s, inv));
  }
  return DiagonalGroup::generated_by(a.rows(), gens);
}

std::vector<DiagonalGroup> admissible_groups(const IntMatrix& a,
                                             const IntMatrix& a2,
                                             const Integer& bound) {
  if (a.rows() != a2.rows())
    throw Error(ErrorCode::ShapeError, "matrices differ in size");
  DiagonalGroup j = j_group(a);
  if (j != j_group(a2))
    throw Error(ErrorCode::JMismatch,
                "exponential grading groups differ: " + j.to_string() +
                    " vs " + j_group(a2).to_string());
  DiagonalGroup top = intersect(sl_group(a), sl_group(a2));
  if (!top.contains(j))
    return {};

  std::size_t m = a.rows();
  Integer e = top.exponent();
  IntMatrix bs = top.canonical_form();
  IntMatrix coords = coordinates_in(bs, j.lattice_at(e));
  SmithForm snf = smith_normal_form(coords);
  IntVector d = snf.diagonal();
  Integer total = 1;
  for (const auto& x : d)
    total *= x;
  if (total > bound)
    throw Error(ErrorCode::TooLarge, "quotient of order " + total.get_str() +
                                         " exceeds bound " + bound.get_str());
  IntMatrix basis = snf.V_inverse * bs; // Lambda_J = diag(d) * basis

  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m; ++i)
    if (d[i] > 1)
      idx.push_back(i);
  std::size_t r = idx.size();

  std::vector<DiagonalGroup> out;
  IntMatrix h(r, r);
  std::size_t visited = 0;
  const std::size_t visit_limit = 50000000;

  auto emit = [&]() {
    for (std::size_t i = 0; i < r; ++i) {
      IntVector v(r, Integer(0));
      v[i] = d[idx[i]];
      if (!lattice_coordinates(h, v))
        return;
    }
    IntMatrix k = IntMatrix::identity(m);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t c = 0; c < m; ++c)
        k(idx[i], c) = 0;
      for (std::size_t c = 0; c < r; ++c)
        k(idx[i], idx[c]) = h(i, c);
    }
    out.push_back(DiagonalGroup::from_lattice(e, k * basis));
  };

  // Fill columns left to right: pivot h(c,c) | d, then entries above it.
  std::vector<std::vector<Integer>> divs;
  for (auto i : idx)
    divs.push_back(divisors(d[i]));
  auto above = [&](auto&& self, std::size_t col, std::size_t row) -> void {
    if (++visited > visit_limit)
      throw Error(ErrorCode::TooLarge, "subgroup enumeration too large");
    if (row == col) {
      if (col + 1 == r) {
        emit();
        return;
      }
      for (const auto& p : divs[col + 1]) {
        h(col + 1, col + 1) = p;
        self(self, col + 1, 0);
      }
      return;
    }
    for (Integer v = 0; v < h(col, col); ++v) {
      h(row, col) = v;
      self(self, col, row + 1);
    }
    h(row, col) = 0;
  };
  if (r == 0) {
    emit();
  } else {
    for (const auto& p : divs[0]) {
      h(0, 0) = p;
      above(above, 0, 0);
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroupQuotient group_quotient_structure(const DiagonalGroup& g,
                                       const DiagonalGroup& h) {
  require_same_dimension(g, h);
  if (!g.contains(h))
    throw Error(ErrorCode::NotSubgroup, "H is not a subgroup of G");
  Integer e = g.exponent();
  IntMatrix bg = g.canonical_form();
  IntMatrix coords = coordinates_in(bg, h.lattice_at(e));
  GroupQuotient out;
  out.structure = cokernel(coords);
  out.structure.generator_lifts = out.structure.generator_lifts * bg;
  out.lift_denominator = e;
  return out;
}

DiagonalGroup parse_group(std::size_t m, std::string_view text) {
  std::vector<Phase> gens;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos)
      end = text.size();
    std::string line(text.substr(offset, end - offset));
    std::size_t hash = line.find('#');
    if (hash != std::string::npos)
      line.resize(hash);
    Phase p;
    std::size_t pos = 0;
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    while (!blank) {
      std::size_t comma = line.find(',', pos);
      std::string item = line.substr(pos, comma == std::string::npos
                                              ? std::string::npos
                                              : comma - pos);
      item.erase(0, item.find_first_not_of(" \t\r"));
      item.erase(item.find_last_not_of(" \t\r") + 1);
      Rational q;
      if (item.empty() || q.set_str(item, 10) != 0 || q.get_den() == 0)
        throw ParseError(offset + pos, "expected a phase p/q, got '" + item + "'");
      q.canonicalize();
      p.push_back(q);
      if (comma == std::string::npos)
        break;
      pos = comma + 1;
    }
    if (!blank) {
      if (p.size() != m)
        throw Error(ErrorCode::ShapeError,
                    "generator with " + std::to_string(p.size()) +
                        " phases, expected " + std::to_string(m));
      gens.push_back(std::move(p));
    }
    offset = end + 1;
  }
  return DiagonalGroup::generated_by(m, gens);
}

std::string format_group(const DiagonalGroup& g) {
  std::string out;
  for (const auto& gen : g.generators()) {
    for (std::size_t i = 0; i < gen.size(); ++i) {
      if (i)
        out += ",";
      out += gen[i].get_str();
    }
    out += "\n";
  }
  return out;
}

} // namespace bhk
