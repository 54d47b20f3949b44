#include "bhk/toric.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace bhk {

std::string_view to_string(PointRole r) {
  switch (r) {
  case PointRole::Monomial:
    return "monomial";
  case PointRole::Cleaved:
    return "cleaved";
  case PointRole::Interior:
    return "interior";
  }
  return "?";
}

namespace {

void enumerate(const WeightSystem& w, const DiagonalGroup& g, std::size_t i,
               const Integer& left, IntVector& s, std::vector<IntVector>& out) {
  std::size_t n = w.size();
  if (i + 1 == n) {
    if (left % w.q[i] != 0)
      return;
    s[i] = left / w.q[i];
    if (is_invariant(s, g))
      out.push_back(s);
    return;
  }
  for (Integer v = left / w.q[i]; v >= 0; --v) {
    s[i] = v;
    enumerate(w, g, i + 1, left - v * w.q[i], s, out);
  }
}

IntMatrix points_matrix(const PointConfig& nu, const std::vector<std::size_t>& idx) {
  std::size_t m = nu.dimension();
  IntMatrix out(idx.size(), m);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < m; ++c)
      out(r, c) = nu.points[idx[r]][c];
  return out;
}

// Basis of the G-invariant vectors orthogonal to q: the lattice in which
// the affine hyperplane q . s = d is measured.
IntMatrix hyperplane_lattice(const PointConfig& nu) {
  IntMatrix inv = invariant_lattice(nu.group);
  IntMatrix col(inv.rows(), 1);
  for (std::size_t r = 0; r < inv.rows(); ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < inv.cols(); ++c)
      s += inv(r, c) * nu.weights.q[c];
    col(r, 0) = s;
  }
  return lattice_basis(left_kernel_lattice(col) * inv);
}

Integer volume_in(const PointConfig& nu, const IntMatrix& basis,
                  const std::vector<std::size_t>& simplex) {
  std::size_t n = simplex.size() - 1;
  IntMatrix coords(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    IntVector diff(nu.dimension());
    for (std::size_t c = 0; c < diff.size(); ++c)
      diff[c] = nu.points[simplex[i]][c] - nu.points[simplex[0]][c];
    auto x = lattice_coordinates(basis, diff);
    if (!x || x->size() != n)
      throw Error(ErrorCode::InvarianceViolation,
                  "simplex edge outside the invariant lattice");
    for (std::size_t c = 0; c < n; ++c)
      coords(i - 1, c) = (*x)[c];
  }
  return abs(determinant(coords));
}

int sign_det(const PointConfig& nu, const std::vector<std::size_t>& idx) {
  return sgn(determinant(points_matrix(nu, idx)));
}

struct Circuit {
  std::uint32_t pos = 0, neg = 0;
};

std::vector<Circuit> circuits(const PointConfig& nu) {
  std::size_t n = nu.size();
  if (n > 20)
    throw Error(ErrorCode::TooLarge, "circuit enumeration needs at most 20 points");
  std::vector<Circuit> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    auto bits = static_cast<std::size_t>(std::popcount(mask));
    if (bits < 2 || bits > nu.dimension() + 1)
      continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i))
        idx.push_back(i);
    IntMatrix ker = left_kernel_lattice(points_matrix(nu, idx));
    if (ker.rows() != 1)
      continue;
    Circuit c;
    bool full = true;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      int s = sgn(ker(0, j));
      if (s == 0)
        full = false;
      else if (s > 0)
        c.pos |= 1u << idx[j];
      else
        c.neg |= 1u << idx[j];
    }
    if (full)
      out.push_back(c);
  }
  return out;
}

// Placing (beneath-beyond) triangulation of all points, in index order.
std::vector<std::vector<std::size_t>> placing_triangulation(const PointConfig& nu) {
  std::size_t m = nu.dimension();
  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < nu.size() && base.size() < m; ++i) {
    auto trial = base;
    trial.push_back(i);
    if (rank(to_rational(points_matrix(nu, trial))) == trial.size())
      base = std::move(trial);
  }
  if (base.size() != m)
    throw Error(ErrorCode::DegenerateConfig, "points do not span the hyperplane");
  struct Facet {
    std::vector<std::size_t> v; // sorted
    std::size_t opposite;
  };
  std::vector<std::vector<std::size_t>> simplices{base};
  std::sort(simplices[0].begin(), simplices[0].end());
  std::vector<Facet> boundary;
  for (std::size_t j = 0; j < m; ++j) {
    Facet f;
    for (std::size_t i = 0; i < m; ++i)
      if (i != j)
        f.v.push_back(simplices[0][i]);
    f.opposite = simplices[0][j];
    boundary.push_back(std::move(f));
  }
  for (std::size_t p = 0; p < nu.size(); ++p) {
    if (std::ranges::find(base, p) != base.end())
      continue;
    std::vector<bool> visible(boundary.size(), false);
    for (std::size_t f = 0; f < boundary.size(); ++f) {
      auto with_p = boundary[f].v;
      with_p.push_back(p);
      auto with_o = boundary[f].v;
      with_o.push_back(boundary[f].opposite);
      int sp = sign_det(nu, with_p);
      visible[f] = sp != 0 && sp != sign_det(nu, with_o);
    }
    std::map<std::vector<std::size_t>, int> ridge_count;
    for (std::size_t f = 0; f < boundary.size(); ++f) {
      if (!visible[f])
        continue;
      for (std::size_t x = 0; x < boundary[f].v.size(); ++x) {
        auto r = boundary[f].v;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(x));
        ++ridge_count[r];
      }
    }
    std::vector<Facet> next;
    for (std::size_t f = 0; f < boundary.size(); ++f) {
      if (!visible[f]) {
        next.push_back(boundary[f]);
        continue;
      }
      auto s = boundary[f].v;
      s.push_back(p);
      std::sort(s.begin(), s.end());
      simplices.push_back(s);
      for (std::size_t x = 0; x < boundary[f].v.size(); ++x) {
        auto r = boundary[f].v;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(x));
        if (ridge_count[r] != 1)
          continue;
        Facet nf;
        nf.opposite = boundary[f].v[x];
        nf.v = r;
        nf.v.push_back(p);
        std::sort(nf.v.begin(), nf.v.end());
        next.push_back(std::move(nf));
      }
    }
    boundary = std::move(next);
  }
  return simplices;
}

} // namespace

std::vector<IntVector> anticanonical_invariant_monomials(const WeightSystem& w,
                                                         const DiagonalGroup& g) {
  std::vector<IntVector> out;
  if (w.size() == 0)
    return out;
  IntVector s(w.size());
  enumerate(w, g, 0, w.d, s, out);
  return out;
}

PointConfig make_point_config(std::vector<IntVector> points,
                              std::vector<PointRole> roles,
                              std::vector<std::string> names,
                              const WeightSystem& w, const DiagonalGroup& g,
                              std::size_t k) {
  PointConfig nu;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (points[p].size() != w.size())
      throw Error(ErrorCode::ShapeError, "point of the wrong length");
    Integer deg = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      deg += w.q[i] * points[p][i];
    if (deg != w.d)
      throw Error(ErrorCode::InvarianceViolation,
                  "point " + names[p] + " is off the hyperplane q.s = d");
    if (!is_invariant(points[p], g))
      throw Error(ErrorCode::InvarianceViolation,
                  "point " + names[p] + " is not invariant");
  }
  nu.points = std::move(points);
  nu.roles = std::move(roles);
  nu.names = std::move(names);
  nu.weights = w;
  nu.group = g;
  nu.k = k;
  return nu;
}

PointConfig build_nu(const Cleave& cl, const DiagonalGroup& g) {
  std::size_t n = cl.A.rows();
  bool a_has_arrow = cl.direction == CleaveDirection::ArrowRemoved;
  std::string yk = "y" + std::to_string(cl.k);
  std::vector<IntVector> pts;
  std::vector<PointRole> roles;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    pts.emplace_back(cl.A.row(i).begin(), cl.A.row(i).end());
    roles.push_back(PointRole::Monomial);
    names.push_back(i == cl.k && a_has_arrow ? yk + "'" : "y" + std::to_string(i));
  }
  pts.emplace_back(cl.A2.row(cl.k).begin(), cl.A2.row(cl.k).end());
  roles.push_back(PointRole::Cleaved);
  names.push_back(a_has_arrow ? yk : yk + "'");
  pts.emplace_back(n, Integer(1));
  roles.push_back(PointRole::Interior);
  names.emplace_back("u");
  return make_point_config(std::move(pts), std::move(roles), std::move(names),
                           positive_weight_solve(cl.A), g, cl.k);
}

namespace {

std::vector<std::vector<std::size_t>> side_triangulation(const PointConfig& nu,
                                                         std::vector<std::size_t> xi,
                                                         std::size_t extra) {
  std::size_t m = nu.dimension();
  RatMatrix bt = to_rational(points_matrix(nu, xi)).transpose();
  if (determinant(bt) == 0)
    throw Error(ErrorCode::DegenerateConfig, "the chart points are affinely dependent");
  auto to_rat = [](const IntVector& v) {
    RatVector r;
    for (const auto& x : v)
      r.emplace_back(x);
    return r;
  };
  RatVector lam = solve(bt, to_rat(nu.points[nu.interior()]));
  for (const auto& x : lam)
    if (sgn(x) <= 0)
      throw Error(ErrorCode::DegenerateConfig,
                  "the interior point is not inside the chart simplex");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i)
      if (i != j)
        s.push_back(xi[i]);
    s.push_back(nu.interior());
    out.push_back(std::move(s));
  }
  RatVector mu = solve(bt, to_rat(nu.points[extra]));
  for (std::size_t j = 0; j < m; ++j) {
    if (sgn(mu[j]) >= 0)
      continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i)
      if (i != j)
        s.push_back(xi[i]);
    s.push_back(extra);
    out.push_back(std::move(s));
  }
  for (auto& s : out)
    std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::pair<Triangulation, Triangulation> triangulation_pair(const PointConfig& nu) {
  std::size_t m = nu.dimension();
  if (nu.size() != m + 2)
    throw Error(ErrorCode::DegenerateConfig, "nu must have n+3 points");
  std::vector<std::size_t> xi, xi2;
  for (std::size_t i = 0; i < m; ++i) {
    xi.push_back(i);
    xi2.push_back(i == nu.k ? nu.cleaved() : i);
  }
  return {Triangulation{side_triangulation(nu, xi, nu.cleaved())},
          Triangulation{side_triangulation(nu, xi2, nu.k)}};
}

Integer normalized_volume(const PointConfig& nu,
                          const std::vector<std::size_t>& simplex) {
  return volume_in(nu, hyperplane_lattice(nu), simplex);
}

TriangulationCheck verify_triangulation(const PointConfig& nu,
                                        const Triangulation& t) {
  TriangulationCheck out;
  std::size_t m = nu.dimension();
  auto fail = [&](std::string why) {
    out.ok = false;
    out.violation = std::move(why);
    return out;
  };
  if (t.simplices.empty())
    return fail("empty");
  std::vector<std::uint32_t> masks;
  for (const auto& s : t.simplices) {
    if (s.size() != m)
      return fail("simplex-size");
    std::uint32_t mask = 0;
    for (std::size_t i : s) {
      if (i >= nu.size() || (mask & (1u << i)))
        return fail("bad-index");
      mask |= 1u << i;
    }
    if (std::ranges::find(masks, mask) != masks.end())
      return fail("duplicate-simplex");
    masks.push_back(mask);
    if (sign_det(nu, s) == 0)
      return fail("degenerate-simplex");
  }
  auto circ = circuits(nu);
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = a + 1; b < masks.size(); ++b)
      for (const auto& c : circ) {
        bool split = ((c.pos & ~masks[a]) == 0 && (c.neg & ~masks[b]) == 0) ||
                     ((c.neg & ~masks[a]) == 0 && (c.pos & ~masks[b]) == 0);
        if (split)
          return fail("improper-intersection");
      }
  IntMatrix basis = hyperplane_lattice(nu);
  Integer sum = 0;
  for (const auto& s : t.simplices) {
    out.volumes.push_back(volume_in(nu, basis, s));
    sum += out.volumes.back();
  }
  for (const auto& s : placing_triangulation(nu))
    out.total += volume_in(nu, basis, s);
  if (sum < out.total)
    return fail("volume-deficit");
  if (sum > out.total)
    return fail("volume-excess");
  out.ok = true;
  return out;
}

MonomialIdeal minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), GrevlexGreater{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant)
      out.generators.push_back(gens[i]);
  }
  return out;
}

std::vector<std::string> MonomialIdeal::to_strings(const Ring& ring) const {
  std::vector<std::string> out;
  for (const auto& g : generators)
    out.push_back(format_monomial(g, ring));
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::ranges::any_of(generators,
                             [&](const Monomial& g) { return divides(g, m); });
}

namespace {

MonomialIdeal complement_ideal(const PointConfig& nu, const Triangulation& t,
                               bool interior_only) {
  std::vector<Monomial> gens;
  for (const auto& s : t.simplices) {
    if (interior_only && std::ranges::find(s, nu.interior()) == s.end())
      continue;
    Monomial mono;
    for (std::size_t p = 0; p < nu.size(); ++p)
      if (std::ranges::find(s, p) == s.end())
        mono.set(p, 1);
    gens.push_back(mono);
  }
  return minimalize(std::move(gens));
}

} // namespace

MonomialIdeal irrelevant_ideal(const PointConfig& nu, const Triangulation& t) {
  return complement_ideal(nu, t, false);
}

MonomialIdeal subideal_J(const PointConfig& nu, const Triangulation& t) {
  return complement_ideal(nu, t, true);
}

Polynomial superpotential(const PointConfig& nu, const RatVector& b,
                          const Rational& c) {
  std::size_t m = nu.dimension();
  if (b.size() != m)
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(m) + " b coefficients");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < m; ++i) {
    Monomial mono = Monomial::variable(nu.interior());
    for (std::size_t p = 0; p < nu.interior(); ++p)
      mono.set(p, static_cast<unsigned>(nu.points[p][i].get_ui()));
    terms.push_back({mono, b[i]});
  }
  Monomial all = Monomial::variable(nu.interior());
  for (std::size_t p = 0; p < nu.interior(); ++p)
    all.set(p, 1);
  terms.push_back({all, c});
  std::erase_if(terms, [](const Term& t) { return t.c == 0; });
  return Polynomial::from_terms(std::move(terms));
}

Polynomial restrict_to_chart(const Polynomial& w, const PointConfig& nu,
                             ChartSide side) {
  std::size_t excluded = side == ChartSide::Xi ? nu.cleaved() : nu.k;
  return w.substitute(nu.interior(), 1).substitute(excluded, 1);
}

} // namespace bhk
