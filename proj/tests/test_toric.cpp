#include "doctest.h"

#include <random>

#include "bhk/invertible.hpp"
#include "bhk/toric.hpp"
#include "random_poly.hpp"

using namespace bhk;

namespace {

const IntMatrix kCubicChain{{3, 0, 0}, {0, 2, 1}, {0, 0, 3}};
const IntMatrix kCubicFermat{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}};

PointConfig cubic_nu() {
  auto det = detect_cleave(kCubicChain, kCubicFermat);
  REQUIRE(det.cleave);
  return build_nu(*det.cleave, j_group(kCubicChain));
}

MonomialIdeal ideal_from(const std::vector<std::string>& gens, const Ring& r) {
  std::vector<Monomial> m;
  for (const auto& g : gens)
    m.push_back(Polynomial::parse(g, r).leading().m);
  return minimalize(m);
}

// Every Gorenstein cleave obtainable by deleting one arrow.
std::vector<Cleave> cleaves_of(const IntMatrix& a) {
  std::vector<Cleave> out;
  auto w = positive_weight_solve(a);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    bool arrow = false;
    for (std::size_t c = 0; c < a.cols(); ++c)
      arrow = arrow || (c != k && a(k, c) != 0);
    if (!arrow)
      continue;
    IntMatrix a2 = a;
    for (std::size_t c = 0; c < a.cols(); ++c)
      a2(k, c) = 0;
    a2(k, k) = w.d / w.q[k];
    auto det = detect_cleave(a, a2);
    REQUIRE(det.cleave);
    out.push_back(*det.cleave);
  }
  return out;
}

} // namespace

TEST_CASE("anticanonical monomials against direct enumeration") {
  auto cubic = anticanonical_invariant_monomials({{1, 1, 1}, 3}, j_group(kCubicFermat));
  CHECK(cubic.size() == 10);
  CHECK(cubic.front() == IntVector{3, 0, 0});
  CHECK(cubic.back() == IntVector{0, 0, 3});

  IntMatrix quintic(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    quintic(i, i) = 5;
  auto sl = sl_group(quintic);
  auto mons = anticanonical_invariant_monomials({{1, 1, 1, 1, 1}, 5}, sl);
  auto elems = sl.elements();
  std::vector<IntVector> brute;
  for (int a = 5; a >= 0; --a)
    for (int b = 5 - a; b >= 0; --b)
      for (int c = 5 - a - b; c >= 0; --c)
        for (int d = 5 - a - b - c; d >= 0; --d) {
          IntVector s{a, b, c, d, 5 - a - b - c - d};
          bool inv = true;
          for (const auto& g : elems) {
            Rational ph = 0;
            for (std::size_t i = 0; i < 5; ++i)
              ph += g[i] * s[i];
            inv = inv && frac(ph) == 0;
          }
          if (inv)
            brute.push_back(s);
        }
  CHECK(mons == brute);
  CHECK(std::ranges::find(mons, IntVector{1, 1, 1, 1, 1}) != mons.end());
  CHECK(mons.front() == IntVector{5, 0, 0, 0, 0});

  auto zero = anticanonical_invariant_monomials({{1, 2}, 0}, DiagonalGroup(2));
  CHECK(zero == std::vector<IntVector>{IntVector{0, 0}});
}

TEST_CASE("cleave detection") {
  auto det = detect_cleave(kCubicChain, kCubicFermat);
  REQUIRE(det.cleave);
  CHECK(det.cleave->k == 1);
  CHECK(det.cleave->direction == CleaveDirection::ArrowRemoved);
  CHECK(det.cleave->head == 2);
  CHECK(det.cleave->index_set == std::vector<std::size_t>{2});
  auto back = detect_cleave(kCubicFermat, kCubicChain);
  REQUIRE(back.cleave);
  CHECK(back.cleave->direction == CleaveDirection::ArrowAdded);
  CHECK(back.cleave->index_set == std::vector<std::size_t>{2});

  CHECK(detect_cleave(kCubicChain, kCubicChain).reason == "identical");
  IntMatrix two{{2, 1, 0}, {0, 2, 1}, {0, 0, 3}};
  CHECK_FALSE(detect_cleave(two, kCubicFermat).cleave);
  IntMatrix loop{{2, 1, 0}, {0, 2, 1}, {1, 0, 2}};
  IntMatrix loop_cut{{3, 0, 0}, {0, 2, 1}, {1, 0, 2}};
  det = detect_cleave(loop, loop_cut);
  REQUIRE(det.cleave);
  CHECK(det.cleave->k == 0);
  CHECK(det.cleave->index_set == std::vector<std::size_t>{1, 2});
  // Rows given in another order are normalized first.
  IntMatrix shuffled{{0, 0, 3}, {3, 0, 0}, {0, 2, 1}};
  CHECK(detect_cleave(shuffled, kCubicFermat).cleave);
}

TEST_CASE("configuration nu for the cubic cleave") {
  auto nu = cubic_nu();
  CHECK(nu.names == std::vector<std::string>{"y0", "y1'", "y2", "y1", "u"});
  std::vector<IntVector> pts{{3, 0, 0}, {0, 2, 1}, {0, 0, 3}, {0, 3, 0}, {1, 1, 1}};
  CHECK(nu.points == pts);
  CHECK(nu.roles.back() == PointRole::Interior);

  auto det = detect_cleave(kCubicChain, kCubicFermat);
  // A group that does not fix x1^2*x2: phases (0, 1/3, 0).
  auto g = DiagonalGroup::generated_by(3, {{0, Rational(1, 3), 0}});
  CHECK_THROWS_AS(build_nu(*det.cleave, g), Error);
}

TEST_CASE("cubic triangulations and ideals") {
  auto nu = cubic_nu();
  Ring r = nu.ring();
  auto [t, t2] = triangulation_pair(nu);
  // {m0, m1', 1}, {m0, m2, 1}, {m1', m2, 1}, {m0, m1, m1'}.
  std::vector<std::vector<std::size_t>> expect{{0, 1, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}};
  CHECK(t.simplices == expect);
  std::vector<std::vector<std::size_t>> expect2{{0, 2, 4}, {0, 3, 4}, {2, 3, 4}};
  CHECK(t2.simplices == expect2);

  CHECK(irrelevant_ideal(nu, t) == ideal_from({"y1*y0", "y1*y1'", "y1*y2", "u*y2"}, r));
  CHECK(subideal_J(nu, t) == ideal_from({"y1*y0", "y1*y1'", "y1*y2"}, r));
  CHECK(irrelevant_ideal(nu, t2) == ideal_from({"y1'*y0", "y1'*y1", "y1'*y2"}, r));
  CHECK(subideal_J(nu, t2) == irrelevant_ideal(nu, t2));

  auto check = verify_triangulation(nu, t);
  CHECK(check.ok);
  CHECK(check.violation.empty());
  CHECK(verify_triangulation(nu, t2).ok);
  CHECK(check.total == verify_triangulation(nu, t2).total);

  for (std::size_t drop = 0; drop < t.simplices.size(); ++drop) {
    Triangulation bad = t;
    bad.simplices.erase(bad.simplices.begin() + static_cast<std::ptrdiff_t>(drop));
    auto res = verify_triangulation(nu, bad);
    CHECK_FALSE(res.ok);
    CHECK(res.violation == "volume-deficit");
  }
  Triangulation overlap = t;
  overlap.simplices.push_back({0, 2, 3});
  CHECK_FALSE(verify_triangulation(nu, overlap).ok);
  Triangulation flat{{{1, 2, 3}}};
  CHECK(verify_triangulation(nu, flat).violation == "degenerate-simplex");
}

TEST_CASE("cubic superpotential and charts") {
  auto nu = cubic_nu();
  Ring r = nu.ring();
  RatVector b{Rational(2), Rational(3), Rational(5)};
  Rational c(7);
  auto w = superpotential(nu, b, c);
  CHECK(w == Polynomial::parse("2*y0^3*u + 3*y1^3*y1'^2*u + 5*y1'*y2^3*u + 7*y0*y1*y1'*y2*u", r));
  for (const auto& term : w.terms())
    CHECK(term.m[nu.interior()] == 1);
  CHECK(restrict_to_chart(w, nu, ChartSide::Xi) ==
        Polynomial::parse("2*y0^3 + 3*y1'^2 + 5*y1'*y2^3 + 7*y0*y1'*y2", r));
  CHECK(restrict_to_chart(w, nu, ChartSide::XiPrime) ==
        Polynomial::parse("2*y0^3 + 3*y1^3 + 5*y2^3 + 7*y0*y1*y2", r));
  CHECK_THROWS_AS(superpotential(nu, {1, 1}, 0), Error);

  // The chain-interior monomial has the form y_i^{a_ii} y_{i-1} u.
  IntMatrix chain{{4, 1, 0, 0, 0}, {0, 4, 1, 0, 0}, {0, 0, 4, 1, 0},
                  {0, 0, 0, 4, 1}, {0, 0, 0, 0, 5}};
  IntMatrix cut = chain;
  cut(0, 1) = 0;
  cut(0, 0) = 5;
  auto det = detect_cleave(chain, cut);
  REQUIRE(det.cleave);
  auto cnu = build_nu(*det.cleave, j_group(chain));
  Ring cr = cnu.ring();
  auto cw = superpotential(cnu, RatVector(5, Rational(1)), 0);
  CHECK(cw.coefficient_of(cnu.interior(), 1).size() == 5);
  CHECK(std::ranges::count(cw.terms(), Term{Polynomial::parse("y2^4*y1*u", cr).leading().m, 1}) == 1);
}

TEST_CASE("random Gorenstein cleaves: triangulations, ideals, charts") {
  std::mt19937 rng(61);
  int done = 0;
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix a = bhk::testing::random_gorenstein_cy_matrix(rng);
    for (const auto& cl : cleaves_of(a)) {
      auto g = j_group(cl.A);
      auto nu = build_nu(cl, g);
      auto [t, t2] = triangulation_pair(nu);
      auto c1 = verify_triangulation(nu, t);
      auto c2 = verify_triangulation(nu, t2);
      CHECK_MESSAGE(c1.ok, c1.violation);
      CHECK_MESSAGE(c2.ok, c2.violation);
      CHECK(c1.total == c2.total);
      for (const auto& [tri, side] : {std::pair{t, 0}, std::pair{t2, 1}}) {
        auto ip = irrelevant_ideal(nu, tri);
        auto jp = subideal_J(nu, tri);
        for (const auto& m : jp.generators) {
          CHECK(ip.contains(m));
          CHECK(m[nu.interior()] == 0);
        }
      }
      // b = 1, c = 0 charts give the transposed polynomials.
      std::size_t n = cl.A.rows();
      auto w = superpotential(nu, RatVector(n, Rational(1)), 0);
      for (ChartSide side : {ChartSide::Xi, ChartSide::XiPrime}) {
        const IntMatrix& m = side == ChartSide::Xi ? cl.A : cl.A2;
        std::vector<Term> expect;
        for (std::size_t i = 0; i < n; ++i) {
          Monomial mono;
          for (std::size_t j = 0; j < n; ++j) {
            std::size_t var = (side == ChartSide::XiPrime && j == cl.k) ? nu.cleaved() : j;
            mono.set(var, static_cast<unsigned>(m(j, i).get_ui()));
          }
          expect.push_back({mono, 1});
        }
        CHECK(restrict_to_chart(w, nu, side) == Polynomial::from_terms(expect));
      }
      ++done;
    }
  }
  CHECK(done >= 25);
}
