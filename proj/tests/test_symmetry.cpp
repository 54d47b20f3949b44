#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "bhk/invertible.hpp"
#include "bhk/symmetry.hpp"
#include "random_poly.hpp"

using namespace bhk;

namespace {

IntMatrix fermat(std::size_t n, long a) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = a;
  return m;
}

const IntMatrix kCubic{{3, 0, 0}, {0, 2, 1}, {0, 0, 3}};
const IntMatrix kChain{{4, 1, 0, 0, 0},
                       {0, 4, 1, 0, 0},
                       {0, 0, 4, 1, 0},
                       {0, 0, 0, 4, 1},
                       {0, 0, 0, 0, 5}};

// All phase vectors with entries in (1/den)Z mod 1.
std::vector<Phase> grid(std::size_t m, long den) {
  std::vector<Phase> out;
  std::vector<long> idx(m, 0);
  for (;;) {
    Phase p(m);
    for (std::size_t i = 0; i < m; ++i)
      p[i] = Rational(idx[i], den);
    for (auto& x : p)
      x.canonicalize();
    out.push_back(p);
    std::size_t i = 0;
    while (i < m && ++idx[i] == den)
      idx[i++] = 0;
    if (i == m)
      break;
  }
  return out;
}

bool fixes_polynomial(const IntMatrix& a, const Phase& g) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational t = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
      t += a(r, c) * g[c];
    if (t.get_den() != 1)
      return false;
  }
  return true;
}

Integer abs_det(const IntMatrix& a) { return abs(determinant(a)); }

std::set<Phase> as_set(const std::vector<Phase>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("aut_diag sl and j of the quintic") {
  auto q = fermat(5, 5);
  auto aut = aut_diag(q);
  auto sl = sl_group(q);
  auto j = j_group(q);
  CHECK(aut.order() == 3125);
  CHECK(sl.order() == 625);
  CHECK(j.order() == 5);
  CHECK(j.generators() == std::vector<Phase>{Phase(5, Rational(1, 5))});

  // Brute-force oracle over (1/5)Z^5 mod 1.
  std::size_t n_aut = 0, n_sl = 0;
  for (const auto& g : grid(5, 5)) {
    bool in_aut = fixes_polynomial(q, g);
    Rational s = 0;
    for (const auto& x : g)
      s += x;
    bool in_sl = in_aut && s.get_den() == 1;
    n_aut += in_aut;
    n_sl += in_sl;
    CHECK(aut.contains(g) == in_aut);
    CHECK(sl.contains(g) == in_sl);
  }
  CHECK(n_aut == 3125);
  CHECK(n_sl == 625);

  auto quot = group_quotient_structure(sl, j);
  CHECK(quot.structure.invariant_factors == IntVector{5, 5, 5});
  CHECK(group_quotient_structure(sl, sl).structure.trivial());
  CHECK(group_quotient_structure(aut, sl).structure.invariant_factors ==
        IntVector{5});
  CHECK_THROWS_AS(group_quotient_structure(j, sl), Error);
}

TEST_CASE("small groups") {
  CHECK(aut_diag(kCubic).order() == 18);
  CHECK(j_group(kCubic).generators() ==
        std::vector<Phase>{Phase(3, Rational(1, 3))});
  CHECK(aut_diag(IntMatrix::identity(2)).trivial());
  CHECK(sl_group(fermat(3, 3)).order() == 9);
  CHECK(sl_group(IntMatrix{{2}}).order() == 1);
  CHECK(j_group(IntMatrix{{1}}).trivial());
  CHECK_THROWS_AS(aut_diag(IntMatrix{{1, 1}, {1, 1}}), Error);

  // Generators of the cubic J group are (q_i/d) for weights (1,1,1), d=3.
  auto w = positive_weight_solve(kCubic);
  Phase qd;
  for (const auto& x : w.q)
    qd.push_back(Rational(x, w.d));
  CHECK(j_group(kCubic).contains(qd));
}

TEST_CASE("is_invariant") {
  auto q = fermat(5, 5);
  CHECK(is_invariant(IntVector(5, Integer(1)), sl_group(q)));
  CHECK(is_invariant(IntVector{5, 0, 0, 0, 0}, j_group(q)));
  CHECK_FALSE(is_invariant(IntVector{1, 0, 0, 0, 0}, j_group(q)));
}

TEST_CASE("canonical form does not depend on generator order") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = testing::random_invertible_matrix(rng, 3 + trial % 3);
    auto elems = aut_diag(a).elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    std::vector<Phase> gens;
    for (int i = 0; i < 4; ++i)
      gens.push_back(elems[pick(rng)]);
    auto g1 = DiagonalGroup::generated_by(a.rows(), gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    // Unreduced representatives of the same phases.
    for (auto& g : gens)
      for (auto& x : g)
        x += 2;
    auto g2 = DiagonalGroup::generated_by(a.rows(), gens);
    CHECK(g1 == g2);
    CHECK(g1.canonical_form() == g2.canonical_form());
    CHECK(as_set(g1.elements()).size() == g1.order());
  }
}

TEST_CASE("aut_diag order is |det A| for random non-negative matrices") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> dist(0, 4);
  int done = 0;
  while (done < 100) {
    std::size_t n = 2 + done % 3;
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = dist(rng);
    if (determinant(a) == 0 || abs_det(a) > 500)
      continue;
    auto aut = aut_diag(a);
    CHECK(aut.order() == abs_det(a));
    // Every element fixes each monomial.
    for (const auto& g : aut.generators())
      CHECK(fixes_polynomial(a, g));
    ++done;
  }
}

TEST_CASE("intersection and join against element sets") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = testing::random_invertible_matrix(rng, 2 + trial % 3, 3);
    auto elems = aut_diag(a).elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    auto g1 = DiagonalGroup::generated_by(a.rows(), {elems[pick(rng)]});
    auto g2 = DiagonalGroup::generated_by(a.rows(),
                                          {elems[pick(rng)], elems[pick(rng)]});
    auto s1 = as_set(g1.elements()), s2 = as_set(g2.elements());
    std::set<Phase> meet;
    for (const auto& x : s1)
      if (s2.contains(x))
        meet.insert(x);
    CHECK(as_set(intersect(g1, g2).elements()) == meet);
    auto joined = join(g1, g2);
    for (const auto& x : s1)
      CHECK(joined.contains(x));
    for (const auto& x : s2)
      CHECK(joined.contains(x));
    CHECK(joined.order() * intersect(g1, g2).order() == g1.order() * g2.order());
  }
}

TEST_CASE("dual group of the quintic") {
  auto q = fermat(5, 5);
  auto j = j_group(q);
  auto sl = sl_group(q);
  CHECK(dual_group(q, j) == sl);
  CHECK(dual_group(q, sl) == j_group(q.transpose()));
  CHECK(dual_group(q, aut_diag(q)).trivial());
  CHECK(dual_group(q, DiagonalGroup(5)) == aut_diag(q));
  auto quot = group_quotient_structure(dual_group(q, j), j_group(q.transpose()));
  CHECK(quot.structure.invariant_factors == IntVector{5, 5, 5});

  // Brute-force dual straight from the definition: all G-invariant exponents
  // with entries below 5, mapped through the rows of A^{-1}.
  auto inv = rational_inverse(q);
  std::set<Phase> brute;
  for (const auto& g : grid(5, 5)) {
    IntVector s(5);
    for (int i = 0; i < 5; ++i)
      s[i] = Rational(g[i] * 5).get_num();
    if (!is_invariant(s, sl))
      continue;
    Phase p(5, Rational(0));
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k)
        p[i] += inv(k, i) * s[k];
    brute.insert(reduce_phase(p));
  }
  CHECK(as_set(dual_group(q, sl).elements()) == brute);

  CHECK_THROWS_AS(
      dual_group(kCubic, DiagonalGroup::generated_by(3, {Phase(3, Rational(1, 7))})),
      Error);
}

TEST_CASE("dual group is an involution on the quintic family") {
  auto q = fermat(5, 5);
  auto groups = admissible_groups(q, q);
  // Subgroups of (Z_5)^3: 1 + 31 + 31 + 1.
  CHECK(groups.size() == 64);
  auto jt = j_group(q.transpose());
  auto slt = sl_group(q.transpose());
  for (const auto& g : groups) {
    auto gt = dual_group(q, g);
    CHECK(dual_group(q.transpose(), gt) == g);
    CHECK(slt.contains(gt));
    CHECK(gt.contains(jt));
    CHECK(gt.order() * g.order() == 3125);
  }
}

TEST_CASE("dual group involution on random small cases") {
  std::mt19937 rng(37);
  int done = 0;
  while (done < 20) {
    auto a = testing::random_invertible_matrix(rng, 2 + done % 4, 4);
    if (abs_det(a) > 200)
      continue;
    auto elems = aut_diag(a).elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    auto g = DiagonalGroup::generated_by(a.rows(), {elems[pick(rng)], elems[pick(rng)]});
    auto gt = dual_group(a, g);
    CHECK(dual_group(a.transpose(), gt) == g);
    CHECK(gt.order() * g.order() == abs_det(a));
    if (is_calabi_yau(a)) {
      auto gj = join(g, j_group(a));
      auto sl = sl_group(a);
      if (sl.contains(gj)) {
        auto dual = dual_group(a, gj);
        CHECK(sl_group(a.transpose()).contains(dual));
        CHECK(dual.contains(j_group(a.transpose())));
      }
    }
    ++done;
  }
}

namespace {

// Closes {J} under joining single elements of the top group.
std::vector<DiagonalGroup> brute_subgroups(const DiagonalGroup& bottom,
                                           const DiagonalGroup& top) {
  auto key = [](const DiagonalGroup& g) {
    std::vector<Integer> k{g.exponent()};
    for (std::size_t r = 0; r < g.dimension(); ++r)
      for (std::size_t c = 0; c < g.dimension(); ++c)
        k.push_back(g.canonical_form()(r, c));
    return k;
  };
  std::set<std::vector<Integer>> seen{key(bottom)};
  std::vector<DiagonalGroup> todo{bottom}, all;
  auto top_elems = top.elements();
  while (!todo.empty()) {
    auto g = todo.back();
    todo.pop_back();
    all.push_back(g);
    for (const auto& e : top_elems) {
      if (g.contains(e))
        continue;
      auto h = join(g, DiagonalGroup::generated_by(g.dimension(), {e}));
      if (seen.insert(key(h)).second)
        todo.push_back(h);
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

} // namespace

TEST_CASE("admissible groups") {
  auto groups = admissible_groups(fermat(3, 3), fermat(3, 3));
  auto j3 = j_group(fermat(3, 3));
  CHECK(std::ranges::find(groups, j3) != groups.end());
  CHECK(std::ranges::find(groups, sl_group(fermat(3, 3))) != groups.end());
  // SL/J is Z_3: J and SL only.
  CHECK(groups.size() == 2);

  auto q = fermat(5, 5);
  IntMatrix loop{{4, 1, 0, 0, 0},
                 {1, 4, 0, 0, 0},
                 {0, 0, 5, 0, 0},
                 {0, 0, 0, 5, 0},
                 {0, 0, 0, 0, 5}};
  auto jq = j_group(q);
  for (const auto& other : {kChain, loop}) {
    REQUIRE(positive_weight_solve(other) == positive_weight_solve(q));
    groups = admissible_groups(q, other);
    auto top = intersect(sl_group(q), sl_group(other));
    CHECK(std::ranges::find(groups, jq) != groups.end());
    for (const auto& g : groups) {
      CHECK(g.contains(jq));
      CHECK(top.contains(g));
    }
    CHECK(brute_subgroups(jq, top) == groups);
  }

  IntMatrix other_weights{{2, 0, 0}, {0, 4, 0}, {0, 0, 4}};
  try {
    admissible_groups(fermat(3, 3), other_weights);
    FAIL("expected JMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::JMismatch);
  }
  try {
    admissible_groups(q, q, 10);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("group text format") {
  auto g = parse_group(5, "1/5,4/5,0,0,0\n# comment\n\n0,1/5,4/5,0,0\n");
  CHECK(g.order() == 25);
  CHECK(parse_group(5, format_group(g)) == g);
  CHECK_THROWS_AS(parse_group(5, "1/5,1/5\n"), Error);
  CHECK_THROWS_AS(parse_group(2, "1/x,0\n"), ParseError);
  CHECK(parse_group(3, "").trivial());
}
