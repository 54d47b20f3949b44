#include "doctest.h"

#include <random>

#include "bhk/groebner.hpp"

using namespace bhk;

namespace {

Polynomial random_poly(std::mt19937& rng, std::size_t nvars, unsigned max_deg,
                       std::size_t nterms) {
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < nterms; ++k) {
    Monomial m;
    unsigned budget = max_deg;
    for (std::size_t i = 0; i < nvars; ++i) {
      unsigned x = std::min(e(rng), budget);
      m.set(i, x);
      budget -= x;
    }
    int v = c(rng);
    Rational r(v, 1 + (k % 3));
    r.canonicalize();
    if (v != 0)
      terms.push_back({m, r});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial spoly(const Polynomial& a, const Polynomial& b) {
  Monomial l = lcm(a.leading().m, b.leading().m);
  return a.times_term(quotient(l, a.leading().m), 1 / a.leading().c) -
         b.times_term(quotient(l, b.leading().m), 1 / b.leading().c);
}

// Buchberger's criterion, checked from scratch.
bool is_groebner_basis(const std::vector<Polynomial>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!divide(spoly(g[i], g[j]), g).remainder.is_zero())
        return false;
  return true;
}

bool is_reduced(const std::vector<Polynomial>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].leading().c != 1)
      return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j)
        continue;
      for (const auto& t : g[i].terms())
        if (divides(g[j].leading().m, t.m))
          return false;
    }
  }
  return true;
}

const Ring kXY({"x", "y"});

} // namespace

TEST_CASE("AVX2 and scalar monomial kernels agree") {
  const auto& s = kernels::scalar();
  const auto& v = kernels::avx2();
  MESSAGE("vector kernels: ", v.name);
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> small(0, 3);
  std::uniform_int_distribution<int> big(0, 30000);
  for (int trial = 0; trial < 20000; ++trial) {
    alignas(32) std::array<std::uint16_t, kMaxVars> a{}, b{}, o1{}, o2{};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      a[i] = static_cast<std::uint16_t>(trial % 2 ? small(rng) : big(rng));
      b[i] = static_cast<std::uint16_t>(trial % 3 ? small(rng) : big(rng));
    }
    if (trial % 5 == 0)
      b = a;
    if (trial % 7 == 0)
      b[trial % kMaxVars] = a[trial % kMaxVars] + 1;
    s.add(a.data(), b.data(), o1.data());
    v.add(a.data(), b.data(), o2.data());
    CHECK(o1 == o2);
    s.max(a.data(), b.data(), o1.data());
    v.max(a.data(), b.data(), o2.data());
    CHECK(o1 == o2);
    // sub needs b <= a: use max(a,b) - b.
    alignas(32) std::array<std::uint16_t, kMaxVars> hi = o1;
    s.sub(hi.data(), b.data(), o1.data());
    v.sub(hi.data(), b.data(), o2.data());
    CHECK(o1 == o2);
    CHECK(s.divides(a.data(), b.data()) == v.divides(a.data(), b.data()));
    CHECK(s.divides(b.data(), hi.data()) == v.divides(b.data(), hi.data()));
    CHECK(s.coprime(a.data(), b.data()) == v.coprime(a.data(), b.data()));
    CHECK(s.revlex(a.data(), b.data()) == v.revlex(a.data(), b.data()));
    CHECK(s.revlex(b.data(), a.data()) == v.revlex(b.data(), a.data()));
  }
}

TEST_CASE("grevlex order and polynomial arithmetic") {
  Ring r({"x", "y", "z"});
  auto p = Polynomial::parse("x*y + z^2 + x^2 - 3/2*y*z", r);
  // Degree 2 monomials: x^2 > x*y > y^2 > x*z > y*z > z^2.
  CHECK(p.to_string(r) == "x^2 + x*y - 3/2*y*z + z^2");
  CHECK(Polynomial::parse(p.to_string(r), r) == p);
  CHECK((p - p).is_zero());
  CHECK(Polynomial::parse("0", r).is_zero());
  auto q = Polynomial::parse("x - y", r);
  CHECK((q * q).to_string(r) == "x^2 - 2*x*y + y^2");
  CHECK(q.pow(3) == q * q * q);
  CHECK(Polynomial::parse("u*y^2", Ring({"y", "u"})).derivative(1) ==
        Polynomial::parse("y^2", Ring({"y", "u"})));
  CHECK(Polynomial::constant(7).derivative(0).is_zero());
  CHECK_THROWS_AS(Polynomial::parse("w", r), ParseError);
  CHECK(p.substitute(2, 1) == Polynomial::parse("x^2 + x*y - 3/2*y + 1", r));
}

TEST_CASE("groebner basics") {
  Ring r({"x", "y"});
  auto gb = groebner({Polynomial::parse("x", r), Polynomial::parse("y", r)});
  CHECK(gb.basis.size() == 2);
  CHECK(gb.basis[0].to_string(r) == "x");
  CHECK(gb.basis[1].to_string(r) == "y");

  gb = groebner({Polynomial::parse("x^2 + y^2 - 1", r), Polynomial::parse("x - y", r)});
  REQUIRE(gb.basis.size() == 2);
  // Hand elimination: x = y, 2y^2 = 1.
  CHECK(gb.basis[0].to_string(r) == "y^2 - 1/2");
  CHECK(gb.basis[1].to_string(r) == "x - y");

  gb = groebner({Polynomial::constant(3)});
  CHECK(gb.is_unit());
  gb = groebner({});
  CHECK(gb.basis.empty());

  GroebnerOptions tight;
  tight.max_spairs = 0;
  CHECK_THROWS_AS(groebner({Polynomial::parse("x^2 - y", r), Polynomial::parse("x*y - 1", r)},
                           tight),
                  Error);
  tight = {};
  tight.max_terms = 1;
  CHECK_THROWS_AS(groebner({Polynomial::parse("x^2 - y", r), Polynomial::parse("x*y - 1", r)},
                           tight),
                  Error);
}

TEST_CASE("groebner bases pass Buchberger's criterion on random ideals") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t nvars = 2 + trial % 3;
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2 + trial % 2; ++k)
      gens.push_back(random_poly(rng, nvars, 3, 3));
    GroebnerOptions opt;
    opt.track_cofactors = true;
    auto gb = groebner(gens, opt);
    CHECK(is_groebner_basis(gb.basis));
    CHECK(is_reduced(gb.basis));
    for (const auto& g : gens)
      CHECK(divide(g, gb.basis).remainder.is_zero());
    // Cofactors express each basis element in the inputs.
    REQUIRE(gb.cofactors.size() == gb.basis.size());
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
      Polynomial sum;
      for (std::size_t j = 0; j < gens.size(); ++j)
        sum += gb.cofactors[i][j] * gens[j];
      CHECK(sum == gb.basis[i]);
    }
    // Idempotence.
    CHECK(groebner(gb.basis).basis == gb.basis);
    // Same basis with and without cofactor tracking.
    CHECK(groebner(gens).basis == gb.basis);
  }
}

TEST_CASE("groebner bases agree between kernel backends") {
  if (!kernels::avx2_supported())
    return;
  std::mt19937 rng(47);
  auto before = kernels::selected();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(random_poly(rng, 3, 3, 3));
    kernels::select(kernels::Backend::Scalar);
    auto a = groebner(gens);
    kernels::select(kernels::Backend::Avx2);
    auto b = groebner(gens);
    CHECK(a.basis == b.basis);
    CHECK(a.spairs == b.spairs);
  }
  kernels::select(before);
}

TEST_CASE("division and ideal membership") {
  Ring r({"x"});
  auto gb = groebner({Polynomial::parse("x", r)});
  CHECK(ideal_membership(Polynomial::parse("x", r), r, gb.basis).member);
  gb = groebner({Polynomial::parse("x^2", r)});
  auto res = ideal_membership(Polynomial::parse("x", r), r, gb.basis);
  CHECK_FALSE(res.member);
  CHECK(replay(res.certificate));

  std::mt19937 rng(53);
  Ring r3({"x", "y", "z"});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> gens{random_poly(rng, 3, 2, 3), random_poly(rng, 3, 2, 3)};
    auto basis = groebner(gens).basis;
    Polynomial f = random_poly(rng, 3, 2, 2) * gens[0] + random_poly(rng, 3, 2, 2) * gens[1];
    auto m = ideal_membership(f, r3, basis);
    CHECK(m.member);
    CHECK(replay(m.certificate));
    // Division correctness on arbitrary input.
    Polynomial g = random_poly(rng, 3, 4, 5);
    auto d = divide(g, basis);
    Polynomial sum = d.remainder;
    for (std::size_t i = 0; i < basis.size(); ++i)
      sum += d.quotients[i] * basis[i];
    CHECK(sum == g);
    // A tampered certificate fails.
    if (!m.certificate.cofactors.empty() && !f.is_zero()) {
      auto bad = m.certificate;
      bad.cofactors[0] += Polynomial::constant(1);
      CHECK_FALSE(replay(bad));
    }
  }
}

TEST_CASE("radical membership") {
  PolyIdeal i{Ring({"x", "y"}), {Polynomial::parse("x^2", kXY)}};
  auto r = radical_membership(Polynomial::parse("x", kXY), i);
  CHECK(r.member);
  CHECK(r.certificate.kind == CertificateKind::Rabinowitsch);
  CHECK(r.certificate.exponent >= 1);
  CHECK(replay(r.certificate));

  PolyIdeal ix{kXY, {Polynomial::parse("x", kXY)}};
  CHECK_FALSE(radical_membership(Polynomial::parse("y", kXY), ix).member);

  // x*y in sqrt(x^3 - y^2, y^3)? y is nilpotent mod the ideal, so yes.
  PolyIdeal j{kXY, {Polynomial::parse("x^3 - y^2", kXY), Polynomial::parse("y^3", kXY)}};
  r = radical_membership(Polynomial::parse("x*y + x", kXY), j);
  CHECK(r.member);
  CHECK(replay(r.certificate));
  CHECK_FALSE(radical_membership(Polynomial::parse("x + 1", kXY), j).member);
}

TEST_CASE("radical membership for the cubic cleave") {
  Ring r({"y0", "y1", "y1'", "y2", "u"});
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> num(1, 9);
  for (int trial = 0; trial < 3; ++trial) {
    Rational c0(num(rng), num(rng)), c1(num(rng), num(rng)), c3(num(rng), num(rng));
    c0.canonicalize();
    c1.canonicalize();
    c3.canonicalize();
    Polynomial w = Polynomial::parse("y0^3*u", r).scaled(c0) +
                   Polynomial::parse("y1^3*y1'^2*u", r).scaled(c1) +
                   Polynomial::parse("y1'*y2^3*u", r) +
                   Polynomial::parse("y0*y1*y1'*y2*u", r).scaled(c3);
    PolyIdeal ideal{r, {}};
    for (std::size_t v = 0; v < r.size(); ++v)
      ideal.generators.push_back(w.derivative(v));
    for (const char* g : {"y1*y0", "y1*y1'", "y1*y2"})
      ideal.generators.push_back(Polynomial::parse(g, r));
    auto res = radical_membership(Polynomial::parse("u*y2", r), ideal);
    CHECK(res.member);
    CHECK(replay(res.certificate));
  }
}
