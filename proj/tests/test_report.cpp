#include "doctest.h"

#include "bhk/invertible.hpp"
#include "bhk/report.hpp"

using namespace bhk;

namespace {

const IntMatrix kQuinticChain{{4, 1, 0, 0, 0}, {0, 4, 1, 0, 0}, {0, 0, 4, 1, 0},
                              {0, 0, 0, 4, 1}, {0, 0, 0, 0, 5}};

IntMatrix quintic() {
  IntMatrix m(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    m(i, i) = 5;
  return m;
}

EquivalenceReport quintic_report() {
  return verify_equivalence(quintic(), kQuinticChain, j_group(kQuinticChain),
                            RatVector(5, Rational(1)), 0);
}

} // namespace

TEST_CASE("certificates survive a JSON round trip") {
  auto report = quintic_report();
  std::size_t seen = 0;
  for (const auto& l : report.links)
    for (const SideCertificate* s : {&l.p, &l.q}) {
      std::vector<MembershipCertificate> certs;
      if (s->fast_path)
        certs = *s->fast_path;
      for (const auto& r : s->oracle->results)
        certs.push_back(r.certificate);
      for (const auto& c : certs) {
        auto back = certificate_from_json(Json::parse(certificate_to_json(c).dump()));
        CHECK(back.kind == c.kind);
        CHECK(back.ring == c.ring);
        CHECK(back.target == c.target);
        CHECK(back.generators == c.generators);
        CHECK(back.cofactors == c.cofactors);
        CHECK(back.exponent == c.exponent);
        CHECK(back.steps.size() == c.steps.size());
        CHECK(replay(back) == replay(c));
        ++seen;
      }
    }
  CHECK(seen > 0);
}

TEST_CASE("report replay and tampering") {
  auto report = quintic_report();
  auto text = report_to_json(report).dump(2);
  CHECK(text == report_to_json(quintic_report()).dump(2));
  CHECK_FALSE(report_to_json(report).contains("timing"));
  CHECK(report_to_json(report, 1.5).at("timing").at("seconds") == 1.5);

  auto j = Json::parse(text);
  CHECK(j.at("links").size() == 4);
  CHECK(j.at("status") == "equivalent");
  auto summary = replay_report(j);
  CHECK(summary.ok());
  CHECK(summary.replayed > 4);

  // Change one cofactor of a Rabinowitsch certificate.
  bool tampered = false;
  for (auto& link : j.at("links"))
    for (auto& c : link.at("p").at("groebner"))
      if (!tampered && c.value("kind", "") == "rabinowitsch" && !c.at("cofactors").empty()) {
        c.at("cofactors").at(0) = "1";
        tampered = true;
      }
  REQUIRE(tampered);
  CHECK_FALSE(replay_report(j).ok());

  // A structured step that claims the wrong survivor.
  auto j2 = Json::parse(text);
  tampered = false;
  for (auto& link : j2.at("links"))
    for (auto& c : link.at("p").at("structured"))
      if (!tampered && !c.at("steps").empty()) {
        c.at("steps").at(0).at("survivor") = "u";
        tampered = true;
      }
  REQUIRE(tampered);
  CHECK_FALSE(replay_report(j2).ok());

  CHECK_THROWS_AS(certificate_from_json(Json{{"kind", "magic"}}), Error);
  CHECK_THROWS_AS(certificate_from_json(Json{{"kind", "rabinowitsch"}}), Error);
}
