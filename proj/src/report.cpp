#include "bhk/report.hpp"

#include "bhk/invertible.hpp"

namespace bhk {

namespace {

Json num(const Integer& x) {
  if (x.fits_slong_p())
    return x.get_si();
  return x.get_str();
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(num(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v)
    out.push_back(num(x));
  return out;
}

Json rationals_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v)
    out.push_back(x.get_str());
  return out;
}

Json polys_json(const std::vector<Polynomial>& ps, const Ring& r) {
  Json out = Json::array();
  for (const auto& p : ps)
    out.push_back(p.to_string(r));
  return out;
}

Json group_json(const DiagonalGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators())
    gens.push_back(rationals_json(p));
  return {{"order", num(g.order())}, {"generators", std::move(gens)}};
}

Json mirror_json(const MirrorData& m) {
  return {{"transpose", matrix_json(m.transpose)},
          {"weights", vector_json(m.weights.q)},
          {"degree", num(m.weights.d)},
          {"dual_group", group_json(m.dual)},
          {"quotient_order", num(m.quotient_order)},
          {"gorenstein", m.gorenstein}};
}

Json check_json(const TriangulationCheck& c) {
  return {{"ok", c.ok}, {"violation", c.violation}, {"total_volume", num(c.total)}};
}

Json side_json(const SideCertificate& s, const Ring& r) {
  Json j;
  j["I"] = s.I.to_strings(r);
  j["J"] = s.J.to_strings(r);
  j["generators"] = polys_json(s.ideal.generators, r);
  j["contained"] = s.contained;
  Json fast = nullptr;
  if (s.fast_path) {
    fast = Json::array();
    for (const auto& c : *s.fast_path)
      fast.push_back(certificate_to_json(c));
  }
  Json targets = Json::array();
  for (const auto& m : s.fast_targets)
    targets.push_back(format_monomial(m, r));
  j["fast_targets"] = std::move(targets);
  j["propagation_range"] = s.propagation_range;
  j["structured"] = std::move(fast);
  Json oracle = nullptr;
  if (s.oracle) {
    oracle = Json::array();
    for (const auto& res : s.oracle->results)
      oracle.push_back(res.member ? certificate_to_json(res.certificate)
                                  : Json{{"target", res.certificate.target.to_string(r)},
                                         {"member", false}});
  }
  j["groebner"] = std::move(oracle);
  return j;
}

Ring ring_from(const Json& j) {
  return Ring(j.at("ring").get<std::vector<std::string>>());
}

Monomial monomial_from(const Json& j, const Ring& r) {
  auto p = Polynomial::parse(j.get<std::string>(), r);
  if (p.terms().size() != 1 || p.leading().c != 1)
    throw ParseError(0, "expected a monomial, got " + j.get<std::string>());
  return p.leading().m;
}

std::vector<Polynomial> polys_from(const Json& j, const Ring& r) {
  std::vector<Polynomial> out;
  for (const auto& s : j)
    out.push_back(Polynomial::parse(s.get<std::string>(), r));
  return out;
}

} // namespace

Json certificate_to_json(const MembershipCertificate& cert) {
  const Ring& r = cert.ring;
  Json j;
  j["kind"] = std::string(to_string(cert.kind));
  j["ring"] = r.names();
  j["target"] = cert.target.to_string(r);
  j["member"] = cert.member;
  j["generators"] = polys_json(cert.generators, r);
  if (cert.kind == CertificateKind::StructuredPropagation) {
    Json steps = Json::array();
    for (const auto& st : cert.steps) {
      Json discarded = Json::array();
      for (const auto& [t, d] : st.discarded)
        discarded.push_back({format_monomial(t, r), format_monomial(d, r)});
      steps.push_back({{"generator", st.generator},
                       {"multiplier", st.multiplier ? Json(r.name(*st.multiplier)) : Json()},
                       {"discarded", std::move(discarded)},
                       {"survivor", format_monomial(st.survivor, r)},
                       {"derived", format_monomial(st.derived, r)},
                       {"reason", st.reason}});
    }
    j["steps"] = std::move(steps);
    j["covered_by"] = format_monomial(cert.covered_by, r);
  } else {
    j["exponent"] = cert.exponent;
    j["cofactors"] = polys_json(cert.cofactors, r);
    j["remainder"] = cert.remainder.to_string(r);
  }
  return j;
}

MembershipCertificate certificate_from_json(const Json& j) {
  try {
    MembershipCertificate c;
    auto kind = j.at("kind").get<std::string>();
    if (kind == to_string(CertificateKind::DirectReduction))
      c.kind = CertificateKind::DirectReduction;
    else if (kind == to_string(CertificateKind::Rabinowitsch))
      c.kind = CertificateKind::Rabinowitsch;
    else if (kind == to_string(CertificateKind::StructuredPropagation))
      c.kind = CertificateKind::StructuredPropagation;
    else
      throw ParseError(0, "unknown certificate kind " + kind);
    c.ring = ring_from(j);
    const Ring& r = c.ring;
    c.target = Polynomial::parse(j.at("target").get<std::string>(), r);
    c.member = j.at("member").get<bool>();
    c.generators = polys_from(j.at("generators"), r);
    if (c.kind == CertificateKind::StructuredPropagation) {
      for (const auto& s : j.at("steps")) {
        PropagationStep st;
        st.generator = s.at("generator").get<std::size_t>();
        if (!s.at("multiplier").is_null()) {
          auto v = r.index_of(s.at("multiplier").get<std::string>());
          if (!v)
            throw ParseError(0, "unknown multiplier variable");
          st.multiplier = *v;
        }
        for (const auto& d : s.at("discarded"))
          st.discarded.emplace_back(monomial_from(d.at(0), r), monomial_from(d.at(1), r));
        st.survivor = monomial_from(s.at("survivor"), r);
        st.derived = monomial_from(s.at("derived"), r);
        st.reason = s.at("reason").get<std::string>();
        c.steps.push_back(std::move(st));
      }
      c.covered_by = monomial_from(j.at("covered_by"), r);
    } else {
      c.exponent = j.at("exponent").get<unsigned>();
      c.cofactors = polys_from(j.at("cofactors"), r);
      c.remainder = Polynomial::parse(j.at("remainder").get<std::string>(), r);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed certificate: ") + e.what());
  }
}

Json cleave_to_json(const CleaveCertificate& cert) {
  const auto& cl = cert.cleave;
  Ring r = cert.nu.ring();
  Json j;
  j["A"] = matrix_json(cl.A);
  j["A2"] = matrix_json(cl.A2);
  j["k"] = cl.k;
  j["direction"] = std::string(to_string(cl.direction));
  j["index_set"] = cl.index_set;
  Json points = Json::array();
  for (std::size_t i = 0; i < cert.nu.size(); ++i)
    points.push_back({{"name", cert.nu.names[i]},
                      {"role", std::string(to_string(cert.nu.roles[i]))},
                      {"point", vector_json(cert.nu.points[i])}});
  j["nu"] = std::move(points);
  auto simplices = [&](const Triangulation& t) {
    Json out = Json::array();
    for (const auto& s : t.simplices) {
      Json names = Json::array();
      for (std::size_t i : s)
        names.push_back(cert.nu.names[i]);
      out.push_back(std::move(names));
    }
    return out;
  };
  j["T"] = simplices(cert.T);
  j["T_prime"] = simplices(cert.T2);
  j["T_check"] = check_json(cert.check_T);
  j["T_prime_check"] = check_json(cert.check_T2);
  j["b"] = rationals_json(cert.b);
  j["c"] = cert.c.get_str();
  j["w"] = cert.w.to_string(r);
  j["w_p"] = cert.w_p.to_string(r);
  j["w_q"] = cert.w_q.to_string(r);
  j["p"] = side_json(cert.p, r);
  j["q"] = side_json(cert.q, r);
  j["mirror_A"] = mirror_json(cert.mirror_a);
  j["mirror_A2"] = mirror_json(cert.mirror_a2);
  j["hypotheses_hold"] = cert.hypotheses_hold;
  j["fast_path_agrees"] = cert.fast_path_agrees;
  j["warnings"] = cert.warnings;
  j["status"] = std::string(to_string(cert.status));
  return j;
}

Json report_to_json(const EquivalenceReport& report, std::optional<double> seconds) {
  Json j;
  j["A"] = format_polynomial(InvertiblePolynomial(report.A));
  j["A2"] = format_polynomial(InvertiblePolynomial(report.A2));
  j["group"] = group_json(report.group);
  j["b"] = rationals_json(report.b);
  j["c"] = report.c.get_str();
  Json links = Json::array();
  for (const auto& l : report.links)
    links.push_back(cleave_to_json(l));
  j["links"] = std::move(links);
  j["status"] = std::string(to_string(report.status));
  j["notes"] = report.notes;
  if (seconds)
    j["timing"] = {{"seconds", *seconds}};
  return j;
}

ReplaySummary replay_report(const Json& report) {
  ReplaySummary out;
  auto check = [&](const Json& c) {
    if (!c.contains("kind"))
      return; // negative Groebner answers carry no certificate
    bool ok = false;
    try {
      ok = replay(certificate_from_json(c));
    } catch (const Error&) {
      ok = false;
    }
    ++out.replayed;
    out.failed += ok ? 0 : 1;
  };
  for (const auto& link : report.at("links"))
    for (const char* side : {"p", "q"}) {
      const auto& s = link.at(side);
      for (const char* key : {"structured", "groebner"})
        if (!s.at(key).is_null())
          for (const auto& c : s.at(key))
            check(c);
    }
  return out;
}

} // namespace bhk
