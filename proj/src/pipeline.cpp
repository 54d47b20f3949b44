#include "bhk/pipeline.hpp"

#include <algorithm>
#include <future>

#include "bhk/invertible.hpp"

namespace bhk {

std::string_view to_string(LinkStatus s) {
  return s == LinkStatus::Equivalent ? "equivalent" : "not-certified";
}

std::vector<Cleave> cleave_to_fermat(const IntMatrix& a_in, const DiagonalGroup& g) {
  IntMatrix a = normalized_matrix(a_in);
  auto w = positive_weight_solve(a);
  std::size_t n = a.rows();
  IntMatrix fermat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (w.d % w.q[i] != 0)
      throw Error(ErrorCode::NotGorenstein,
                  "q_" + std::to_string(i) + " does not divide d = " + w.d.get_str());
    fermat(i, i) = w.d / w.q[i];
    if (!is_invariant(fermat.row(i), g))
      throw Error(ErrorCode::NotGorenstein,
                  "x" + std::to_string(i) + "^" + fermat(i, i).get_str() +
                      " is not invariant");
  }
  std::vector<Cleave> out;
  IntMatrix cur = a;
  for (std::size_t k = 0; k < n; ++k) {
    bool arrow = false;
    for (std::size_t c = 0; c < n; ++c)
      arrow = arrow || (c != k && cur(k, c) != 0);
    if (!arrow)
      continue;
    IntMatrix next = cur;
    for (std::size_t c = 0; c < n; ++c)
      next(k, c) = fermat(k, c);
    auto det = detect_cleave(cur, next);
    if (!det.cleave)
      throw Error(ErrorCode::InvalidArgument,
                  "arrow deletion at row " + std::to_string(k) +
                      " is not a cleave: " + det.reason);
    out.push_back(std::move(*det.cleave));
    cur = std::move(next);
  }
  return out;
}

std::vector<Cleave> connect(const IntMatrix& a, const IntMatrix& a2,
                            const DiagonalGroup& g) {
  auto first = cleave_to_fermat(a, g);
  auto second = cleave_to_fermat(a2, g);
  while (!first.empty() && !second.empty() && first.back().A == second.back().A &&
         first.back().A2 == second.back().A2) {
    first.pop_back();
    second.pop_back();
  }
  for (auto it = second.rbegin(); it != second.rend(); ++it)
    first.push_back(it->reversed());
  return first;
}

MirrorData bhk_mirror(const IntMatrix& a, const DiagonalGroup& g) {
  MirrorData m;
  m.transpose = a.transpose();
  m.weights = positive_weight_solve(m.transpose);
  m.dual = dual_group(a, g);
  auto jt = j_group(m.transpose);
  if (!m.dual.contains(jt))
    throw Error(ErrorCode::NotSubgroup, "J of the transpose is not inside the dual group");
  m.quotient_order = m.dual.order() / jt.order();
  m.gorenstein = is_gorenstein(m.weights, m.dual);
  return m;
}

namespace {

SideCertificate certify_side(const PointConfig& nu, const Triangulation& t,
                             const Cleave& cl, const std::vector<Polynomial>& jac,
                             const PipelineOptions& opt) {
  SideCertificate s;
  s.I = irrelevant_ideal(nu, t);
  s.J = subideal_J(nu, t);
  s.ideal.ring = nu.ring();
  std::vector<std::size_t> gen_of_var(jac.size(), SIZE_MAX);
  for (std::size_t v = 0; v < jac.size(); ++v) {
    if (jac[v].is_zero())
      continue;
    gen_of_var[v] = s.ideal.generators.size();
    s.ideal.generators.push_back(jac[v]);
  }
  std::size_t first_j = s.ideal.generators.size();
  for (const auto& m : s.J.generators)
    s.ideal.generators.push_back(Polynomial::term(m));

  for (const auto& m : s.I.generators)
    if (!s.J.contains(m))
      s.fast_targets.push_back(m);

  // Propagation order: the arrow-side variable, then the chain from the
  // head, then everything else.
  std::vector<std::size_t> schedule;
  auto add = [&](std::size_t v) {
    if (v < gen_of_var.size() && gen_of_var[v] != SIZE_MAX &&
        std::ranges::find(schedule, gen_of_var[v]) == schedule.end())
      schedule.push_back(gen_of_var[v]);
  };
  add(cl.direction == CleaveDirection::ArrowRemoved ? nu.k : nu.cleaved());
  for (std::size_t j : cl.index_set)
    add(j);
  for (std::size_t v = 0; v < jac.size(); ++v)
    add(v);
  for (std::size_t g = first_j; g < s.ideal.generators.size(); ++g)
    schedule.push_back(g);

  std::vector<Monomial> closure;
  s.fast_path = structured_propagation(s.fast_targets, s.ideal, schedule, &closure);
  if (s.fast_path) {
    std::vector<std::size_t> part;
    for (const auto& ap : classify(cl.arrow_matrix()).parts)
      if (std::ranges::find(ap.vars, cl.k) != ap.vars.end())
        part = ap.vars;
    for (const Monomial& d : closure)
      if (d.deg == 2 && d[nu.interior()] == 1)
        for (std::size_t j : part)
          if (d[j] == 1)
            s.propagation_range.push_back(j);
    std::sort(s.propagation_range.begin(), s.propagation_range.end());
  }
  if (opt.run_oracle || !s.fast_path) {
    s.oracle = containment_radical(s.I.generators, s.ideal, opt.groebner);
    s.contained = s.oracle->contained;
  } else {
    s.contained = true;
  }
  return s;
}

} // namespace

CleaveCertificate verify_cleave(const Cleave& cl, const DiagonalGroup& g,
                                const RatVector& b, const Rational& c,
                                const PipelineOptions& opt) {
  CleaveCertificate out;
  out.cleave = cl;
  out.b = b;
  out.c = c;
  std::size_t n = cl.A.rows();
  if (b.size() != n)
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(n) + " b coefficients");
  for (std::size_t i : cl.index_set)
    if (b[i] == 0) {
      out.hypotheses_hold = false;
      out.warnings.push_back("b_" + std::to_string(i) +
                             " = 0 on the index set; the fast path hypothesis fails");
    }
  out.nu = build_nu(cl, g);
  std::tie(out.T, out.T2) = triangulation_pair(out.nu);
  out.check_T = verify_triangulation(out.nu, out.T);
  out.check_T2 = verify_triangulation(out.nu, out.T2);
  if (!out.check_T.ok)
    out.warnings.push_back("T fails verification: " + out.check_T.violation);
  if (!out.check_T2.ok)
    out.warnings.push_back("T' fails verification: " + out.check_T2.violation);

  out.w = superpotential(out.nu, b, c);
  out.w_p = restrict_to_chart(out.w, out.nu, ChartSide::Xi);
  out.w_q = restrict_to_chart(out.w, out.nu, ChartSide::XiPrime);
  std::vector<Polynomial> jac;
  for (std::size_t v = 0; v < out.nu.size(); ++v)
    jac.push_back(out.w.derivative(v));

  out.p = certify_side(out.nu, out.T, cl, jac, opt);
  out.q = certify_side(out.nu, out.T2, cl, jac, opt);
  for (const SideCertificate* s : {&out.p, &out.q})
    if (s->fast_path && s->oracle && !s->oracle->contained)
      out.fast_path_agrees = false;
  if (!out.fast_path_agrees)
    throw Error(ErrorCode::InvarianceViolation,
                "fast path and Groebner oracle disagree");
  for (const SideCertificate* s : {&out.p, &out.q})
    if (s->oracle && s->oracle->contained && !s->fast_path)
      out.warnings.push_back("containment certified by the Groebner oracle only");

  out.mirror_a = bhk_mirror(cl.A, g);
  out.mirror_a2 = bhk_mirror(cl.A2, g);
  bool ok = out.p.contained && out.q.contained && out.check_T.ok && out.check_T2.ok;
  out.status = ok ? LinkStatus::Equivalent : LinkStatus::NotCertified;
  return out;
}

EquivalenceReport verify_equivalence(const IntMatrix& a_in, const IntMatrix& a2_in,
                                     const DiagonalGroup& g, const RatVector& b,
                                     const Rational& c, const PipelineOptions& opt) {
  EquivalenceReport r;
  r.A = normalized_matrix(a_in);
  r.A2 = normalized_matrix(a2_in);
  r.group = g;
  r.b = b;
  r.c = c;
  if (!(j_group(r.A) == j_group(r.A2)))
    throw Error(ErrorCode::JMismatch, "the two polynomials have different J");
  if (!g.contains(j_group(r.A)))
    throw Error(ErrorCode::NotSubgroup, "G does not contain J");
  if (!sl_group(r.A).contains(g) || !sl_group(r.A2).contains(g))
    throw Error(ErrorCode::NotSubgroup, "G is not inside SL of both polynomials");
  auto weights = positive_weight_solve(r.A);
  if (!is_gorenstein(weights, g))
    throw Error(ErrorCode::NotGorenstein,
                "P(" + weights.to_string() + ")/G is not Gorenstein");
  if (b.size() != r.A.rows())
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(r.A.rows()) + " b coefficients");

  auto seq = connect(r.A, r.A2, g);
  if (opt.parallel && seq.size() > 1) {
    std::vector<std::future<CleaveCertificate>> jobs;
    for (const auto& cl : seq)
      jobs.push_back(std::async(std::launch::async, [&cl, &g, &b, &c, &opt] {
        return verify_cleave(cl, g, b, c, opt);
      }));
    for (auto& j : jobs)
      r.links.push_back(j.get());
  } else {
    for (const auto& cl : seq)
      r.links.push_back(verify_cleave(cl, g, b, c, opt));
  }
  std::size_t good = 0;
  for (const auto& l : r.links)
    good += l.status == LinkStatus::Equivalent;
  r.status = good == r.links.size() ? LinkStatus::Equivalent : LinkStatus::NotCertified;
  r.notes.push_back(std::to_string(good) + " of " + std::to_string(r.links.size()) +
                    " links certified");
  if (std::ranges::any_of(b, [](const Rational& x) { return x == 0; }))
    r.notes.push_back("some b_i vanish; only links whose index sets avoid them are "
                      "covered by the family statement");
  if (r.status == LinkStatus::Equivalent && !r.links.empty())
    r.notes.push_back("both mirrors are open substacks of the same component of the "
                      "critical locus of w on Z(u), hence birational");
  return r;
}

namespace {

bool replay_side(const SideCertificate& s) {
  if (s.oracle)
    for (const auto& res : s.oracle->results)
      if (res.member && !replay(res.certificate))
        return false;
  if (s.fast_path)
    for (const auto& cert : *s.fast_path)
      if (!replay(cert))
        return false;
  return true;
}

} // namespace

bool replay_all(const EquivalenceReport& report) {
  return std::ranges::all_of(report.links, [](const CleaveCertificate& l) {
    return replay_side(l.p) && replay_side(l.q);
  });
}

} // namespace bhk
