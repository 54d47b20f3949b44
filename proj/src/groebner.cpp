#include "bhk/groebner.hpp"

#include <algorithm>

namespace bhk {

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
  case CertificateKind::DirectReduction:
    return "direct-reduction";
  case CertificateKind::Rabinowitsch:
    return "rabinowitsch";
  case CertificateKind::StructuredPropagation:
    return "structured-propagation";
  }
  return "?";
}

namespace {

struct Entry {
  Polynomial p;
  unsigned sugar = 0;
  std::vector<Polynomial> rep;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
public:
  Buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& opt)
      : opt_(opt), ninputs_(gens.size()) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gens[k].is_zero())
        continue;
      Entry e;
      e.p = gens[k];
      e.sugar = gens[k].total_degree();
      if (opt_.track_cofactors) {
        e.rep.assign(ninputs_, Polynomial{});
        e.rep[k] = Polynomial::constant(1);
      }
      make_monic(e);
      if (insert(std::move(e)))
        return;
    }
  }

  GroebnerBasis run() {
    while (!unit_ && !pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k];
        const auto& b = pairs_[best];
        if (a.sugar != b.sugar ? a.sugar < b.sugar
                               : grevlex_compare(a.lcm, b.lcm) < 0)
          best = k;
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (++spairs_ > opt_.max_spairs)
        throw Error(ErrorCode::ResourceLimit,
                    "S-pair limit " + std::to_string(opt_.max_spairs) +
                        " exceeded");
      Entry s = spoly(pr);
      reduce_full(s);
      if (s.p.is_zero())
        continue;
      make_monic(s);
      insert(std::move(s));
    }
    return finish();
  }

private:
  void check_terms(std::size_t n) {
    if (n > opt_.max_terms)
      throw Error(ErrorCode::ResourceLimit,
                  "term limit " + std::to_string(opt_.max_terms) + " exceeded");
  }

  void make_monic(Entry& e) {
    Rational inv = 1 / e.p.leading().c;
    e.p = e.p.scaled(inv);
    for (auto& r : e.rep)
      r = r.scaled(inv);
  }

  // e -= c * m * polys_[k]
  void subtract(Entry& e, std::size_t k, const Monomial& m, const Rational& c) {
    e.p.subtract_multiple(polys_[k].p, m, c);
    check_terms(e.p.size());
    for (std::size_t j = 0; j < e.rep.size(); ++j) {
      e.rep[j].subtract_multiple(polys_[k].rep[j], m, c);
      check_terms(e.rep[j].size());
    }
  }

  Entry spoly(const Pair& pr) {
    const auto& a = polys_[pr.i];
    const auto& b = polys_[pr.j];
    Entry s;
    s.sugar = pr.sugar;
    Monomial ma = quotient(pr.lcm, a.p.leading().m);
    Monomial mb = quotient(pr.lcm, b.p.leading().m);
    s.p = a.p.times_term(ma, 1);
    if (opt_.track_cofactors) {
      s.rep.resize(ninputs_);
      for (std::size_t j = 0; j < ninputs_; ++j)
        s.rep[j] = a.rep[j].times_term(ma, 1);
    }
    subtract(s, pr.j, mb, 1);
    return s;
  }

  std::optional<std::size_t> find_reducer(const Monomial& m) const {
    for (std::size_t k : active_)
      if (divides(polys_[k].p.leading().m, m))
        return k;
    return std::nullopt;
  }

  // Full reduction of e by the active basis.
  void reduce_full(Entry& e) {
    std::size_t pos = 0;
    while (pos < e.p.size()) {
      const Term& t = e.p.terms()[pos];
      auto k = find_reducer(t.m);
      if (!k) {
        ++pos;
        continue;
      }
      Monomial m = quotient(t.m, polys_[*k].p.leading().m);
      Rational c = t.c; // reducers are monic
      subtract(e, *k, m, c);
    }
  }

  // Gebauer-Moeller update; returns true when the ideal became the unit.
  bool insert(Entry e) {
    if (e.p.is_constant()) {
      unit_entry_ = std::move(e);
      unit_ = true;
      return true;
    }
    std::size_t h = polys_.size();
    polys_.push_back(std::move(e));
    const Monomial& lh = polys_[h].p.leading().m;

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool keep = true;
    };
    std::vector<Cand> c;
    for (std::size_t g : active_)
      c.push_back({g, lcm(lh, polys_[g].p.leading().m)});
    // Chain criterion among new pairs: drop (h,g1) when another new pair's
    // lcm properly divides it (or equals it and comes first), unless the
    // leading monomials are coprime.
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Monomial& lg = polys_[c[a].g].p.leading().m;
      if (coprime(lh, lg))
        continue;
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (a == b || !c[b].keep)
          continue;
        if (divides(c[b].lcm, c[a].lcm) &&
            (!(c[b].lcm == c[a].lcm) || b < a)) {
          c[a].keep = false;
          break;
        }
      }
    }
    // Among kept pairs with equal lcm, a coprime one makes the others moot.
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (!c[a].keep)
        continue;
      const Monomial& lg = polys_[c[a].g].p.leading().m;
      if (coprime(lh, lg))
        continue;
      for (std::size_t b = 0; b < c.size(); ++b)
        if (b != a && c[b].lcm == c[a].lcm &&
            coprime(lh, polys_[c[b].g].p.leading().m)) {
          c[a].keep = false;
          break;
        }
    }
    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!divides(lh, p.lcm))
        return false;
      Monomial l1 = lcm(polys_[p.i].p.leading().m, lh);
      Monomial l2 = lcm(polys_[p.j].p.leading().m, lh);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    for (const auto& cand : c) {
      if (!cand.keep)
        continue;
      const Monomial& lg = polys_[cand.g].p.leading().m;
      if (coprime(lh, lg))
        continue; // product criterion
      unsigned sug = std::max(polys_[h].sugar + (cand.lcm.deg - lh.deg),
                              polys_[cand.g].sugar + (cand.lcm.deg - lg.deg));
      pairs_.push_back({cand.g, h, cand.lcm, sug});
    }
    std::erase_if(active_, [&](std::size_t g) {
      return divides(lh, polys_[g].p.leading().m);
    });
    active_.push_back(h);
    return false;
  }

  GroebnerBasis finish() {
    GroebnerBasis out;
    out.spairs = spairs_;
    if (unit_) {
      make_monic(unit_entry_);
      out.basis.push_back(unit_entry_.p);
      if (opt_.track_cofactors)
        out.cofactors.push_back(unit_entry_.rep);
      return out;
    }
    // Interreduce: tail-reduce every element by the others.
    std::vector<std::size_t> order = active_;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return grevlex_compare(polys_[a].p.leading().m,
                             polys_[b].p.leading().m) < 0;
    });
    std::vector<std::size_t> done;
    for (std::size_t k : order) {
      Entry e = polys_[k];
      // Keep the leading term; reduce the tail by the other elements.
      std::size_t pos = 1;
      while (pos < e.p.size()) {
        const Term& t = e.p.terms()[pos];
        std::optional<std::size_t> red;
        for (std::size_t o : order)
          if (o != k && divides(polys_[o].p.leading().m, t.m)) {
            red = o;
            break;
          }
        if (!red) {
          ++pos;
          continue;
        }
        Monomial m = quotient(t.m, polys_[*red].p.leading().m);
        Rational c = t.c;
        subtract(e, *red, m, c);
      }
      polys_[k] = std::move(e);
      done.push_back(k);
    }
    std::sort(done.begin(), done.end(), [&](std::size_t a, std::size_t b) {
      return grevlex_compare(polys_[a].p.leading().m,
                             polys_[b].p.leading().m) > 0;
    });
    for (std::size_t k : done) {
      out.basis.push_back(polys_[k].p);
      if (opt_.track_cofactors)
        out.cofactors.push_back(polys_[k].rep);
    }
    return out;
  }

  GroebnerOptions opt_;
  std::size_t ninputs_;
  std::vector<Entry> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::size_t spairs_ = 0;
  bool unit_ = false;
  Entry unit_entry_;
};

} // namespace

GroebnerBasis groebner(const std::vector<Polynomial>& generators,
                       const GroebnerOptions& options) {
  return Buchberger(generators, options).run();
}

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  Division out;
  out.quotients.assign(divisors.size(), Polynomial{});
  Polynomial p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    Term t = p.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (g.is_zero() || !divides(g.leading().m, t.m))
        continue;
      Monomial m = quotient(t.m, g.leading().m);
      Rational c = t.c / g.leading().c;
      out.quotients[i] += Polynomial::term(m, c);
      p.subtract_multiple(g, m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(t);
      p -= Polynomial::term(t.m, t.c);
    }
  }
  out.remainder = Polynomial::from_terms(std::move(rem));
  return out;
}

namespace {

Monomial support(const Monomial& m) {
  Monomial s;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m[i] > 0)
      s.set(i, 1);
  return s;
}

bool replay_structured(const MembershipCertificate& cert) {
  std::vector<Monomial> known;
  for (const auto& g : cert.generators)
    if (g.is_monomial())
      known.push_back(support(g.leading().m));
  auto is_known = [&](const Monomial& m) {
    return std::ranges::any_of(known, [&](const Monomial& k) { return k == m; });
  };
  for (const auto& step : cert.steps) {
    if (step.generator >= cert.generators.size())
      return false;
    Polynomial p = cert.generators[step.generator];
    if (step.multiplier)
      p = p * Polynomial::variable(*step.multiplier);
    bool survivor_seen = false;
    std::size_t matched = 0;
    for (const auto& t : p.terms()) {
      if (t.m == step.survivor) {
        survivor_seen = true;
        continue;
      }
      auto it = std::ranges::find_if(step.discarded, [&](const auto& d) {
        return d.first == t.m;
      });
      if (it == step.discarded.end() || !is_known(it->second) ||
          !divides(it->second, t.m))
        return false;
      ++matched;
    }
    if (!survivor_seen || matched != step.discarded.size() ||
        !(step.derived == support(step.survivor)))
      return false;
    known.push_back(step.derived);
  }
  return is_known(cert.covered_by) && divides(cert.covered_by, cert.target.leading().m) &&
         cert.target.is_monomial();
}

} // namespace

bool replay(const MembershipCertificate& cert) {
  switch (cert.kind) {
  case CertificateKind::DirectReduction: {
    if (cert.cofactors.size() != cert.generators.size())
      return false;
    Polynomial sum = cert.remainder;
    for (std::size_t j = 0; j < cert.generators.size(); ++j)
      sum += cert.cofactors[j] * cert.generators[j];
    if (!(sum == cert.target.pow(cert.exponent)))
      return false;
    // The remainder must be fully reduced for a negative conclusion.
    for (const auto& t : cert.remainder.terms())
      for (const auto& g : cert.generators)
        if (!g.is_zero() && divides(g.leading().m, t.m))
          return false;
    return cert.member == cert.remainder.is_zero();
  }
  case CertificateKind::Rabinowitsch: {
    if (!cert.member || cert.cofactors.size() != cert.generators.size())
      return false;
    Polynomial sum;
    for (std::size_t j = 0; j < cert.generators.size(); ++j)
      sum += cert.cofactors[j] * cert.generators[j];
    return sum == cert.target.pow(cert.exponent);
  }
  case CertificateKind::StructuredPropagation:
    return cert.member && replay_structured(cert);
  }
  return false;
}

MembershipResult ideal_membership(const Polynomial& f, const Ring& ring,
                                  const std::vector<Polynomial>& gb) {
  Division d = divide(f, gb);
  MembershipResult out;
  auto& c = out.certificate;
  c.kind = CertificateKind::DirectReduction;
  c.ring = ring;
  c.target = f;
  c.generators = gb;
  c.cofactors = std::move(d.quotients);
  c.remainder = std::move(d.remainder);
  c.member = c.remainder.is_zero();
  out.member = c.member;
  return out;
}

MembershipResult radical_membership(const Polynomial& f, const PolyIdeal& ideal,
                                    const GroebnerOptions& options) {
  MembershipResult out;
  auto& cert = out.certificate;
  cert.ring = ideal.ring;
  cert.target = f;
  cert.generators = ideal.generators;
  if (f.is_zero()) {
    cert.kind = CertificateKind::DirectReduction;
    cert.cofactors.assign(ideal.generators.size(), Polynomial{});
    cert.member = out.member = true;
    return out;
  }
  // A generator dividing f gives a one-line certificate.
  if (f.is_monomial()) {
    for (std::size_t j = 0; j < ideal.generators.size(); ++j) {
      const auto& g = ideal.generators[j];
      if (g.is_monomial() && divides(g.leading().m, f.leading().m)) {
        cert.kind = CertificateKind::DirectReduction;
        cert.cofactors.assign(ideal.generators.size(), Polynomial{});
        cert.cofactors[j] = Polynomial::term(
            quotient(f.leading().m, g.leading().m), f.leading().c / g.leading().c);
        cert.member = out.member = true;
        return out;
      }
    }
  }
  std::size_t t = ideal.ring.size();
  (void)ideal.ring.extended("t"); // throws when there is no room for t
  std::vector<Polynomial> gens = ideal.generators;
  for (const auto& g : gens)
    if (g.degree_in(t) != 0)
      throw Error(ErrorCode::InvalidArgument, "generator uses the extra variable");
  gens.push_back(Polynomial::constant(1) - f * Polynomial::variable(t));

  GroebnerOptions opt = options;
  opt.track_cofactors = false;
  GroebnerBasis gb = groebner(gens, opt);
  cert.kind = CertificateKind::Rabinowitsch;
  if (!gb.is_unit()) {
    cert.member = out.member = false;
    return out;
  }
  opt.track_cofactors = true;
  gb = groebner(gens, opt);
  // 1 = sum_j h_j g_j + h_t (1 - t f); substitute t = 1/f and clear
  // denominators with f^e, e = max t-degree of the h_j.
  const auto& h = gb.cofactors.at(0);
  Rational scale = 1 / gb.basis[0].leading().c;
  unsigned e = 0;
  for (std::size_t j = 0; j + 1 < h.size(); ++j)
    e = std::max(e, h[j].degree_in(t));
  std::vector<Polynomial> fpow{Polynomial::constant(1)};
  for (unsigned k = 1; k <= e; ++k)
    fpow.push_back(fpow.back() * f);
  cert.exponent = e;
  cert.cofactors.clear();
  for (std::size_t j = 0; j + 1 < h.size(); ++j) {
    Polynomial c;
    for (unsigned k = 0; k <= h[j].degree_in(t); ++k)
      c += h[j].coefficient_of(t, k) * fpow[e - k];
    cert.cofactors.push_back(c.scaled(scale));
  }
  cert.member = out.member = true;
  if (!replay(cert))
    throw Error(ErrorCode::InvarianceViolation,
                "radical membership certificate failed to replay");
  return out;
}

std::optional<std::vector<MembershipCertificate>>
structured_propagation(const std::vector<Monomial>& targets, const PolyIdeal& ideal,
                       const std::vector<std::size_t>& schedule,
                       std::vector<Monomial>* closure) {
  const auto& gens = ideal.generators;
  std::vector<Monomial> known;
  for (const auto& g : gens)
    if (g.is_monomial())
      known.push_back(support(g.leading().m));
  auto known_divisor = [&](const Monomial& m) -> std::optional<Monomial> {
    for (const auto& k : known)
      if (divides(k, m))
        return k;
    return std::nullopt;
  };
  auto all_covered = [&] {
    return std::ranges::all_of(targets, [&](const Monomial& t) {
      return known_divisor(t).has_value();
    });
  };
  std::vector<PropagationStep> steps;
  bool progress = true;
  while (progress && (closure || !all_covered())) {
    progress = false;
    for (std::size_t gi : schedule) {
      if (gi >= gens.size() || gens[gi].is_zero())
        continue;
      for (std::size_t mi = 0; mi <= ideal.ring.size() && !progress; ++mi) {
        std::optional<std::size_t> mult;
        if (mi > 0)
          mult = mi - 1;
        Polynomial p = gens[gi];
        if (mult)
          p = p.times_term(Monomial::variable(*mult), 1);
        PropagationStep step;
        step.generator = gi;
        step.multiplier = mult;
        std::optional<Monomial> survivor;
        bool ok = true;
        for (const auto& t : p.terms()) {
          if (auto d = known_divisor(t.m)) {
            step.discarded.emplace_back(t.m, *d);
          } else if (!survivor) {
            survivor = t.m;
          } else {
            ok = false;
            break;
          }
        }
        if (!ok || !survivor || known_divisor(support(*survivor)))
          continue;
        step.survivor = *survivor;
        step.derived = support(*survivor);
        step.reason = "all other terms are divisible by known radical monomials";
        known.push_back(step.derived);
        steps.push_back(std::move(step));
        progress = true;
      }
      if (progress)
        break;
    }
  }
  if (closure)
    for (const auto& st : steps)
      closure->push_back(st.derived);
  if (!all_covered())
    return std::nullopt;
  std::vector<MembershipCertificate> out;
  for (const auto& t : targets) {
    MembershipCertificate c;
    c.kind = CertificateKind::StructuredPropagation;
    c.ring = ideal.ring;
    c.target = Polynomial::term(t);
    c.generators = gens;
    c.member = true;
    // Shortest prefix of the steps that covers the target.
    std::vector<Monomial> seen;
    for (const auto& g : gens)
      if (g.is_monomial())
        seen.push_back(support(g.leading().m));
    std::size_t used = 0;
    auto hit = [&]() -> std::optional<Monomial> {
      for (const auto& k : seen)
        if (divides(k, t))
          return k;
      return std::nullopt;
    };
    while (!hit()) {
      seen.push_back(steps[used].derived);
      ++used;
    }
    c.steps.assign(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(used));
    c.covered_by = *hit();
    out.push_back(std::move(c));
  }
  return out;
}

ContainmentResult containment_radical(const std::vector<Monomial>& monomials,
                                      const PolyIdeal& ideal,
                                      const GroebnerOptions& options) {
  ContainmentResult out;
  for (const auto& m : monomials) {
    auto r = radical_membership(Polynomial::term(m), ideal, options);
    out.contained = out.contained && r.member;
    out.results.push_back(std::move(r));
  }
  return out;
}

} // namespace bhk
