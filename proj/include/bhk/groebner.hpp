#pragma once

// Buchberger's algorithm over Q (grevlex, sugar selection, Gebauer-Moeller
// pair criteria), division, and ideal / radical membership with
// certificates that can be replayed without recomputing a Groebner basis.

#include <optional>
#include <string>
#include <vector>

#include "bhk/polynomial.hpp"

namespace bhk {

struct GroebnerOptions {
  std::size_t max_spairs = 200000;
  std::size_t max_terms = 2000000;
  /// Keep, for every basis element, its expression in the input generators.
  bool track_cofactors = false;
};

struct GroebnerBasis {
  std::vector<Polynomial> basis; // reduced, monic, decreasing leading terms
  std::string order = "grevlex";
  /// cofactors[i][j]: basis[i] = sum_j cofactors[i][j] * input[j].
  std::vector<std::vector<Polynomial>> cofactors;
  std::size_t spairs = 0;

  [[nodiscard]] bool is_unit() const {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
  }
};

/// Throws ResourceLimit when a configured bound is exceeded.
GroebnerBasis groebner(const std::vector<Polynomial>& generators,
                       const GroebnerOptions& options = {});

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
/// f = sum q_i g_i + r with no term of r divisible by any leading term.
Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

enum class CertificateKind { DirectReduction, Rabinowitsch, StructuredPropagation };
std::string_view to_string(CertificateKind kind);

/// One step of the structured propagation: the generator (optionally
/// multiplied by a variable) has all but one term divisible by monomials
/// already known to lie in the radical, so the remaining term's support does
/// too.
struct PropagationStep {
  std::size_t generator = 0;              // index into certificate.generators
  std::optional<std::size_t> multiplier;  // variable index
  std::vector<std::pair<Monomial, Monomial>> discarded; // (term, known divisor)
  Monomial survivor;
  Monomial derived; // squarefree support of the survivor
  std::string reason;
};

struct MembershipCertificate {
  CertificateKind kind = CertificateKind::DirectReduction;
  Ring ring;
  Polynomial target;
  std::vector<Polynomial> generators;
  bool member = false;

  // Direct reduction and Rabinowitsch: target^exponent =
  // sum cofactors[j] * generators[j] (+ remainder for direct reduction).
  unsigned exponent = 1;
  std::vector<Polynomial> cofactors;
  Polynomial remainder;

  // Structured propagation: seeds are generators that are monomials;
  // coverage pairs (known radical monomial) | target.
  std::vector<PropagationStep> steps;
  Monomial covered_by;
};

/// Re-derives the certificate's conclusion with exact arithmetic.
bool replay(const MembershipCertificate& cert);

struct MembershipResult {
  bool member = false;
  MembershipCertificate certificate;
};

/// Requires gb to be a Groebner basis.
MembershipResult ideal_membership(const Polynomial& f, const Ring& ring,
                                  const std::vector<Polynomial>& gb);

/// Rabinowitsch: f in sqrt(I) iff 1 in I + <1 - t f>. Positive answers carry
/// a certificate f^e = sum c_j g_j; negative answers are not certified.
MembershipResult radical_membership(const Polynomial& f, const PolyIdeal& ideal,
                                    const GroebnerOptions& options = {});

/// Structured propagation: starting from the supports of the monomial
/// generators, repeatedly look for a generator (tried in `schedule` order,
/// first alone and then times each variable) whose terms are all divisible
/// by known radical monomials except one; that term's support joins the
/// known set. Returns one certificate per target, or nothing when some
/// target is never reached. With `closure`, propagation continues to the
/// fixpoint and every derived monomial is stored there.
std::optional<std::vector<MembershipCertificate>>
structured_propagation(const std::vector<Monomial>& targets, const PolyIdeal& ideal,
                       const std::vector<std::size_t>& schedule,
                       std::vector<Monomial>* closure = nullptr);

struct ContainmentResult {
  bool contained = true;
  std::vector<MembershipResult> results; // one per monomial generator
};

/// Every monomial of `monomials` lies in sqrt(ideal).
ContainmentResult containment_radical(const std::vector<Monomial>& monomials,
                                      const PolyIdeal& ideal,
                                      const GroebnerOptions& options = {});

} // namespace bhk
