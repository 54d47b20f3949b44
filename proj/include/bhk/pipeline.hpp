#pragma once

// Certification of derived equivalences between BHK mirrors: one cleave at a
// time, and along a cleave sequence through the Fermat polynomial.

#include <optional>
#include <string>
#include <vector>

#include "bhk/cleave.hpp"
#include "bhk/groebner.hpp"
#include "bhk/symmetry.hpp"
#include "bhk/toric.hpp"

namespace bhk {

/// Arrow deletions, lowest variable first, ending at the Fermat polynomial
/// x_i^{d/q_i}. Throws NotGorenstein.
std::vector<Cleave> cleave_to_fermat(const IntMatrix& a, const DiagonalGroup& g);

/// cleave_to_fermat(a) followed by the reversed route of a2, with the shared
/// tail of both routes removed.
std::vector<Cleave> connect(const IntMatrix& a, const IntMatrix& a2,
                            const DiagonalGroup& g);

struct MirrorData {
  IntMatrix transpose;
  WeightSystem weights;     // of the transpose
  DiagonalGroup dual;       // G^T inside Aut(A^T)
  Integer quotient_order;   // |G^T / J(A^T)|
  bool gorenstein = false;  // of the mirror ambient
};
MirrorData bhk_mirror(const IntMatrix& a, const DiagonalGroup& g);

struct PipelineOptions {
  GroebnerOptions groebner;
  /// Run the Groebner oracle even when the fast path succeeds.
  bool run_oracle = true;
  /// Certify links on separate threads.
  bool parallel = true;
};

/// One chamber of the cleave: I, J and the containment I in sqrt(dw, J).
struct SideCertificate {
  MonomialIdeal I;
  MonomialIdeal J;
  PolyIdeal ideal; // partial derivatives of w, then the generators of J
  std::optional<ContainmentResult> oracle;
  /// Fast-path certificates for the generators of I outside J.
  std::optional<std::vector<MembershipCertificate>> fast_path;
  std::vector<Monomial> fast_targets;
  /// Variables j of the atomic part of the arrow with u*y_j derived by the
  /// fast path, sorted.
  std::vector<std::size_t> propagation_range;
  bool contained = false;
};

enum class LinkStatus { Equivalent, NotCertified };
std::string_view to_string(LinkStatus s);

struct CleaveCertificate {
  Cleave cleave;
  PointConfig nu;
  Triangulation T, T2;
  TriangulationCheck check_T, check_T2;
  RatVector b;
  Rational c;
  Polynomial w;
  Polynomial w_p, w_q; // w on the charts of Xi and Xi'
  SideCertificate p, q;
  MirrorData mirror_a, mirror_a2;
  bool hypotheses_hold = true; // b_i != 0 for i in the index set
  bool fast_path_agrees = true;
  std::vector<std::string> warnings;
  LinkStatus status = LinkStatus::NotCertified;
};

/// Throws ResourceLimit and InvarianceViolation.
CleaveCertificate verify_cleave(const Cleave& cl, const DiagonalGroup& g,
                                const RatVector& b, const Rational& c,
                                const PipelineOptions& opt = {});

struct EquivalenceReport {
  IntMatrix A, A2;
  DiagonalGroup group;
  RatVector b;
  Rational c;
  std::vector<CleaveCertificate> links;
  LinkStatus status = LinkStatus::NotCertified;
  std::vector<std::string> notes;
};

/// Throws NotGorenstein, JMismatch, NotSubgroup and whatever the links throw.
EquivalenceReport verify_equivalence(const IntMatrix& a, const IntMatrix& a2,
                                     const DiagonalGroup& g, const RatVector& b,
                                     const Rational& c,
                                     const PipelineOptions& opt = {});

/// Re-validates every certificate of the report by exact arithmetic.
bool replay_all(const EquivalenceReport& report);

} // namespace bhk
