#pragma once

// Finite diagonal symmetry groups. A phase a in Q/Z stands for exp(2 pi i a).
// A group G inside (Q/Z)^m with exponent D is stored as the lattice
// L = D*G + D*Z^m in Z^m, in Hermite normal form.

#include <string>
#include <vector>

#include "bhk/linalg.hpp"

namespace bhk {

using Phase = RatVector;

/// Entries reduced into [0, 1).
Phase reduce_phase(const Phase& p);

class DiagonalGroup {
public:
  DiagonalGroup() = default;
  /// Trivial group on m coordinates.
  explicit DiagonalGroup(std::size_t m);
  static DiagonalGroup generated_by(std::size_t m,
                                    const std::vector<Phase>& generators);
  /// Group with exponent D whose lattice is spanned by the rows of basis
  /// together with D*Z^m.
  static DiagonalGroup from_lattice(const Integer& exponent,
                                    const IntMatrix& basis);

  [[nodiscard]] std::size_t dimension() const { return m_; }
  [[nodiscard]] const Integer& exponent() const { return exponent_; }
  [[nodiscard]] const IntMatrix& canonical_form() const { return hnf_; }
  [[nodiscard]] const Integer& order() const { return order_; }
  /// Nonzero rows of the canonical form divided by the exponent.
  [[nodiscard]] const std::vector<Phase>& generators() const {
    return generators_;
  }
  [[nodiscard]] bool trivial() const { return order_ == 1; }

  /// HNF basis of D'*G + D'*Z^m for a multiple D' of the exponent.
  [[nodiscard]] IntMatrix lattice_at(const Integer& scale) const;

  [[nodiscard]] bool contains(const Phase& g) const;
  [[nodiscard]] bool contains(const DiagonalGroup& h) const;
  /// All elements, sorted; throws TooLarge above limit.
  [[nodiscard]] std::vector<Phase> elements(std::size_t limit = 1000000) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const DiagonalGroup& a, const DiagonalGroup& b) {
    return a.m_ == b.m_ && a.exponent_ == b.exponent_ && a.hnf_ == b.hnf_;
  }
  /// Deterministic total order: by order, then canonical form.
  friend bool operator<(const DiagonalGroup& a, const DiagonalGroup& b);

private:
  std::size_t m_ = 0;
  Integer exponent_ = 1;
  IntMatrix hnf_;
  Integer order_ = 1;
  std::vector<Phase> generators_;
};

DiagonalGroup intersect(const DiagonalGroup& a, const DiagonalGroup& b);
DiagonalGroup join(const DiagonalGroup& a, const DiagonalGroup& b);
/// {g in G : w . g in Z}.
DiagonalGroup character_kernel(const DiagonalGroup& g,
                               std::span<const Integer> w);

DiagonalGroup aut_diag(const IntMatrix& a);
DiagonalGroup sl_group(const IntMatrix& a);
DiagonalGroup j_group(const IntMatrix& a);

bool is_invariant(std::span<const Integer> s, const DiagonalGroup& g);
/// HNF basis of {s in Z^m : s . g in Z for all g in G}.
IntMatrix invariant_lattice(const DiagonalGroup& g);

/// Throws NotSubgroup when G is not inside aut_diag(a).
DiagonalGroup dual_group(const IntMatrix& a, const DiagonalGroup& g);

/// Every G with J = J' inside G inside SL(a) n SL(a2), sorted.
/// Throws JMismatch or TooLarge.
std::vector<DiagonalGroup> admissible_groups(const IntMatrix& a,
                                             const IntMatrix& a2,
                                             const Integer& bound = 1000000);

/// Invariant factors of G/H; generator lifts are numerators over
/// lift_denominator. Throws NotSubgroup.
struct GroupQuotient {
  AbelianQuotient structure;
  Integer lift_denominator = 1;
};
GroupQuotient group_quotient_structure(const DiagonalGroup& g,
                                       const DiagonalGroup& h);

/// Group text format: one generator per line, comma separated p/q phases.
DiagonalGroup parse_group(std::size_t m, std::string_view text);
std::string format_group(const DiagonalGroup& g);

} // namespace bhk
