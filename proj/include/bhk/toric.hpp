#pragma once

// Toric side of a cleave in exponent coordinates: a point s in Z^{n+1}
// stands for the monomial x^s, every point lies on q . s = d, and lattice
// questions are asked in the G-invariant exponent lattice.

#include <string>
#include <utility>
#include <vector>

#include "bhk/cleave.hpp"
#include "bhk/polynomial.hpp"
#include "bhk/symmetry.hpp"

namespace bhk {

/// All s >= 0 with q . s = d that are G-invariant, in decreasing
/// lexicographic order.
std::vector<IntVector> anticanonical_invariant_monomials(const WeightSystem& w,
                                                         const DiagonalGroup& g);

enum class PointRole { Monomial, Cleaved, Interior };
std::string_view to_string(PointRole r);

/// nu = rows of A, row k of A', and the interior point (1,...,1), in that
/// order. Point i is the ring variable i; u is the interior point.
struct PointConfig {
  std::vector<IntVector> points;
  std::vector<PointRole> roles;
  std::vector<std::string> names;
  WeightSystem weights;
  DiagonalGroup group;
  std::size_t k = 0;

  [[nodiscard]] std::size_t size() const { return points.size(); }
  [[nodiscard]] std::size_t dimension() const { return weights.size(); }
  [[nodiscard]] std::size_t cleaved() const { return points.size() - 2; }
  [[nodiscard]] std::size_t interior() const { return points.size() - 1; }
  [[nodiscard]] Ring ring() const { return Ring(names); }
};

/// Throws InvarianceViolation when a point is off the hyperplane or not
/// invariant under g.
PointConfig make_point_config(std::vector<IntVector> points,
                              std::vector<PointRole> roles,
                              std::vector<std::string> names,
                              const WeightSystem& w, const DiagonalGroup& g,
                              std::size_t k);

/// The arrow-side point at row k is named y_k', the Fermat-side one y_k.
PointConfig build_nu(const Cleave& cl, const DiagonalGroup& g);

/// Maximal simplices as sorted index sets, sorted.
struct Triangulation {
  std::vector<std::vector<std::size_t>> simplices;
  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// T from Xi = rows of A with m' = the cleaved point, T' from Xi' with
/// m = point k. Throws DegenerateConfig.
std::pair<Triangulation, Triangulation> triangulation_pair(const PointConfig& nu);

struct TriangulationCheck {
  bool ok = false;
  std::string violation; // empty when ok
  std::vector<Integer> volumes; // normalized, one per simplex
  Integer total = 0;            // normalized volume of Conv(nu)
};

/// Full-dimensional simplices, proper pairwise intersection (no circuit
/// splits across two simplices), and exact volume cover of Conv(nu).
TriangulationCheck verify_triangulation(const PointConfig& nu,
                                        const Triangulation& t);

/// Normalized volume in the G-invariant lattice of the affine span.
Integer normalized_volume(const PointConfig& nu,
                          const std::vector<std::size_t>& simplex);

/// Squarefree monomial ideal over the ring of nu, minimal generators in
/// decreasing grevlex order.
struct MonomialIdeal {
  std::vector<Monomial> generators;

  [[nodiscard]] std::vector<std::string> to_strings(const Ring& ring) const;
  [[nodiscard]] bool contains(const Monomial& m) const;
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};
MonomialIdeal minimalize(std::vector<Monomial> gens);

MonomialIdeal irrelevant_ideal(const PointConfig& nu, const Triangulation& t);
/// Generators from the simplices that contain the interior point.
MonomialIdeal subideal_J(const PointConfig& nu, const Triangulation& t);

/// w = sum_i b_i u prod_p y_p^{p_i} + c u prod_p y_p over non-interior p.
Polynomial superpotential(const PointConfig& nu, const RatVector& b,
                          const Rational& c);

enum class ChartSide { Xi, XiPrime };
/// Sets u and the point outside the chosen side to 1.
Polynomial restrict_to_chart(const Polynomial& w, const PointConfig& nu,
                             ChartSide side);

} // namespace bhk
