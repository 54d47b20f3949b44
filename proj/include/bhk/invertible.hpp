#pragma once

// Invertible (Kreuzer-Skarke) polynomials F = sum_i b_i prod_j x_j^{a_ij}.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bhk/linalg.hpp"

namespace bhk {

class DiagonalGroup;

struct InvertiblePolynomial {
  IntMatrix A;                        // row i = exponents of monomial i
  RatVector coeffs;                   // b_i, one per row
  std::vector<std::string> var_names; // x0..xn by default

  InvertiblePolynomial() = default;
  /// Coefficients default to 1. Throws ShapeError for a non-square matrix,
  /// InvalidArgument for negative entries or zero coefficients.
  explicit InvertiblePolynomial(IntMatrix a, RatVector b = {},
                                std::vector<std::string> names = {});

  [[nodiscard]] std::size_t size() const { return A.rows(); }
  friend bool operator==(const InvertiblePolynomial&,
                         const InvertiblePolynomial&) = default;
};

InvertiblePolynomial parse_polynomial(std::string_view text);

/// "x0^3 + x1^2*x2 + x2^3"; coefficients other than 1 are printed as "c*".
std::string format_polynomial(const InvertiblePolynomial& p,
                              std::string_view prefix = "x");

enum class AtomicKind { Fermat, Chain, Loop };
std::string_view to_string(AtomicKind kind);

/// One atomic summand. vars lists ambient variable indices in arrow order
/// (vars[i] -> vars[i+1]); exponents[i] is the diagonal exponent of vars[i].
/// rows[i] is the row of A whose monomial is x_{vars[i]}^{a} x_{vars[i+1]}.
struct AtomicPart {
  AtomicKind kind = AtomicKind::Fermat;
  std::vector<std::size_t> vars;
  std::vector<std::size_t> rows;
  IntVector exponents;

  [[nodiscard]] std::string to_string() const; // "Chain(2,3)"
  friend bool operator==(const AtomicPart&, const AtomicPart&) = default;
};

struct AtomicDecomposition {
  std::vector<AtomicPart> parts; // ordered by smallest variable index
  /// row_of_var[v] = the row whose leading variable is v.
  std::vector<std::size_t> row_of_var;

  [[nodiscard]] std::string to_string() const; // "Fermat(3) + Chain(2,3)"
};

/// Throws NotInvertibleShape or SingularMatrix.
AtomicDecomposition classify(const IntMatrix& a);
AtomicDecomposition classify(const InvertiblePolynomial& p);

/// Reorders rows so that row i has x_i as its leading variable.
InvertiblePolynomial normalize_rows(const InvertiblePolynomial& p);

InvertiblePolynomial transpose(const InvertiblePolynomial& p);

Rational calabi_yau_index(const IntMatrix& a);
bool is_calabi_yau(const IntMatrix& a);
bool is_fano_calabi_yau(const IntMatrix& a);

/// Fermat-vertex criterion: q_i | d and x_i^{d/q_i} is G-invariant for all i.
bool is_gorenstein(const WeightSystem& w, const DiagonalGroup& g);

struct Diagram {
  IntVector labels;                                   // diagonal exponents
  std::vector<std::pair<std::size_t, std::size_t>> arrows; // sorted

  [[nodiscard]] Diagram reversed() const;
  [[nodiscard]] std::string to_dot() const;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram diagram(const IntMatrix& a);
Diagram diagram(const InvertiblePolynomial& p);

} // namespace bhk
