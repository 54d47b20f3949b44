#pragma once

// Exact integer and rational linear algebra. Every entry is an
// arbitrary-precision GMP value; there is no floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bhk/error.hpp"

namespace bhk {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix over an exact ring.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] std::span<T> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix to_rational(const IntMatrix& m);

/// Row vector times matrix.
IntVector row_times(std::span<const Integer> v, const IntMatrix& m);
RatVector row_times(std::span<const Rational> v, const RatMatrix& m);
/// Matrix times column vector.
RatVector times_column(const RatMatrix& m, std::span<const Rational> v);

/// Finite abelian group Z^k / L given by its invariant factors. A factor of
/// 0 stands for a free Z summand. Row i of generator_lifts is a lift of the
/// generator of the i-th cyclic factor.
struct AbelianQuotient {
  IntVector invariant_factors;
  IntMatrix generator_lifts;

  [[nodiscard]] bool trivial() const { return invariant_factors.empty(); }
  /// Product of invariant factors; 0 when the group is infinite.
  [[nodiscard]] Integer order() const;
  [[nodiscard]] std::string to_string() const;
};

struct HermiteForm {
  IntMatrix H; // row echelon, positive pivots, reduced above pivots
  IntMatrix U; // unimodular, U * M == H
  std::size_t rank = 0;
};

struct SmithForm {
  IntMatrix D; // diagonal, d_i | d_{i+1}, non-negative
  IntMatrix U; // unimodular
  IntMatrix V; // unimodular, U * M * V == D
  IntMatrix V_inverse;
  [[nodiscard]] IntVector diagonal() const;
};

HermiteForm hermite_normal_form(const IntMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Throws SingularMatrix when det(m) == 0.
RatMatrix rational_inverse(const IntMatrix& m);
RatMatrix rational_inverse(const RatMatrix& m);

/// Solves m * x == rhs; throws SingularMatrix when m is singular.
RatVector solve(const RatMatrix& m, std::span<const Rational> rhs);
std::size_t rank(const RatMatrix& m);

/// Z^cols modulo the lattice spanned by the rows of m.
AbelianQuotient cokernel(const IntMatrix& m);

/// Basis (as rows) of the integer kernel {x in Z^rows : x * m == 0}.
IntMatrix left_kernel_lattice(const IntMatrix& m);
/// Reduced row basis (HNF rows without zero rows) of the lattice spanned by
/// the rows of m.
IntMatrix lattice_basis(const IntMatrix& m);
/// Coordinates of v in the lattice with HNF basis h, or empty if v is not a
/// lattice vector.
std::optional<IntVector> lattice_coordinates(const IntMatrix& h,
                                             std::span<const Integer> v);

/// Positive integer weights q with gcd 1 and degree d such that A q = d 1.
struct WeightSystem {
  IntVector q;
  Integer d;

  [[nodiscard]] std::size_t size() const { return q.size(); }
  [[nodiscard]] Integer weight_sum() const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
};

WeightSystem positive_weight_solve(const IntMatrix& a);

/// Matrix text format: one row per line, whitespace separated integers.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);

Integer gcd_of(std::span<const Integer> values);
Integer lcm_of_denominators(std::span<const Rational> values);
/// Representative of x mod 1 in [0, 1).
Rational frac(const Rational& x);

} // namespace bhk
