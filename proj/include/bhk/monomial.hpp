#pragma once

// Dense exponent vectors for at most 16 variables. The hot operations go
// through a kernel table: a scalar reference implementation and an AVX2
// variant chosen at startup when the CPU supports it.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace bhk {

inline constexpr std::size_t kMaxVars = 16;

struct Monomial {
  alignas(32) std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  /// Throws ResourceLimit for more than kMaxVars entries or degree overflow.
  static Monomial from_exponents(std::span<const unsigned> exps);
  static Monomial variable(std::size_t i, unsigned power = 1);

  [[nodiscard]] unsigned operator[](std::size_t i) const { return e[i]; }
  void set(std::size_t i, unsigned value);
  [[nodiscard]] bool is_one() const { return deg == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e;
  }
};

namespace kernels {

using BinaryOp = void (*)(const std::uint16_t*, const std::uint16_t*,
                          std::uint16_t*);
using Predicate = bool (*)(const std::uint16_t*, const std::uint16_t*);
using Compare = int (*)(const std::uint16_t*, const std::uint16_t*);

struct Table {
  std::string_view name;
  BinaryOp add;       // out = a + b
  BinaryOp sub;       // out = a - b (caller guarantees b <= a)
  BinaryOp max;       // out = lcm(a, b)
  Predicate divides;  // a <= b lanewise
  Predicate coprime;  // min(a, b) == 0 lanewise
  Compare revlex;     // tie break of grevlex: sign of (a > b)
};

const Table& scalar();
/// Falls back to the scalar table when not compiled for x86-64.
const Table& avx2();
bool avx2_supported();

enum class Backend { Scalar, Avx2 };
/// Selects the table used by the Monomial helpers below. Selecting AVX2 on
/// a CPU without it throws InvalidArgument.
void select(Backend backend);
Backend selected();
const Table& active();

} // namespace kernels

Monomial operator*(const Monomial& a, const Monomial& b);
/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
/// Graded reverse lexicographic order with x_0 > x_1 > ...: -1, 0 or 1.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

} // namespace bhk
