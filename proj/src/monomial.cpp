#include "bhk/monomial.hpp"

#include <atomic>

#include "bhk/error.hpp"

namespace bhk {

namespace kernels {

namespace {

void add_scalar(const std::uint16_t* a, const std::uint16_t* b,
                std::uint16_t* out) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
}

void sub_scalar(const std::uint16_t* a, const std::uint16_t* b,
                std::uint16_t* out) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    out[i] = static_cast<std::uint16_t>(a[i] - b[i]);
}

void max_scalar(const std::uint16_t* a, const std::uint16_t* b,
                std::uint16_t* out) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool divides_scalar(const std::uint16_t* a, const std::uint16_t* b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

bool coprime_scalar(const std::uint16_t* a, const std::uint16_t* b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] != 0 && b[i] != 0)
      return false;
  return true;
}

int revlex_scalar(const std::uint16_t* a, const std::uint16_t* b) {
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (a[i] != b[i])
      return a[i] < b[i] ? 1 : -1;
  return 0;
}

const Table kScalar{"scalar",       add_scalar,     sub_scalar,   max_scalar,
                    divides_scalar, coprime_scalar, revlex_scalar};

const Table* initial() {
  return avx2_supported() ? &avx2() : &kScalar;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{initial()};
  return table;
}

} // namespace

const Table& scalar() { return kScalar; }

void select(Backend backend) {
  if (backend == Backend::Avx2) {
    if (!avx2_supported())
      throw Error(ErrorCode::InvalidArgument, "CPU lacks AVX2");
    current().store(&avx2());
  } else {
    current().store(&kScalar);
  }
}

Backend selected() {
  return current().load() == &kScalar ? Backend::Scalar : Backend::Avx2;
}

const Table& active() { return *current().load(std::memory_order_relaxed); }

} // namespace kernels

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars)
    throw Error(ErrorCode::ResourceLimit,
                "at most " + std::to_string(kMaxVars) + " variables supported");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i)
    m.set(i, exps[i]);
  return m;
}

Monomial Monomial::variable(std::size_t i, unsigned power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned value) {
  if (i >= kMaxVars)
    throw Error(ErrorCode::ResourceLimit, "variable index out of range");
  std::uint32_t next = deg - e[i] + value;
  if (value > 0xffff || next > 0xffff)
    throw Error(ErrorCode::ResourceLimit, "monomial degree overflow");
  e[i] = static_cast<std::uint16_t>(value);
  deg = next;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.deg + b.deg > 0xffff)
    throw Error(ErrorCode::ResourceLimit, "monomial degree overflow");
  Monomial out;
  kernels::active().add(a.e.data(), b.e.data(), out.e.data());
  out.deg = a.deg + b.deg;
  return out;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial out;
  kernels::active().sub(b.e.data(), a.e.data(), out.e.data());
  out.deg = b.deg - a.deg;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  kernels::active().max(a.e.data(), b.e.data(), out.e.data());
  std::uint32_t d = 0;
  for (auto x : out.e)
    d += x;
  out.deg = d;
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  return a.deg <= b.deg && kernels::active().divides(a.e.data(), b.e.data());
}

bool coprime(const Monomial& a, const Monomial& b) {
  return kernels::active().coprime(a.e.data(), b.e.data());
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg)
    return a.deg > b.deg ? 1 : -1;
  return kernels::active().revlex(a.e.data(), b.e.data());
}

} // namespace bhk
