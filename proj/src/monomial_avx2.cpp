#include "bhk/monomial.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define BHK_HAVE_X86 1
#endif

namespace bhk::kernels {

#ifdef BHK_HAVE_X86

namespace {

#define BHK_AVX2 __attribute__((target("avx2")))

BHK_AVX2 inline __m256i load(const std::uint16_t* p) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(p));
}

BHK_AVX2 void add_avx2(const std::uint16_t* a, const std::uint16_t* b,
                       std::uint16_t* out) {
  _mm256_store_si256(reinterpret_cast<__m256i*>(out),
                     _mm256_add_epi16(load(a), load(b)));
}

BHK_AVX2 void sub_avx2(const std::uint16_t* a, const std::uint16_t* b,
                       std::uint16_t* out) {
  _mm256_store_si256(reinterpret_cast<__m256i*>(out),
                     _mm256_sub_epi16(load(a), load(b)));
}

BHK_AVX2 void max_avx2(const std::uint16_t* a, const std::uint16_t* b,
                       std::uint16_t* out) {
  _mm256_store_si256(reinterpret_cast<__m256i*>(out),
                     _mm256_max_epu16(load(a), load(b)));
}

BHK_AVX2 bool divides_avx2(const std::uint16_t* a, const std::uint16_t* b) {
  __m256i vb = load(b);
  __m256i eq = _mm256_cmpeq_epi16(_mm256_max_epu16(load(a), vb), vb);
  return _mm256_movemask_epi8(eq) == -1;
}

BHK_AVX2 bool coprime_avx2(const std::uint16_t* a, const std::uint16_t* b) {
  __m256i m = _mm256_min_epu16(load(a), load(b));
  return _mm256_testz_si256(m, m) != 0;
}

BHK_AVX2 int revlex_avx2(const std::uint16_t* a, const std::uint16_t* b) {
  __m256i eq = _mm256_cmpeq_epi16(load(a), load(b));
  auto diff = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
  if (diff == 0)
    return 0;
  std::size_t lane = (31 - __builtin_clz(diff)) / 2;
  return a[lane] < b[lane] ? 1 : -1;
}

const Table kAvx2{"avx2",       add_avx2,     sub_avx2,   max_avx2,
                  divides_avx2, coprime_avx2, revlex_avx2};

} // namespace

const Table& avx2() { return avx2_supported() ? kAvx2 : scalar(); }

bool avx2_supported() {
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return ok;
}

#else

const Table& avx2() { return scalar(); }
bool avx2_supported() { return false; }

#endif

} // namespace bhk::kernels
