#include "edgelab/kernels.hpp"

#if defined(EDGELAB_HAVE_AVX2_VARIANT)

#include <immintrin.h>

#define EDGELAB_AVX2 __attribute__((target("avx2,popcnt")))

namespace edgelab::kernels::avx2 {
namespace {

EDGELAB_AVX2 inline __m256i greater_than(const std::int32_t* p, __m256i vt) {
  return _mm256_cmpgt_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)), vt);
}

}  // namespace

bool supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
}

EDGELAB_AVX2 std::size_t count_in_range(std::span<const std::int32_t> values,
                                        std::int32_t lo, std::int32_t hi) {
  const __m256i vlo = _mm256_set1_epi32(lo);
  const __m256i vhi = _mm256_set1_epi32(hi);
  const std::int32_t* p = values.data();
  const std::size_t size = values.size();
  std::size_t k = 0;
  std::size_t count = 0;
  for (; k + 8 <= size; k += 8) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + k));
    const __m256i above_lo = _mm256_cmpgt_epi32(v, vlo);
    const __m256i above_hi = _mm256_cmpgt_epi32(v, vhi);
    const __m256i inside = _mm256_andnot_si256(above_hi, above_lo);
    const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(inside));
    count += static_cast<std::size_t>(_mm_popcnt_u32(static_cast<unsigned>(bits)));
  }
  for (; k < size; ++k) {
    count += static_cast<std::size_t>(p[k] > lo && p[k] <= hi);
  }
  return count;
}

EDGELAB_AVX2 void mask_at_most(std::span<const std::int32_t> values,
                               std::int32_t threshold,
                               std::span<std::uint8_t> out) {
  const __m256i vt = _mm256_set1_epi32(threshold);
  const __m256i ones = _mm256_set1_epi8(1);
  // packs interleaves 128-bit lanes; this restores element order.
  const __m256i unshuffle = _mm256_setr_epi32(0, 4, 1, 5, 2, 6, 3, 7);
  const std::int32_t* p = values.data();
  const std::size_t size = values.size();
  std::size_t k = 0;
  for (; k + 32 <= size; k += 32) {
    const __m256i ab = _mm256_packs_epi32(greater_than(p + k, vt),
                                          greater_than(p + k + 8, vt));
    const __m256i cd = _mm256_packs_epi32(greater_than(p + k + 16, vt),
                                          greater_than(p + k + 24, vt));
    __m256i bytes = _mm256_packs_epi16(ab, cd);
    bytes = _mm256_permutevar8x32_epi32(bytes, unshuffle);
    bytes = _mm256_andnot_si256(bytes, ones);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), bytes);
  }
  for (; k < size; ++k) {
    out[k] = static_cast<std::uint8_t>(p[k] <= threshold);
  }
}

}  // namespace edgelab::kernels::avx2

#endif
