#include "edgelab/kernels.hpp"

#if defined(EDGELAB_HAVE_NEON_VARIANT)

#include <arm_neon.h>

namespace edgelab::kernels::neon {

std::size_t count_in_range(std::span<const std::int32_t> values,
                           std::int32_t lo, std::int32_t hi) {
  const int32x4_t vlo = vdupq_n_s32(lo);
  const int32x4_t vhi = vdupq_n_s32(hi);
  const std::int32_t* p = values.data();
  const std::size_t size = values.size();
  std::size_t k = 0;
  std::size_t count = 0;
  for (; k + 4 <= size; k += 4) {
    const int32x4_t v = vld1q_s32(p + k);
    const uint32x4_t inside = vandq_u32(vcgtq_s32(v, vlo), vcleq_s32(v, vhi));
    count += vaddvq_u32(vshrq_n_u32(inside, 31));
  }
  for (; k < size; ++k) {
    count += static_cast<std::size_t>(p[k] > lo && p[k] <= hi);
  }
  return count;
}

void mask_at_most(std::span<const std::int32_t> values, std::int32_t threshold,
                  std::span<std::uint8_t> out) {
  const int32x4_t vt = vdupq_n_s32(threshold);
  const std::int32_t* p = values.data();
  const std::size_t size = values.size();
  std::size_t k = 0;
  for (; k + 8 <= size; k += 8) {
    const uint16x4_t a = vmovn_u32(vcleq_s32(vld1q_s32(p + k), vt));
    const uint16x4_t b = vmovn_u32(vcleq_s32(vld1q_s32(p + k + 4), vt));
    const uint8x8_t bytes = vmovn_u16(vcombine_u16(a, b));
    vst1_u8(out.data() + k, vand_u8(bytes, vdup_n_u8(1)));
  }
  for (; k < size; ++k) {
    out[k] = static_cast<std::uint8_t>(p[k] <= threshold);
  }
}

}  // namespace edgelab::kernels::neon

#endif
