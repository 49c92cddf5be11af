#include "edgelab/kernels.hpp"

namespace edgelab::kernels::scalar {

std::size_t count_in_range(std::span<const std::int32_t> values,
                           std::int32_t lo, std::int32_t hi) {
  std::size_t count = 0;
  for (const std::int32_t v : values) {
    count += static_cast<std::size_t>(v > lo && v <= hi);
  }
  return count;
}

void mask_at_most(std::span<const std::int32_t> values, std::int32_t threshold,
                  std::span<std::uint8_t> out) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    out[k] = static_cast<std::uint8_t>(values[k] <= threshold);
  }
}

}  // namespace edgelab::kernels::scalar
