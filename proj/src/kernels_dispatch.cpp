#include "edgelab/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace edgelab::kernels {
namespace {

struct Table {
  std::string_view name;
  std::size_t (*count_in_range)(std::span<const std::int32_t>, std::int32_t,
                                std::int32_t);
  void (*mask_at_most)(std::span<const std::int32_t>, std::int32_t,
                       std::span<std::uint8_t>);
};

// EDGELAB_KERNELS=scalar forces the reference path.
Table select() {
  const char* forced = std::getenv("EDGELAB_KERNELS");
  const bool force_scalar = forced && std::string_view(forced) == "scalar";
  if (!force_scalar) {
#if defined(EDGELAB_HAVE_AVX2_VARIANT)
    if (avx2::supported()) {
      return {"avx2", &avx2::count_in_range, &avx2::mask_at_most};
    }
#elif defined(EDGELAB_HAVE_NEON_VARIANT)
    return {"neon", &neon::count_in_range, &neon::mask_at_most};
#endif
  }
  return {"scalar", &scalar::count_in_range, &scalar::mask_at_most};
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

std::size_t count_in_range(std::span<const std::int32_t> values,
                           std::int32_t lo, std::int32_t hi) {
  return table().count_in_range(values, lo, hi);
}

void mask_at_most(std::span<const std::int32_t> values, std::int32_t threshold,
                  std::span<std::uint8_t> out) {
  table().mask_at_most(values, threshold, out);
}

std::string_view active_variant() { return table().name; }

}  // namespace edgelab::kernels
