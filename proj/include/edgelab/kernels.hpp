#pragma once

// Ground-truth inner loops shared by the oracles.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, a vector variant (AVX2 on x86-64, NEON on AArch64). The public
// entry points dispatch once at first use based on the running CPU. The
// variant-specific namespaces are exposed so tests can check each variant
// against the reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace edgelab::kernels {

/// Number of v in `values` with lo < v <= hi.
std::size_t count_in_range(std::span<const std::int32_t> values,
                           std::int32_t lo, std::int32_t hi);

/// out[k] = 1 if values[k] <= threshold else 0. `out` must be at least as
/// long as `values`.
void mask_at_most(std::span<const std::int32_t> values, std::int32_t threshold,
                  std::span<std::uint8_t> out);

/// Name of the variant selected on this machine ("scalar", "avx2", "neon").
std::string_view active_variant();

namespace scalar {
std::size_t count_in_range(std::span<const std::int32_t> values,
                           std::int32_t lo, std::int32_t hi);
void mask_at_most(std::span<const std::int32_t> values, std::int32_t threshold,
                  std::span<std::uint8_t> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define EDGELAB_HAVE_AVX2_VARIANT 1
namespace avx2 {
bool supported();
std::size_t count_in_range(std::span<const std::int32_t> values,
                           std::int32_t lo, std::int32_t hi);
void mask_at_most(std::span<const std::int32_t> values, std::int32_t threshold,
                  std::span<std::uint8_t> out);
}  // namespace avx2
#endif

#if defined(__aarch64__) && defined(__ARM_NEON)
#define EDGELAB_HAVE_NEON_VARIANT 1
namespace neon {
std::size_t count_in_range(std::span<const std::int32_t> values,
                           std::int32_t lo, std::int32_t hi);
void mask_at_most(std::span<const std::int32_t> values, std::int32_t threshold,
                  std::span<std::uint8_t> out);
}  // namespace neon
#endif

}  // namespace edgelab::kernels
