// AArch64 only; NEON is part of the base ISA there so no runtime check.

#include "cayley_census/simd/kernels.hpp"

#include <arm_neon.h>

#include <algorithm>
#include <array>

namespace cayley_census::simd::neon {

namespace {
constexpr std::size_t kNeonLanes = 4;
}

void mask_images(const PermTable& table, MaskWord mask, std::span<MaskWord> out) {
  const std::size_t count = table.count();
  const uint32x4_t one = vdupq_n_u32(1);
  for (std::size_t i = 0; i < count; i += kNeonLanes) {
    uint32x4_t acc = vdupq_n_u32(0);
    for (MaskWord bits = mask; bits != 0; bits &= bits - 1) {
      const auto k = static_cast<unsigned>(__builtin_ctz(bits));
      const int32x4_t to = vreinterpretq_s32_u32(vld1q_u32(table.targets(k) + i));
      acc = vorrq_u32(acc, vshlq_u32(one, to));
    }
    std::array<MaskWord, kNeonLanes> lanes{};
    vst1q_u32(lanes.data(), acc);
    std::copy_n(lanes.begin(), std::min(kNeonLanes, count - i),
                out.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

std::uint64_t count_orbit_minima(const PermTable& table, MaskWord begin, MaskWord end) {
  const unsigned width = table.width();
  const std::size_t count = table.count();
  const uint32x4_t one = vdupq_n_u32(1);
  const std::array<std::uint32_t, kNeonLanes> offsets{0, 1, 2, 3};
  const uint32x4_t lane_offsets = vld1q_u32(offsets.data());
  std::array<uint32x4_t, kMaxWidth> bit{};

  std::uint64_t minima = 0;
  for (std::uint64_t base = begin; base < end; base += kNeonLanes) {
    const std::uint64_t valid_lanes = std::min<std::uint64_t>(kNeonLanes, end - base);
    const uint32x4_t masks = vaddq_u32(vdupq_n_u32(static_cast<std::uint32_t>(base)), lane_offsets);
    for (unsigned k = 0; k < width; ++k) {
      bit[k] = vandq_u32(vshlq_u32(masks, vdupq_n_s32(-static_cast<int>(k))), one);
    }
    uint32x4_t dead = vdupq_n_u32(0);
    for (std::size_t i = 0; i < count; ++i) {
      uint32x4_t image = vdupq_n_u32(0);
      for (unsigned k = 0; k < width; ++k) {
        const int32x4_t to = vdupq_n_s32(static_cast<int>(table.targets(k)[i]));
        image = vorrq_u32(image, vshlq_u32(bit[k], to));
      }
      dead = vorrq_u32(dead, vcltq_u32(image, masks));
      if (vminvq_u32(dead) != 0) break;
    }
    std::array<std::uint32_t, kNeonLanes> flags{};
    vst1q_u32(flags.data(), dead);
    for (std::size_t lane = 0; lane < valid_lanes; ++lane) minima += flags[lane] == 0 ? 1 : 0;
  }
  return minima;
}

}  // namespace cayley_census::simd::neon
