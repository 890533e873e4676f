#pragma once

// Inner loops of the power-set orbit oracle. A subset of a set of at most 31
// points is a 32-bit mask; a permutation group acts on masks by moving bits.
//
// Every kernel has a scalar reference implementation and vector variants
// (AVX2 on x86-64, NEON on AArch64). `detect()` picks the best variant the
// running CPU supports; all variants return identical results.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cayley_census::simd {

using MaskWord = std::uint32_t;

inline constexpr unsigned kMaxWidth = 31;

enum class Level { scalar, avx2, neon };

std::string_view name(Level level);
/// Whether the variant was compiled in and the CPU supports it.
bool available(Level level);
/// Best available level. Honors CAYLEY_CENSUS_SIMD=scalar|avx2|neon if set.
Level detect();

/// A set of permutations of {0, ..., width-1}, stored transposed: for point
/// k, the images of k under permutations 0, 1, 2, ... are contiguous. The
/// permutation count is padded to a multiple of kLanes with identity
/// permutations.
class PermTable {
 public:
  static constexpr std::size_t kLanes = 8;

  PermTable(unsigned width, std::span<const std::span<const std::uint32_t>> perms);

  unsigned width() const { return width_; }
  std::size_t count() const { return count_; }
  std::size_t stride() const { return stride_; }
  /// Images of point k, one per (padded) permutation.
  const std::uint32_t* targets(unsigned k) const { return targets_.data() + k * stride_; }

 private:
  unsigned width_;
  std::size_t count_;
  std::size_t stride_;
  std::vector<std::uint32_t> targets_;
};

/// out[i] = image of `mask` under permutation i, for i < table.count().
void mask_images(Level level, const PermTable& table, MaskWord mask, std::span<MaskWord> out);

/// Number of masks m in [begin, end) that are the numerically smallest
/// member of their orbit, i.e. image_i(m) >= m for every permutation i.
/// When the permutations form a group this is the number of orbits meeting
/// the range's minima.
std::uint64_t count_orbit_minima(Level level, const PermTable& table, MaskWord begin, MaskWord end);

// Per-ISA entry points, exposed for equivalence tests.
namespace scalar {
void mask_images(const PermTable& table, MaskWord mask, std::span<MaskWord> out);
std::uint64_t count_orbit_minima(const PermTable& table, MaskWord begin, MaskWord end);
}  // namespace scalar

#if defined(CAYLEY_CENSUS_HAVE_AVX2)
namespace avx2 {
void mask_images(const PermTable& table, MaskWord mask, std::span<MaskWord> out);
std::uint64_t count_orbit_minima(const PermTable& table, MaskWord begin, MaskWord end);
}  // namespace avx2
#endif

#if defined(CAYLEY_CENSUS_HAVE_NEON)
namespace neon {
void mask_images(const PermTable& table, MaskWord mask, std::span<MaskWord> out);
std::uint64_t count_orbit_minima(const PermTable& table, MaskWord begin, MaskWord end);
}  // namespace neon
#endif

}  // namespace cayley_census::simd
