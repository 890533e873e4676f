#include "cayley_census/errors.hpp"
#include "cayley_census/simd/kernels.hpp"

#include <cstdlib>
#include <string>

namespace cayley_census::simd {

std::string_view name(Level level) {
  switch (level) {
    case Level::scalar: return "scalar";
    case Level::avx2: return "avx2";
    case Level::neon: return "neon";
  }
  return "?";
}

bool available(Level level) {
  switch (level) {
    case Level::scalar: return true;
    case Level::avx2:
#if defined(CAYLEY_CENSUS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Level::neon:
#if defined(CAYLEY_CENSUS_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Level detect() {
  if (const char* forced = std::getenv("CAYLEY_CENSUS_SIMD")) {
    const std::string want(forced);
    for (const Level level : {Level::scalar, Level::avx2, Level::neon}) {
      if (want == name(level) && available(level)) return level;
    }
  }
  if (available(Level::avx2)) return Level::avx2;
  if (available(Level::neon)) return Level::neon;
  return Level::scalar;
}

PermTable::PermTable(unsigned width, std::span<const std::span<const std::uint32_t>> perms)
    : width_(width),
      count_(perms.size()),
      stride_((perms.size() + kLanes - 1) / kLanes * kLanes),
      targets_(static_cast<std::size_t>(width) * stride_) {
  require(width >= 1 && width <= kMaxWidth,
          "PermTable: width must be in [1, " + std::to_string(kMaxWidth) + "]");
  for (unsigned k = 0; k < width; ++k) {
    std::uint32_t* row = targets_.data() + k * stride_;
    for (std::size_t i = 0; i < stride_; ++i) {
      if (i < count_) {
        require(perms[i].size() == width, "PermTable: permutation size != width");
        require(perms[i][k] < width, "PermTable: image out of range");
        row[i] = perms[i][k];
      } else {
        row[i] = k;
      }
    }
  }
}

void mask_images(Level level, const PermTable& table, MaskWord mask, std::span<MaskWord> out) {
  require(out.size() >= table.count(), "mask_images: output span too small");
  switch (level) {
#if defined(CAYLEY_CENSUS_HAVE_AVX2)
    case Level::avx2:
      if (available(level)) return avx2::mask_images(table, mask, out);
      break;
#endif
#if defined(CAYLEY_CENSUS_HAVE_NEON)
    case Level::neon: return neon::mask_images(table, mask, out);
#endif
    default: break;
  }
  scalar::mask_images(table, mask, out);
}

std::uint64_t count_orbit_minima(Level level, const PermTable& table, MaskWord begin, MaskWord end) {
  if (begin >= end) return 0;
  switch (level) {
#if defined(CAYLEY_CENSUS_HAVE_AVX2)
    case Level::avx2:
      if (available(level)) return avx2::count_orbit_minima(table, begin, end);
      break;
#endif
#if defined(CAYLEY_CENSUS_HAVE_NEON)
    case Level::neon: return neon::count_orbit_minima(table, begin, end);
#endif
    default: break;
  }
  return scalar::count_orbit_minima(table, begin, end);
}

}  // namespace cayley_census::simd
