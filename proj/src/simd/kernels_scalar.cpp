#include "cayley_census/simd/kernels.hpp"

namespace cayley_census::simd::scalar {

void mask_images(const PermTable& table, MaskWord mask, std::span<MaskWord> out) {
  const std::size_t count = table.count();
  for (std::size_t i = 0; i < count; ++i) out[i] = 0;
  for (MaskWord bits = mask; bits != 0; bits &= bits - 1) {
    const auto k = static_cast<unsigned>(__builtin_ctz(bits));
    const std::uint32_t* row = table.targets(k);
    for (std::size_t i = 0; i < count; ++i) out[i] |= MaskWord{1} << row[i];
  }
}

std::uint64_t count_orbit_minima(const PermTable& table, MaskWord begin, MaskWord end) {
  const std::size_t count = table.count();
  std::uint64_t minima = 0;
  for (MaskWord m = begin; m < end; ++m) {
    bool smallest = true;
    for (std::size_t i = 0; i < count && smallest; ++i) {
      MaskWord image = 0;
      for (MaskWord bits = m; bits != 0; bits &= bits - 1) {
        image |= MaskWord{1} << table.targets(static_cast<unsigned>(__builtin_ctz(bits)))[i];
      }
      smallest = image >= m;
    }
    minima += smallest ? 1 : 0;
  }
  return minima;
}

}  // namespace cayley_census::simd::scalar
