// Compiled with -mavx2; only reached after a runtime CPU check.

#include "cayley_census/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <array>

namespace cayley_census::simd::avx2 {

void mask_images(const PermTable& table, MaskWord mask, std::span<MaskWord> out) {
  const std::size_t count = table.count();
  const __m256i one = _mm256_set1_epi32(1);
  for (std::size_t i = 0; i < count; i += PermTable::kLanes) {
    __m256i acc = _mm256_setzero_si256();
    for (MaskWord bits = mask; bits != 0; bits &= bits - 1) {
      const auto k = static_cast<unsigned>(__builtin_ctz(bits));
      const __m256i to =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table.targets(k) + i));
      acc = _mm256_or_si256(acc, _mm256_sllv_epi32(one, to));
    }
    if (i + PermTable::kLanes <= count) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), acc);
    } else {
      alignas(32) std::array<MaskWord, PermTable::kLanes> tail{};
      _mm256_store_si256(reinterpret_cast<__m256i*>(tail.data()), acc);
      std::copy_n(tail.begin(), count - i, out.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
}

std::uint64_t count_orbit_minima(const PermTable& table, MaskWord begin, MaskWord end) {
  const unsigned width = table.width();
  const std::size_t count = table.count();
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i lane_offsets = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  __m256i bit[kMaxWidth];

  std::uint64_t minima = 0;
  for (std::uint64_t base = begin; base < end; base += PermTable::kLanes) {
    const std::uint64_t valid_lanes = std::min<std::uint64_t>(PermTable::kLanes, end - base);
    const int valid_mask = (1 << valid_lanes) - 1;
    const __m256i masks =
        _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(base)), lane_offsets);
    for (unsigned k = 0; k < width; ++k) {
      bit[k] = _mm256_and_si256(_mm256_srlv_epi32(masks, _mm256_set1_epi32(static_cast<int>(k))),
                               one);
    }
    // Lane is dead once some image is smaller than its mask. Masks are below
    // 2^31, so the signed compare is exact.
    int dead = ~valid_mask & 0xff;
    for (std::size_t i = 0; i < count && dead != 0xff; ++i) {
      __m256i image = _mm256_setzero_si256();
      for (unsigned k = 0; k < width; ++k) {
        const __m256i to = _mm256_set1_epi32(static_cast<int>(table.targets(k)[i]));
        image = _mm256_or_si256(image, _mm256_sllv_epi32(bit[k], to));
      }
      dead |= _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(masks, image)));
    }
    minima += static_cast<std::uint64_t>(__builtin_popcount(~dead & 0xff));
  }
  return minima;
}

}  // namespace cayley_census::simd::avx2
