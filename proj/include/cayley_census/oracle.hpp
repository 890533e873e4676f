#pragma once

// Brute-force ground truth. Nothing here uses the closed forms from
// cycles/census: cycle numbers come from explicit permutations and orbit
// counts from enumerating every subset of D_2n^#.

#include "cayley_census/cycles.hpp"
#include "cayley_census/dihedral.hpp"
#include "cayley_census/nat.hpp"
#include "cayley_census/simd/kernels.hpp"

#include <cstdint>
#include <vector>

namespace cayley_census::oracle {

using simd::MaskWord;

inline constexpr unsigned kDefaultMaxMaskBits = 25;

/// A connection set S as a bitmask over the indexed D_2n^#; only the low
/// 2n-1 bits may be set.
class SubsetMask {
 public:
  SubsetMask(std::int64_t n, MaskWord bits);
  std::int64_t n() const { return n_; }
  MaskWord bits() const { return bits_; }
  unsigned width() const { return static_cast<unsigned>(2 * n_ - 1); }
  bool contains(const Element& g) const;

 private:
  std::int64_t n_;
  MaskWord bits_;
};

std::size_t perm_cycle_count(const Permutation& perm);

/// Per-block cycle counts (each U_n(d) and V_n) read off the explicit
/// permutation of `a`.
CycleData cycle_data_from_permutation(const Aut& a);

/// Average fixed-point count over the cyclic group generated by a, whose
/// powers are built by composing permutations until the identity recurs.
std::size_t cycle_count_via_fixpoints(const Aut& a);

enum class OrbitStrategy {
  visited_bitset,  // mark every orbit on first visit, ascending masks
  orbit_minima,    // count masks that are the minimum of their orbit
};

struct OrbitOptions {
  unsigned max_mask_bits = kDefaultMaxMaskBits;
  OrbitStrategy strategy = OrbitStrategy::visited_bitset;
  simd::Level level = simd::detect();
  unsigned threads = 1;  // orbit_minima only
};

/// Reads CAYLEY_CENSUS_MAX_MASK_BITS, falling back to kDefaultMaxMaskBits.
unsigned max_mask_bits_from_env();

/// Permutations of every automorphism of D_2n, in enumerate_aut order.
simd::PermTable automorphism_table(std::int64_t n);

/// Number of Aut(D_2n)-orbits on subsets of D_2n^#, by enumeration.
/// Throws TooLarge when 2n-1 exceeds options.max_mask_bits (capped at 31).
Nat powerset_orbit_count(std::int64_t n, const OrbitOptions& options = {});

/// Distinct images of `mask` under Aut(D_2n), ascending.
std::vector<MaskWord> orbit_of(const SubsetMask& mask);
/// Number of automorphisms fixing `mask` setwise.
std::size_t stabilizer_size(const SubsetMask& mask);

}  // namespace cayley_census::oracle
