#include "cayley_census/arith.hpp"
#include "cayley_census/census.hpp"
#include "cayley_census/errors.hpp"
#include "cayley_census/oracle.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace cayley_census;
using namespace cayley_census::oracle;

TEST_CASE("orbit counts by both strategies") {
  const std::vector<std::pair<std::int64_t, std::uint64_t>> expected{
      {2, 6}, {3, 12}, {4, 36}, {5, 44}, {6, 272}, {7, 248}, {8, 1464}, {9, 2720}};
  for (const auto& [n, count] : expected) {
    CAPTURE(n);
    OrbitOptions options;
    CHECK(powerset_orbit_count(n, options) == Nat(count));
    options.strategy = OrbitStrategy::orbit_minima;
    options.threads = 3;
    CHECK(powerset_orbit_count(n, options) == Nat(count));
    options.level = simd::Level::scalar;
    options.threads = 1;
    CHECK(powerset_orbit_count(n, options) == Nat(count));
  }
}

TEST_CASE("mask width limit") {
  OrbitOptions options;
  options.max_mask_bits = 9;
  CHECK_THROWS_AS(powerset_orbit_count(6, options), TooLarge);
  CHECK(powerset_orbit_count(5, options) == Nat(44));
  options.max_mask_bits = 64;
  CHECK_THROWS_AS(powerset_orbit_count(17, options), TooLarge);
}

TEST_CASE("max mask bits from the environment") {
  ::unsetenv("CAYLEY_CENSUS_MAX_MASK_BITS");
  CHECK(max_mask_bits_from_env() == kDefaultMaxMaskBits);
  ::setenv("CAYLEY_CENSUS_MAX_MASK_BITS", "13", 1);
  CHECK(max_mask_bits_from_env() == 13);
  CHECK(census_table({9}, Method::oracle)[0].error.find("exceeds") != std::string::npos);
  ::setenv("CAYLEY_CENSUS_MAX_MASK_BITS", "lots", 1);
  CHECK_THROWS_AS(max_mask_bits_from_env(), DomainError);
  ::unsetenv("CAYLEY_CENSUS_MAX_MASK_BITS");
}

TEST_CASE("orbit-stabilizer") {
  for (std::int64_t n = 2; n <= 6; ++n) {
    const std::size_t group = static_cast<std::size_t>(n * arith::euler_phi(n));
    const MaskWord limit = MaskWord{1} << (2 * n - 1);
    for (MaskWord m = 0; m < limit; ++m) {
      const SubsetMask mask(n, m);
      CHECK(orbit_of(mask).size() * stabilizer_size(mask) == group);
    }
  }
}

TEST_CASE("SubsetMask") {
  const SubsetMask mask(5, 0b100000001);
  CHECK(mask.contains(Element::rotation(5, 1)));
  CHECK(mask.contains(Element::reflection(5, 4)));
  CHECK_FALSE(mask.contains(Element::rotation(5, 2)));
  CHECK_FALSE(mask.contains(Element::identity(5)));
  CHECK_THROWS_AS(SubsetMask(5, 1U << 9), DomainError);
  CHECK_THROWS_AS(SubsetMask(17, 0), DomainError);
}

TEST_CASE("fixed-point averaging matches cycle counting") {
  for (std::int64_t n = 2; n <= 25; ++n) {
    for (const Aut& a : enumerate_aut(n)) {
      const Permutation perm = to_permutation(a);
      CHECK(cycle_count_via_fixpoints(a) == perm_cycle_count(perm));
      CHECK(cycle_data_from_permutation(a).total == static_cast<std::int64_t>(perm_cycle_count(perm)));
    }
  }
}
