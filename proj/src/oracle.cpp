#include "cayley_census/oracle.hpp"

#include "cayley_census/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>
#include <thread>

namespace cayley_census::oracle {

SubsetMask::SubsetMask(std::int64_t n, MaskWord bits) : n_(n), bits_(bits) {
  require(n >= 2 && 2 * n - 1 <= static_cast<std::int64_t>(simd::kMaxWidth),
          "SubsetMask: 2n-1 must fit in " + std::to_string(simd::kMaxWidth) + " bits");
  require((bits >> width()) == 0, "SubsetMask: bits set above position 2n-2");
}

bool SubsetMask::contains(const Element& g) const {
  require(g.n() == n_, "SubsetMask::contains: group mismatch");
  return !g.is_identity() && ((bits_ >> g.index()) & 1U) != 0;
}

std::size_t perm_cycle_count(const Permutation& perm) { return perm.cycle_lengths().size(); }

CycleData cycle_data_from_permutation(const Aut& a) {
  const std::int64_t n = a.n();
  const Permutation perm = to_permutation(a);
  // Each block is invariant, so counting cycles started inside a block counts
  // that block's cycles.
  std::vector<int> block(perm.size());
  for (std::uint32_t k = 0; k < perm.size(); ++k) {
    const Element g = Element::at_index(n, k);
    block[k] = g.kind() == Element::Kind::reflection
                   ? 0
                   : static_cast<int>(n / std::gcd(g.exponent(), n));  // order of u^i
  }
  CycleData data;
  data.n = n;
  std::vector<bool> seen(perm.size(), false);
  for (std::uint32_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    for (std::uint32_t k = start; !seen[k]; k = perm(k)) {
      ensure(block[k] == block[start], "cycle_data_from_permutation: block not invariant");
      seen[k] = true;
    }
    if (block[start] == 0) {
      ++data.c_v;
    } else {
      ++data.u_parts[block[start]];
    }
  }
  data.total = static_cast<std::int64_t>(perm_cycle_count(perm));
  return data;
}

std::size_t cycle_count_via_fixpoints(const Aut& a) {
  const Permutation generator = to_permutation(a);
  Permutation current = generator;
  std::size_t fixed_sum = 0;
  std::size_t order = 1;
  for (;;) {
    fixed_sum += current.fixed_points();
    if (current.is_identity()) break;
    current = current.then(generator);
    ++order;
  }
  ensure(fixed_sum % order == 0, "cycle_count_via_fixpoints: non-exact average");
  return fixed_sum / order;
}

unsigned max_mask_bits_from_env() {
  const char* raw = std::getenv("CAYLEY_CENSUS_MAX_MASK_BITS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxMaskBits;
  const std::string_view text(raw);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc{} && ptr == text.data() + text.size() && value >= 1,
          "CAYLEY_CENSUS_MAX_MASK_BITS must be a positive integer, got '" + std::string(text) + "'");
  return value;
}

simd::PermTable automorphism_table(std::int64_t n) {
  require(n >= 2, "automorphism_table: n must be at least 2");
  std::vector<Permutation> perms;
  for (const Aut& a : enumerate_aut(n)) perms.push_back(to_permutation(a));
  std::vector<std::span<const std::uint32_t>> views;
  views.reserve(perms.size());
  for (const Permutation& p : perms) views.push_back(p.image());
  return simd::PermTable(static_cast<unsigned>(2 * n - 1), views);
}

namespace {

std::uint64_t count_by_visited_bitset(const simd::PermTable& table, simd::Level level) {
  const std::uint64_t total = std::uint64_t{1} << table.width();
  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  std::vector<MaskWord> images(table.count());
  std::uint64_t orbits = 0;
  for (std::uint64_t m = 0; m < total; ++m) {
    if ((visited[m >> 6] >> (m & 63)) & 1U) continue;
    ++orbits;
    simd::mask_images(level, table, static_cast<MaskWord>(m), images);
    for (const MaskWord image : images) visited[image >> 6] |= std::uint64_t{1} << (image & 63);
  }
  return orbits;
}

std::uint64_t count_by_minima(const simd::PermTable& table, simd::Level level, unsigned threads) {
  const std::uint64_t total = std::uint64_t{1} << table.width();
  threads = std::max(1U, threads);
  std::vector<std::uint64_t> partial(threads, 0);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = total * w / threads;
      const std::uint64_t end = total * (w + 1) / threads;
      workers.emplace_back([&, w, begin, end] {
        partial[w] = simd::count_orbit_minima(level, table, static_cast<MaskWord>(begin),
                                              static_cast<MaskWord>(end));
      });
    }
  }
  std::uint64_t orbits = 0;
  for (const std::uint64_t c : partial) orbits += c;
  return orbits;
}

}  // namespace

Nat powerset_orbit_count(std::int64_t n, const OrbitOptions& options) {
  require(n >= 2, "powerset_orbit_count: n must be at least 2");
  const unsigned limit = std::min(options.max_mask_bits, simd::kMaxWidth);
  if (2 * n - 1 > static_cast<std::int64_t>(limit)) {
    throw TooLarge("powerset_orbit_count: 2n-1 = " + std::to_string(2 * n - 1) +
                   " exceeds the mask width limit of " + std::to_string(limit) + " bits");
  }
  const simd::PermTable table = automorphism_table(n);
  const std::uint64_t orbits = options.strategy == OrbitStrategy::visited_bitset
                                   ? count_by_visited_bitset(table, options.level)
                                   : count_by_minima(table, options.level, options.threads);
  return Nat(orbits);
}

std::vector<MaskWord> orbit_of(const SubsetMask& mask) {
  const simd::PermTable table = automorphism_table(mask.n());
  std::vector<MaskWord> images(table.count());
  simd::mask_images(simd::Level::scalar, table, mask.bits(), images);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

std::size_t stabilizer_size(const SubsetMask& mask) {
  const simd::PermTable table = automorphism_table(mask.n());
  std::vector<MaskWord> images(table.count());
  simd::mask_images(simd::Level::scalar, table, mask.bits(), images);
  return static_cast<std::size_t>(std::count(images.begin(), images.end(), mask.bits()));
}

}  // namespace cayley_census::oracle
