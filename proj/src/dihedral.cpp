#include "cayley_census/dihedral.hpp"

#include "cayley_census/arith.hpp"
#include "cayley_census/errors.hpp"

#include <string>

namespace cayley_census {

using arith::mod;

namespace {

std::string triple(std::int64_t n, std::int64_t r, std::int64_t t) {
  return "(" + std::to_string(n) + ", " + std::to_string(r) + ", " + std::to_string(t) + ")";
}

void require_same_group(std::int64_t a, std::int64_t b) {
  require(a == b, [&] {
    return "dihedral group mismatch: n = " + std::to_string(a) + " vs " + std::to_string(b);
  });
}

}  // namespace

// Element ------------------------------------------------------------------

Element Element::rotation(std::int64_t n, std::int64_t i) {
  require(n >= 1, "Element: n must be positive");
  return Element(Kind::rotation, n, mod(i, n));
}

Element Element::reflection(std::int64_t n, std::int64_t j) {
  require(n >= 1, "Element: n must be positive");
  return Element(Kind::reflection, n, mod(j, n));
}

std::uint32_t Element::index() const {
  require(!is_identity(), "Element::index: the identity is not in D_2n^#");
  return kind_ == Kind::rotation ? static_cast<std::uint32_t>(exponent_ - 1)
                                 : static_cast<std::uint32_t>(n_ - 1 + exponent_);
}

Element Element::at_index(std::int64_t n, std::uint32_t index) {
  require(n >= 1 && static_cast<std::int64_t>(index) < 2 * n - 1, "Element::at_index: index out of range");
  const auto k = static_cast<std::int64_t>(index);
  return k < n - 1 ? rotation(n, k + 1) : reflection(n, k - (n - 1));
}

// Permutation --------------------------------------------------------------

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (const std::uint32_t p : image_) {
    require(p < image_.size() && !hit[p], "Permutation: image is not a bijection");
    hit[p] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::uint32_t> image(size);
  for (std::size_t k = 0; k < size; ++k) image[k] = static_cast<std::uint32_t>(k);
  return Permutation(std::move(image));
}

Permutation Permutation::then(const Permutation& next) const {
  require(size() == next.size(), "Permutation::then: size mismatch");
  std::vector<std::uint32_t> image(size());
  for (std::size_t k = 0; k < size(); ++k) image[k] = next.image_[image_[k]];
  Permutation out;
  out.image_ = std::move(image);
  return out;
}

bool Permutation::is_identity() const { return fixed_points() == size(); }

std::size_t Permutation::fixed_points() const {
  std::size_t count = 0;
  for (std::size_t k = 0; k < size(); ++k) count += image_[k] == k ? 1 : 0;
  return count;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t k = start; !seen[k]; k = image_[k]) {
      seen[k] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

// Aut ----------------------------------------------------------------------

Aut Aut::identity(std::int64_t n) { return make_aut(n, 1, 0); }

Aut make_aut(std::int64_t n, std::int64_t r, std::int64_t t) {
  require(n >= 1, "make_aut: n must be positive");
  const std::int64_t rr = mod(r, n);
  if (arith::gcd(rr, n) != 1) {
    throw InvalidAutomorphism("a_{n,r,t} with " + triple(n, r, t) + " requires gcd(r, n) = 1");
  }
  return Aut(n, rr, mod(t, n));
}

Element apply(const Aut& a, const Element& g) {
  require_same_group(a.n(), g.n());
  const std::int64_t n = a.n();
  if (g.kind() == Element::Kind::rotation) {
    return Element::rotation(n, arith::mul_mod(a.r(), g.exponent(), n));
  }
  return Element::reflection(n, arith::mul_mod(a.r(), g.exponent(), n) + a.t());
}

Aut compose(const Aut& a, const Aut& b) {
  require_same_group(a.n(), b.n());
  const std::int64_t n = a.n();
  return make_aut(n, arith::mul_mod(a.r(), b.r(), n), arith::mul_mod(b.r(), a.t(), n) + b.t());
}

Aut power(const Aut& a, std::uint64_t s) {
  const std::int64_t n = a.n();
  const std::int64_t rs = arith::pow_mod(a.r(), s, n);
  const std::int64_t ts = arith::mul_mod(a.t(), arith::geom_sum_mod(a.r(), s, n).value, n);
  return make_aut(n, rs, ts);
}

std::int64_t kappa(std::int64_t n, std::int64_t r, std::int64_t t) {
  require(n >= 1, "kappa: n must be positive");
  if (arith::gcd(mod(r, n), n) != 1) {
    throw InvalidAutomorphism("kappa" + triple(n, r, t) + " requires gcd(r, n) = 1");
  }
  const std::int64_t ord = arith::mult_order(r, n);
  const std::int64_t s = arith::geom_sum_mod(r, static_cast<std::uint64_t>(ord), n).value;
  return n * ord / arith::gcd(n, arith::mul_mod(t, s, n));
}

std::int64_t aut_order(const Aut& a) { return kappa(a.n(), a.r(), a.t()); }

std::vector<Aut> enumerate_aut(std::int64_t n) {
  require(n >= 1, "enumerate_aut: n must be positive");
  std::vector<Aut> out;
  out.reserve(static_cast<std::size_t>(n * arith::euler_phi(n)));
  for (std::int64_t r = 0; r < n; ++r) {
    if (arith::gcd(r, n) != 1) continue;
    for (std::int64_t t = 0; t < n; ++t) out.push_back(make_aut(n, r, t));
  }
  return out;
}

Permutation to_permutation(const Aut& a) {
  const std::int64_t n = a.n();
  require(n >= 2, "to_permutation: D_2n^# needs n >= 2");
  const auto size = static_cast<std::uint32_t>(2 * n - 1);
  std::vector<std::uint32_t> image(size);
  for (std::uint32_t k = 0; k < size; ++k) image[k] = apply(a, Element::at_index(n, k)).index();
  return Permutation(std::move(image));
}

bool conjugation_invariance_check(std::int64_t n, std::int64_t r, std::int64_t t, std::int64_t x,
                                  std::int64_t y) {
  require(n >= 1, "conjugation_invariance_check: n must be positive");
  require(arith::gcd(mod(r, n), n) == 1 && arith::gcd(mod(x, n), n) == 1,
          "conjugation_invariance_check: r and x must be units mod n");
  const std::int64_t conjugated_t = arith::mul_mod(1 - r, y, n) + arith::mul_mod(x, t, n);
  return kappa(n, r, t) == kappa(n, r, mod(conjugated_t, n));
}

}  // namespace cayley_census
