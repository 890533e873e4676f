#include "cayley_census/arith.hpp"
#include "cayley_census/dihedral.hpp"
#include "cayley_census/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace cayley_census;

namespace {

// Group product in D_2n with elements (k, e) standing for u^e v^k.
Element multiply(const Element& x, const Element& y) {
  const std::int64_t n = x.n();
  const bool xr = x.kind() == Element::Kind::reflection;
  const bool yr = y.kind() == Element::Kind::reflection;
  // u^a v^b * u^c v^d = u^{a + (-1)^b c} v^{b+d}
  const std::int64_t e = arith::mod(x.exponent() + (xr ? -y.exponent() : y.exponent()), n);
  return xr != yr ? Element::reflection(n, e) : Element::rotation(n, e);
}

std::vector<Element> all_elements(std::int64_t n) {
  std::vector<Element> out;
  for (std::int64_t i = 0; i < n; ++i) out.push_back(Element::rotation(n, i));
  for (std::int64_t j = 0; j < n; ++j) out.push_back(Element::reflection(n, j));
  return out;
}

}  // namespace

TEST_CASE("element indexing covers D_2n minus the identity") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::uint32_t k = 0; k < static_cast<std::uint32_t>(2 * n - 1); ++k) {
      const Element g = Element::at_index(n, k);
      CHECK_FALSE(g.is_identity());
      CHECK(g.index() == k);
    }
    CHECK_THROWS_AS(Element::identity(n).index(), DomainError);
  }
  CHECK(Element::rotation(5, 1).index() == 0);
  CHECK(Element::reflection(5, 0).index() == 4);
  CHECK(Element::rotation(5, -1) == Element::rotation(5, 4));
}

TEST_CASE("make_aut validates r") {
  CHECK_THROWS_AS(make_aut(6, 2, 0), InvalidAutomorphism);
  CHECK_THROWS_AS(make_aut(0, 1, 0), DomainError);
  const Aut a = make_aut(5, -3, 7);
  CHECK(a.r() == 2);
  CHECK(a.t() == 2);
  CHECK(enumerate_aut(15).size() == 15 * 8);
  CHECK(enumerate_aut(1).size() == 1);
}

TEST_CASE("automorphisms are group homomorphisms") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    const std::vector<Element> elems = all_elements(n);
    for (const Aut& a : enumerate_aut(n)) {
      for (const Element& x : elems) {
        for (const Element& y : elems) {
          CHECK(apply(a, multiply(x, y)) == multiply(apply(a, x), apply(a, y)));
        }
      }
    }
  }
}

TEST_CASE("compose is apply a then b") {
  CHECK(compose(make_aut(5, 2, 1), make_aut(5, 3, 2)) == make_aut(5, 1, 0));
  for (std::int64_t n = 2; n <= 9; ++n) {
    const auto auts = enumerate_aut(n);
    for (const Aut& a : auts) {
      for (const Aut& b : auts) {
        const Aut ab = compose(a, b);
        for (const Element& g : all_elements(n)) CHECK(apply(ab, g) == apply(b, apply(a, g)));
      }
    }
  }
}

TEST_CASE("power and kappa") {
  CHECK(power(make_aut(15, 4, 5), 2) == make_aut(15, 1, 10));
  CHECK(power(make_aut(15, 4, 5), 0).is_identity());
  CHECK(kappa(15, 4, 5) == 6);
  CHECK(kappa(15, 1, 3) == 5);
  CHECK(kappa(3, 2, 1) == 2);
  CHECK(kappa(1, 0, 0) == 1);
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (const Aut& a : enumerate_aut(n)) {
      Aut x = a;
      std::int64_t s = 1;
      while (!x.is_identity()) {
        x = compose(x, a);
        ++s;
      }
      CHECK(aut_order(a) == s);
      CHECK(power(a, static_cast<std::uint64_t>(s)).is_identity());
      CHECK(power(a, 7) == compose(power(a, 3), power(a, 4)));
    }
  }
}

TEST_CASE("permutation of a_{15,4,5}") {
  const Permutation perm = to_permutation(make_aut(15, 4, 5));
  CHECK(perm.size() == 29);
  std::vector<std::size_t> v_lengths;
  std::vector<bool> seen(perm.size(), false);
  for (std::uint32_t s = 14; s < 29; ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::uint32_t k = s; !seen[k]; k = perm(k)) {
      seen[k] = true;
      ++len;
    }
    v_lengths.push_back(len);
  }
  std::sort(v_lengths.begin(), v_lengths.end());
  CHECK(v_lengths == std::vector<std::size_t>{3, 6, 6});
  CHECK_THROWS_AS(to_permutation(make_aut(1, 0, 0)), DomainError);
}

TEST_CASE("Permutation basics") {
  const Permutation p({1, 2, 0, 3});
  CHECK(p.fixed_points() == 1);
  CHECK(p.then(p).then(p).is_identity());
  auto lengths = p.cycle_lengths();
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{1, 3});
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(p.then(Permutation::identity(3)), DomainError);
}

TEST_CASE("conjugate automorphisms share their order") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (const Aut& a : enumerate_aut(n)) {
      for (const Aut& c : enumerate_aut(n)) {
        CHECK(conjugation_invariance_check(n, a.r(), a.t(), c.r(), c.t()));
      }
    }
  }
}
