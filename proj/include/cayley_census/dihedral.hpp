#pragma once

// The dihedral group D_2n = <u, v | u^n = v^2 = 1, vuv = u^-1> and its
// automorphisms a_{n,r,t}: u^i -> u^(ri), u^j v -> u^(rj+t) v.

#include <cstdint>
#include <span>
#include <vector>

namespace cayley_census {

/// A member of D_2n: a rotation u^i or a reflection u^j v, exponent reduced mod n.
class Element {
 public:
  enum class Kind : std::uint8_t { rotation, reflection };

  static Element rotation(std::int64_t n, std::int64_t i);
  static Element reflection(std::int64_t n, std::int64_t j);
  static Element identity(std::int64_t n) { return rotation(n, 0); }

  Kind kind() const { return kind_; }
  std::int64_t exponent() const { return exponent_; }
  std::int64_t n() const { return n_; }
  bool is_identity() const { return kind_ == Kind::rotation && exponent_ == 0; }

  /// Position in the fixed indexing of D_2n^#: u^1..u^(n-1) -> 0..n-2, then
  /// v, uv, ..., u^(n-1)v -> n-1..2n-2. The identity has no index.
  std::uint32_t index() const;
  static Element at_index(std::int64_t n, std::uint32_t index);

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Element(Kind kind, std::int64_t n, std::int64_t e) : kind_(kind), exponent_(e), n_(n) {}
  Kind kind_;
  std::int64_t exponent_;
  std::int64_t n_;
};

/// A permutation of {0, ..., size-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `image` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> image);
  static Permutation identity(std::size_t size);

  std::size_t size() const { return image_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return image_[point]; }
  std::span<const std::uint32_t> image() const { return image_; }

  /// The permutation "this, then next".
  Permutation then(const Permutation& next) const;
  bool is_identity() const;
  std::size_t fixed_points() const;
  std::vector<std::size_t> cycle_lengths() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

/// Canonical a_{n,r,t} with gcd(r, n) = 1 and r, t in [0, n).
class Aut {
 public:
  static Aut identity(std::int64_t n);

  std::int64_t n() const { return n_; }
  std::int64_t r() const { return r_; }
  std::int64_t t() const { return t_; }
  bool is_identity() const { return r_ == 1 % n_ && t_ == 0; }

  friend bool operator==(const Aut&, const Aut&) = default;

 private:
  friend Aut make_aut(std::int64_t n, std::int64_t r, std::int64_t t);
  Aut(std::int64_t n, std::int64_t r, std::int64_t t) : n_(n), r_(r), t_(t) {}
  std::int64_t n_;
  std::int64_t r_;
  std::int64_t t_;
};

/// Reduces r, t mod n; throws InvalidAutomorphism if gcd(r, n) != 1.
Aut make_aut(std::int64_t n, std::int64_t r, std::int64_t t);

Element apply(const Aut& a, const Element& g);

/// "a, then b": a_{n,r,t} a_{n,r',t'} = a_{n, rr', r't + t'}.
Aut compose(const Aut& a, const Aut& b);

/// a^s = a_{n, r^s, t S_s(r)}, closed form so s may be huge.
Aut power(const Aut& a, std::uint64_t s);

/// kappa(n,r,t) = n |r|_n / gcd(n, t S_{|r|_n}(r)), the order of a_{n,r,t}.
std::int64_t kappa(std::int64_t n, std::int64_t r, std::int64_t t);

std::int64_t aut_order(const Aut& a);

/// All n phi(n) automorphisms, r ascending then t ascending.
std::vector<Aut> enumerate_aut(std::int64_t n);

/// The action of `a` on D_2n^# under the Element::index() convention.
Permutation to_permutation(const Aut& a);

/// kappa(n,r,t) == kappa(n,r,(1-r)y + xt); conjugating a_{n,r,t} by a_{n,x,y}.
bool conjugation_invariance_check(std::int64_t n, std::int64_t r, std::int64_t t, std::int64_t x,
                                  std::int64_t y);

}  // namespace cayley_census
