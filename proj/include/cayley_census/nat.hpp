#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cayley_census {

/// Arbitrary-precision nonnegative integer. Only exact operations are
/// exposed: there is no truncating division, only exact_div which fails
/// loudly when the divisor does not divide.
class Nat {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Nat() = default;
  Nat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static Nat pow2(std::uint64_t exponent);
  /// Parses a decimal string; throws DomainError on anything else.
  static Nat from_string(std::string_view decimal);

  Nat& operator+=(const Nat& rhs);
  Nat& operator*=(const Nat& rhs);
  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }

  bool divisible_by(const Nat& divisor) const;
  /// this / divisor; throws InvariantViolation unless the division is exact.
  Nat exact_div(const Nat& divisor) const;
  /// ceil(this / divisor) for divisor > 0.
  Nat ceil_div(const Nat& divisor) const;

  bool is_zero() const { return value_.is_zero(); }
  std::string to_string() const { return value_.str(); }
  /// Throws DomainError if the value does not fit.
  std::uint64_t to_u64() const;
  std::size_t bit_length() const;

  friend bool operator==(const Nat& a, const Nat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.to_string(); }

 private:
  explicit Nat(Rep v) : value_(std::move(v)) {}
  Rep value_;
};

}  // namespace cayley_census
