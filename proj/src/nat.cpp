#include "cayley_census/nat.hpp"

#include "cayley_census/errors.hpp"

#include <algorithm>
#include <cctype>

namespace cayley_census {

Nat Nat::pow2(std::uint64_t exponent) {
  Rep v = 1;
  v <<= exponent;
  return Nat(std::move(v));
}

Nat Nat::from_string(std::string_view decimal) {
  require(!decimal.empty() &&
              std::all_of(decimal.begin(), decimal.end(),
                          [](unsigned char c) { return std::isdigit(c) != 0; }),
          "not a nonnegative decimal integer: '" + std::string(decimal) + "'");
  return Nat(Rep(std::string(decimal)));
}

Nat& Nat::operator+=(const Nat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Nat& Nat::operator*=(const Nat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

bool Nat::divisible_by(const Nat& divisor) const {
  require(!divisor.is_zero(), "division by zero");
  return Rep(value_ % divisor.value_).is_zero();
}

Nat Nat::exact_div(const Nat& divisor) const {
  require(!divisor.is_zero(), "division by zero");
  Rep q;
  Rep r;
  boost::multiprecision::divide_qr(value_, divisor.value_, q, r);
  ensure(r.is_zero(), [&] { return "non-exact division: " + to_string() + " / " + divisor.to_string(); });
  return Nat(std::move(q));
}

Nat Nat::ceil_div(const Nat& divisor) const {
  require(!divisor.is_zero(), "division by zero");
  Rep q;
  Rep r;
  boost::multiprecision::divide_qr(value_, divisor.value_, q, r);
  if (!r.is_zero()) ++q;
  return Nat(std::move(q));
}

std::uint64_t Nat::to_u64() const {
  require(bit_length() <= 64, "value does not fit in 64 bits: " + to_string());
  return static_cast<std::uint64_t>(value_);
}

std::size_t Nat::bit_length() const {
  return value_.is_zero() ? 0 : boost::multiprecision::msb(value_) + 1;
}

}  // namespace cayley_census
