#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orbent {

/// Arbitrary-precision nonnegative integer.
///
/// Holds every cardinality the library produces. Values are immutable from
/// the outside; arithmetic returns new values.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  /// Throws InvalidArgument if `v` is negative.
  explicit Natural(mpz_class v);

  static Natural parse(std::string_view decimal);
  static Natural power(std::uint64_t base, std::uint64_t exponent);

  const mpz_class& value() const { return value_; }
  std::string to_string() const;
  std::size_t bit_length() const;
  bool is_zero() const { return sgn(value_) == 0; }
  bool fits_u64() const;
  std::uint64_t to_u64() const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }

  bool divisible_by(const Natural& d) const;
  /// Quotient of an exact division; throws InexactDivision on a nonzero
  /// remainder and InvalidArgument on a zero divisor.
  Natural exact_div(const Natural& d) const;

  friend bool operator==(const Natural& a, const Natural& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_{0};
};

/// Natural logarithm of a positive integer of any size.
///
/// Uses the bit length plus the leading 64 bits, so the result carries full
/// long-double precision without converting the integer to floating point.
long double ln(const Natural& x);

/// Logarithm to an integer base b >= 2.
long double log_base(const Natural& x, std::uint64_t base);

}  // namespace orbent
