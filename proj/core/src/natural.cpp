#include "orbent/natural.hpp"

#include <cmath>
#include <limits>

#include "orbent/errors.hpp"

namespace orbent {

Natural::Natural(std::uint64_t v) {
  // mpz_class has no portable uint64 constructor on every ABI.
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

Natural::Natural(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw InvalidArgument("Natural: negative value " + value_.get_str());
}

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty()) throw ParseError("Natural: empty string");
  for (char c : decimal) {
    if (c < '0' || c > '9') throw ParseError("Natural: not a decimal integer: " + std::string(decimal));
  }
  return Natural(mpz_class(std::string(decimal), 10));
}

Natural Natural::power(std::uint64_t base, std::uint64_t exponent) {
  mpz_class b = Natural(base).value_;
  mpz_class r;
  if (exponent > std::numeric_limits<unsigned long>::max()) {
    throw InvalidArgument("Natural::power: exponent too large");
  }
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return Natural(std::move(r));
}

std::string Natural::to_string() const { return value_.get_str(10); }

std::size_t Natural::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool Natural::fits_u64() const { return bit_length() <= 64; }

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw InvalidArgument("Natural: value exceeds 64 bits");
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, value_.get_mpz_t());
  return count == 0 ? 0 : out;
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

bool Natural::divisible_by(const Natural& d) const {
  if (d.is_zero()) return is_zero();
  return mpz_divisible_p(value_.get_mpz_t(), d.value_.get_mpz_t()) != 0;
}

Natural Natural::exact_div(const Natural& d) const {
  if (d.is_zero()) throw InvalidArgument("Natural: division by zero");
  if (!divisible_by(d)) {
    throw InexactDivision("inexact division: " + to_string() + " / " + d.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), d.value_.get_mpz_t());
  return Natural(std::move(q));
}

long double ln(const Natural& x) {
  if (x.is_zero()) throw InvalidArgument("ln: argument must be positive");
  const std::size_t bits = x.bit_length();
  if (bits <= 64) return std::log(static_cast<long double>(x.to_u64()));
  const std::size_t shift = bits - 64;
  mpz_class top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), x.value().get_mpz_t(), shift);
  const long double mantissa = static_cast<long double>(Natural(std::move(top)).to_u64());
  return std::log(mantissa) + static_cast<long double>(shift) * std::log(2.0L);
}

long double log_base(const Natural& x, std::uint64_t base) {
  if (base < 2) throw InvalidArgument("log_base: base must be >= 2");
  return ln(x) / std::log(static_cast<long double>(base));
}

}  // namespace orbent
