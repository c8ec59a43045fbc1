#include "orbent/rational.hpp"

#include <cmath>

#include "orbent/errors.hpp"

namespace orbent {

namespace {

mpz_class to_mpz(std::int64_t v) {
  const bool negative = v < 0;
  // Magnitude via unsigned arithmetic so INT64_MIN is representable.
  const std::uint64_t mag = negative ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  mpz_class out = Natural(mag).value();
  if (negative) out = -out;
  return out;
}

}  // namespace

Rational::Rational(std::int64_t v) : value_(to_mpz(v)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("Rational: zero denominator");
  value_ = mpq_class(to_mpz(num), to_mpz(den));
  value_.canonicalize();
}

Rational::Rational(const Natural& v) : value_(v.value()) {}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
  if (value_.get_den() == 0) throw InvalidArgument("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits_only(num) || !digits_only(den)) {
    throw ParseError("not a fraction: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

long double Rational::to_long_double() const {
  if (is_zero()) return 0.0L;
  const long double mag = std::exp(ln(Natural(mpz_class(abs(value_.get_num())))) -
                                   ln(Natural(mpz_class(value_.get_den()))));
  return sign() < 0 ? -mag : mag;
}

Rational& Rational::operator+=(const Rational& r) {
  value_ += r.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& r) {
  value_ -= r.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& r) {
  value_ *= r.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& r) {
  if (r.is_zero()) throw InvalidArgument("Rational: division by zero");
  value_ /= r.value_;
  return *this;
}

}  // namespace orbent
