#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace orbent {

// Integer-coefficient polynomial in one variable t; coeffs()[i] multiplies t^i.
// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial one() { return IntPolynomial{1}; }

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
  bool has_nonnegative_coeffs() const;

  /// Renders as "1 + 2t + t^2"; the zero polynomial is "0".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace orbent
