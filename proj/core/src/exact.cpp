#include "orbent/exact.hpp"

#include <algorithm>
#include <limits>
#include <vector>
#include <numeric>
#include <string>

#include "orbent/errors.hpp"

namespace orbent {

namespace {

unsigned long to_ulong(std::uint64_t v, const char* what) {
  if (v > std::numeric_limits<unsigned long>::max()) throw InvalidArgument(std::string(what) + " too large");
  return static_cast<unsigned long>(v);
}

void require_sum(std::uint64_t n, std::span<const std::uint64_t> parts, const char* op) {
  std::uint64_t total = 0;
  for (std::uint64_t p : parts) {
    if (p > n || total > n - p) throw InvalidArgument(std::string(op) + ": parts exceed n");
    total += p;
  }
  if (total != n) {
    throw InvalidArgument(std::string(op) + ": parts sum to " + std::to_string(total) + ", expected " +
                          std::to_string(n));
  }
}

void require_q(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be >= 2, got " + std::to_string(q));
}

// Balanced product so GMP multiplies operands of similar size.
mpz_class product_tree(std::vector<mpz_class>& terms, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return 1;
  if (hi - lo == 1) return terms[lo];
  if (hi - lo == 2) return terms[lo] * terms[lo + 1];
  const std::size_t mid = lo + (hi - lo) / 2;
  return product_tree(terms, lo, mid) * product_tree(terms, mid, hi);
}

mpz_class product_tree(std::vector<mpz_class> terms) { return product_tree(terms, 0, terms.size()); }

// (q^i + offset) for i in [from, to].
std::vector<mpz_class> power_terms(std::uint64_t from, std::uint64_t to, std::uint64_t q, long offset) {
  std::vector<mpz_class> terms;
  if (from > to) return terms;
  const mpz_class base = Natural(q).value();
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), to_ulong(from, "exponent"));
  terms.reserve(to - from + 1);
  for (std::uint64_t i = from;; ++i) {
    terms.push_back(power + offset);
    if (i == to) break;
    power *= base;
  }
  return terms;
}

}  // namespace

Natural factorial(std::uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), to_ulong(n, "factorial argument"));
  return Natural(std::move(r));
}

Natural multinomial(std::uint64_t n, std::span<const std::uint64_t> parts) {
  require_sum(n, parts, "multinomial");
  // Product of binomials avoids building n! and dividing at the end.
  mpz_class result = 1;
  std::uint64_t filled = 0;
  for (std::uint64_t p : parts) {
    filled += p;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), to_ulong(filled, "n"), to_ulong(p, "part"));
    result *= b;
  }
  return Natural(std::move(result));
}

Natural q_factorial(std::uint64_t k, std::uint64_t q) {
  require_q(q);
  return Natural(product_tree(power_terms(1, k, q, -1)));
}

Natural q_multinomial(std::uint64_t n, std::span<const std::uint64_t> parts, std::uint64_t q) {
  require_sum(n, parts, "q_multinomial");
  require_q(q);
  // [n]! / [largest]! is a product of the top factors; only the remaining
  // parts go through the division.
  const auto largest = std::max_element(parts.begin(), parts.end());
  const std::uint64_t skip = largest == parts.end() ? 0 : *largest;
  const mpz_class num = product_tree(power_terms(skip + 1, n, q, -1));
  std::vector<mpz_class> den_terms;
  for (auto it = parts.begin(); it != parts.end(); ++it) {
    if (it == largest) continue;
    for (mpz_class& t : power_terms(1, *it, q, -1)) den_terms.push_back(std::move(t));
  }
  return Natural(num).exact_div(Natural(product_tree(std::move(den_terms))));
}

Natural q_plus_one_product(std::uint64_t from, std::uint64_t to, std::uint64_t q) {
  require_q(q);
  return Natural(product_tree(power_terms(from, to, q, 1)));
}

IntPolynomial gauss_bracket(std::uint64_t j) {
  if (j == 0) throw InvalidArgument("gauss_bracket: j must be >= 1");
  return IntPolynomial(std::vector<mpz_class>(j, mpz_class(1)));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<mpz_class> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial mul_gauss_bracket(const IntPolynomial& p, std::uint64_t j) {
  if (j == 0) throw InvalidArgument("mul_gauss_bracket: j must be >= 1");
  if (p.is_zero()) return {};
  const auto& c = p.coeffs();
  std::vector<mpz_class> out(c.size() + j - 1);
  mpz_class window = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c.size()) window += c[i];
    if (i >= j && i - j < c.size()) window -= c[i - j];
    out[i] = window;
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial div_gauss_bracket_exact(const IntPolynomial& p, std::uint64_t j) {
  if (j == 0) throw InvalidArgument("div_gauss_bracket_exact: j must be >= 1");
  if (p.is_zero()) return {};
  const auto& c = p.coeffs();
  const auto inexact = [&] {
    return InexactDivision("div_gauss_bracket_exact: " + p.to_string() + " not divisible by [" + std::to_string(j) + "]");
  };
  if (c.size() < j) throw inexact();
  // p (1 - t) = r (1 - t^j)
  const auto shifted = [&](std::size_t i) -> mpz_class {
    mpz_class v = i < c.size() ? c[i] : mpz_class(0);
    if (i >= 1 && i - 1 < c.size()) v -= c[i - 1];
    return v;
  };
  std::vector<mpz_class> r(c.size() - j + 1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = shifted(i);
    if (i >= j) r[i] += r[i - j];
  }
  for (std::size_t i = r.size(); i <= c.size(); ++i) {
    mpz_class expect = i >= j ? mpz_class(-r[i - j]) : mpz_class(0);
    if (shifted(i) != expect) throw inexact();
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial poly_div_exact(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw InvalidArgument("poly_div_exact: division by the zero polynomial");
  if (dividend.is_zero()) return {};
  if (dividend.degree() < divisor.degree()) {
    throw InexactDivision("poly_div_exact: " + dividend.to_string() + " not divisible by " + divisor.to_string());
  }
  std::vector<mpz_class> rem = dividend.coeffs();
  const auto& d = divisor.coeffs();
  const std::size_t dn = d.size() - 1;
  const mpz_class& lead = d.back();
  std::vector<mpz_class> quot(rem.size() - dn);
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + dn];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw InexactDivision("poly_div_exact: non-integral quotient coefficient dividing " + dividend.to_string() +
                            " by " + divisor.to_string());
    }
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t i = 0; i <= dn; ++i) rem[k + i] -= quot[k] * d[i];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (sgn(rem[i]) != 0) {
      throw InexactDivision("poly_div_exact: nonzero remainder dividing " + dividend.to_string() + " by " +
                            divisor.to_string());
    }
  }
  return IntPolynomial(std::move(quot));
}

Natural poly_eval(const IntPolynomial& p, const Natural& t) {
  mpz_class acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t.value() + c[i];
  if (sgn(acc) < 0) throw InvariantViolation("poly_eval: negative value " + acc.get_str());
  return Natural(std::move(acc));
}

}  // namespace orbent
