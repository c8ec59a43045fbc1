#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "orbent/natural.hpp"
#include "orbent/polynomial.hpp"

namespace orbent {

Natural factorial(std::uint64_t n);

/// n! / prod(parts_i!). Throws InvalidArgument unless sum(parts) == n.
Natural multinomial(std::uint64_t n, std::span<const std::uint64_t> parts);

/// [k]_q! = (q^k - 1)(q^(k-1) - 1)...(q - 1); the empty product for k = 0.
/// q is any integer >= 2: the identities are polynomial in q, so primality is
/// not checked here.
Natural q_factorial(std::uint64_t k, std::uint64_t q);

/// [n]_q! / prod([parts_i]_q!). Throws InvalidArgument unless sum(parts) == n.
Natural q_multinomial(std::uint64_t n, std::span<const std::uint64_t> parts, std::uint64_t q);

/// prod_{i=from..to} (q^i + 1); 1 when from > to.
Natural q_plus_one_product(std::uint64_t from, std::uint64_t to, std::uint64_t q);

/// 1 + t + ... + t^(j-1), j >= 1.
IntPolynomial gauss_bracket(std::uint64_t j);

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// p * [j] in O(deg p) via a running window sum.
IntPolynomial mul_gauss_bracket(const IntPolynomial& p, std::uint64_t j);

/// p / [j], exact. Throws InexactDivision when [j] does not divide p.
IntPolynomial div_gauss_bracket_exact(const IntPolynomial& p, std::uint64_t j);

/// Exact quotient in Z[t]. Throws InexactDivision if the remainder is nonzero
/// or a quotient coefficient is not an integer.
IntPolynomial poly_div_exact(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// Evaluation at a nonnegative integer point. Throws InvariantViolation if the
/// value is negative (only possible for polynomials with negative coefficients).
Natural poly_eval(const IntPolynomial& p, const Natural& t);

}  // namespace orbent
