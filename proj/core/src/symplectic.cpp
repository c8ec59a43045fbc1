#include "orbent/symplectic.hpp"

#include <string>
#include <vector>

#include "orbent/entropy.hpp"
#include "orbent/errors.hpp"
#include "orbent/exact.hpp"

namespace orbent {

namespace {

void require_q(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be >= 2, got " + std::to_string(q));
}

mpz_class q_power(std::uint64_t q, std::uint64_t e) { return Natural::power(q, e).value(); }

mpz_class balanced_product(const std::vector<mpz_class>& terms, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return 1;
  if (hi - lo == 1) return terms[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return balanced_product(terms, lo, mid) * balanced_product(terms, mid, hi);
}

}  // namespace

FlagType::FlagType(std::vector<std::uint64_t> increments, std::uint64_t n, std::uint64_t q)
    : increments_(std::move(increments)), n_(n), q_(q) {
  require_q(q);
  for (std::uint64_t m : increments_) {
    if (m == 0) throw InvalidArgument("flag increments must be positive");
    dimension_ += m;
  }
  if (dimension_ > n_) {
    throw InvalidArgument("isotropic flag of dimension " + std::to_string(dimension_) +
                          " does not fit in half-dimension " + std::to_string(n_));
  }
}

Natural gl_order(std::uint64_t m, std::uint64_t q) {
  require_q(q);
  const mpz_class top = q_power(q, m);
  std::vector<mpz_class> terms;
  mpz_class qi = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    terms.push_back(top - qi);
    qi *= Natural(q).value();
  }
  return Natural(balanced_product(terms, 0, terms.size()));
}

Natural sp_order(std::uint64_t n, std::uint64_t q) {
  require_q(q);
  std::vector<mpz_class> terms{q_power(q, n * n)};
  const mpz_class q2 = q_power(q, 2);
  mpz_class q2i = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    q2i *= q2;
    terms.push_back(q2i - 1);
  }
  return Natural(balanced_product(terms, 0, terms.size()));
}

Natural unipotent_radical_order(std::uint64_t s, std::uint64_t n, std::uint64_t q) {
  require_q(q);
  if (s > n) throw InvalidArgument("isotropic dimension s = " + std::to_string(s) + " exceeds n = " + std::to_string(n));
  return Natural::power(q, s * (s + 1) / 2 + 2 * s * (n - s));
}

Natural ig_count(std::uint64_t s, std::uint64_t n, std::uint64_t q) {
  require_q(q);
  if (s > n) throw InvalidArgument("isotropic dimension s = " + std::to_string(s) + " exceeds n = " + std::to_string(n));
  const std::uint64_t parts[] = {s, n - s};
  Natural count = q_multinomial(n, parts, q) * q_plus_one_product(n - s + 1, n, q);

  const Natural stabilizer = unipotent_radical_order(s, n, q) * gl_order(s, q) * sp_order(n - s, q);
  if (count * stabilizer != sp_order(n, q)) {
    throw InvariantViolation("ig_count: orbit-stabilizer check failed for s=" + std::to_string(s) +
                             " n=" + std::to_string(n) + " q=" + std::to_string(q));
  }
  return count;
}

Natural isotropic_flag_count(const FlagType& ft) {
  return ig_count(ft.dimension(), ft.n(), ft.q()) * q_multinomial(ft.dimension(), ft.increments(), ft.q());
}

Natural sp_quotient_closed(std::uint64_t n, const ProbVec& p, std::uint64_t q) {
  require_q(q);
  const std::vector<std::uint64_t> counts = p.counts(n);
  Natural closed = q_multinomial(n, counts, q) * q_plus_one_product(counts.back() + 1, n, q);

  const FlagType flag(std::vector<std::uint64_t>(counts.begin(), counts.end() - 1), n, q);
  if (closed != isotropic_flag_count(flag)) {
    throw InvariantViolation("sp_quotient_closed disagrees with isotropic_flag_count for n=" + std::to_string(n) +
                             " P=" + p.to_string() + " q=" + std::to_string(q));
  }
  return closed;
}

double normalized_logq_quotient(std::uint64_t n, const ProbVec& p, std::uint64_t q) {
  const long double nn = static_cast<long double>(n) * static_cast<long double>(n);
  return static_cast<double>(log_base(sp_quotient_closed(n, p, q), q) / nn);
}

ChainIdentityReport symplectic_chain_identity_check(std::uint64_t n, const ProbVec& p, const CoarseMap& pi,
                                                    std::uint64_t q) {
  const ProbVec coarse = pushforward(p, pi);
  const std::vector<std::uint64_t> fine_counts = p.counts(n);
  const std::vector<std::uint64_t> coarse_counts = coarse.counts(n);

  Natural lhs = sp_quotient_closed(n, p, q);
  Natural rhs = sp_quotient_closed(n, coarse, q);
  for (std::size_t j = 0; j < coarse.size(); ++j) {
    const ProbVec cond = conditional(p, pi, j);
    rhs *= q_multinomial(coarse_counts[j], cond.counts(coarse_counts[j]), q);
  }
  rhs *= q_plus_one_product(fine_counts.back() + 1, coarse_counts.back(), q);
  const bool equal = lhs == rhs;
  return {equal, std::move(lhs), std::move(rhs)};
}

}  // namespace orbent
