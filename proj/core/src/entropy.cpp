#include "orbent/entropy.hpp"

#include <cmath>
#include <numbers>

#include "orbent/errors.hpp"
#include "orbent/natural.hpp"

namespace orbent {

namespace {

void require_compatible(const ProbVec& p, const CoarseMap& pi) {
  if (pi.domain_size() != p.size()) {
    throw InvalidArgument("coarse map covers " + std::to_string(pi.domain_size()) + " outcomes but P has " +
                          std::to_string(p.size()));
  }
}

long double shannon_ld(const ProbVec& p) {
  long double h = 0.0L;
  for (const Rational& x : p.probs()) {
    const long double log_p = ln(Natural(x.numerator())) - ln(Natural(x.denominator()));
    h -= x.to_long_double() * log_p;
  }
  return h;
}

long double reflective_ld(const ProbVec& p) {
  return shannon_ld(p) + (Rational(1) - p.last()).to_long_double() * std::numbers::ln2_v<long double>;
}

}  // namespace

ProbVec pushforward(const ProbVec& p, const CoarseMap& pi) {
  require_compatible(p, pi);
  std::vector<Rational> q;
  q.reserve(pi.codomain_size());
  std::size_t i = 0;
  for (std::size_t b : pi.blocks()) {
    Rational sum;
    for (std::size_t t = 0; t < b; ++t) sum += p[i++];
    q.push_back(std::move(sum));
  }
  return ProbVec(std::move(q));
}

ProbVec conditional(const ProbVec& p, const CoarseMap& pi, std::size_t block) {
  require_compatible(p, pi);
  if (block >= pi.codomain_size()) throw InvalidArgument("block index out of range");
  const std::size_t begin = pi.block_begin(block);
  const std::size_t size = pi.block_size(block);
  Rational mass;
  for (std::size_t i = begin; i < begin + size; ++i) mass += p[i];
  std::vector<Rational> out;
  out.reserve(size);
  for (std::size_t i = begin; i < begin + size; ++i) out.push_back(p[i] / mass);
  return ProbVec(std::move(out));
}

double shannon(const ProbVec& p) { return static_cast<double>(shannon_ld(p)); }

Rational tsallis2(const ProbVec& p) {
  Rational out(1);
  for (const Rational& x : p.probs()) out -= x * x;
  return out;
}

double reflective(const ProbVec& p) { return static_cast<double>(reflective_ld(p)); }

Rational symplectic_entropy(const ProbVec& p) {
  const Rational half(1, 2);
  return half * tsallis2(p) + half * (Rational(1) - p.last() * p.last());
}

double shannon_chain_residual(const ProbVec& p, const CoarseMap& pi) {
  const ProbVec q = pushforward(p, pi);
  long double rhs = shannon_ld(q);
  for (std::size_t j = 0; j < q.size(); ++j) rhs += q[j].to_long_double() * shannon_ld(conditional(p, pi, j));
  return static_cast<double>(shannon_ld(p) - rhs);
}

double reflective_chain_residual(const ProbVec& p, const CoarseMap& pi) {
  const ProbVec q = pushforward(p, pi);
  const std::size_t m = q.size();
  long double rhs = reflective_ld(q);
  for (std::size_t j = 0; j + 1 < m; ++j) rhs += q[j].to_long_double() * shannon_ld(conditional(p, pi, j));
  rhs += q[m - 1].to_long_double() * reflective_ld(conditional(p, pi, m - 1));
  return static_cast<double>(reflective_ld(p) - rhs);
}

Rational symplectic_chain_residual(const ProbVec& p, const CoarseMap& pi) {
  const ProbVec q = pushforward(p, pi);
  const std::size_t m = q.size();
  const Rational half(1, 2);
  Rational rhs = symplectic_entropy(q);
  for (std::size_t j = 0; j + 1 < m; ++j) rhs += half * q[j] * q[j] * tsallis2(conditional(p, pi, j));
  rhs += q[m - 1] * q[m - 1] * symplectic_entropy(conditional(p, pi, m - 1));
  return symplectic_entropy(p) - rhs;
}

}  // namespace orbent
