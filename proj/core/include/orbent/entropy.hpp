#pragma once

#include <cstddef>

#include "orbent/probvec.hpp"
#include "orbent/rational.hpp"

namespace orbent {

/// Contract for the floating-point chain-rule residuals.
inline constexpr double kChainResidualTolerance = 1e-10;

/// q_j = sum of p_i over block j. Throws InvalidArgument on a size mismatch.
ProbVec pushforward(const ProbVec& p, const CoarseMap& pi);

/// (p_i / q_j) over the indices of zero-based block j.
ProbVec conditional(const ProbVec& p, const CoarseMap& pi, std::size_t block);

/// -sum p_i ln p_i (nats).
double shannon(const ProbVec& p);

/// 1 - sum p_i^2, exact.
Rational tsallis2(const ProbVec& p);

/// H(P) + (1 - p_k) ln 2, with p_k the last entry.
double reflective(const ProbVec& p);

/// H_2(P)/2 + (1 - p_k^2)/2, exact.
Rational symplectic_entropy(const ProbVec& p);

/// H(P) - H(Q) - sum_j Q(j) H(P | block j).
double shannon_chain_residual(const ProbVec& p, const CoarseMap& pi);

/// H_R(P) - [H_R(Q) + sum_{j<m} Q(j) H(P | j) + Q(m) H_R(P | m)].
double reflective_chain_residual(const ProbVec& p, const CoarseMap& pi);

/// H_Sp(P) - [H_Sp(Q) + sum_{j<m} Q(j)^2/2 H_2(P | j) + Q(m)^2 H_Sp(P | m)].
/// Exact; zero whenever the chain rule holds.
Rational symplectic_chain_residual(const ProbVec& p, const CoarseMap& pi);

}  // namespace orbent
