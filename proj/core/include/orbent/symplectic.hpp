#pragma once

#include <cstdint>
#include <vector>

#include "orbent/natural.hpp"
#include "orbent/probvec.hpp"

namespace orbent {

/// Type of an isotropic flag S_1 < ... < S_(k-1) in a 2n-dimensional
/// symplectic space over F_q: the positive dimension increments m_i, with
/// s = sum m_i <= n. An empty increment list is the empty flag.
class FlagType {
 public:
  /// Throws InvalidArgument on a zero increment, s > n, or q < 2.
  FlagType(std::vector<std::uint64_t> increments, std::uint64_t n, std::uint64_t q);

  const std::vector<std::uint64_t>& increments() const { return increments_; }
  std::uint64_t n() const { return n_; }
  std::uint64_t q() const { return q_; }
  /// Dimension s of the largest subspace in the flag.
  std::uint64_t dimension() const { return dimension_; }

 private:
  std::vector<std::uint64_t> increments_;
  std::uint64_t n_;
  std::uint64_t q_;
  std::uint64_t dimension_ = 0;
};

/// |GL_m(F_q)| = prod_{i<m} (q^m - q^i).
Natural gl_order(std::uint64_t m, std::uint64_t q);

/// |Sp_2n(F_q)| = q^(n^2) prod_{i=1..n} (q^(2i) - 1). n = 0 gives 1.
Natural sp_order(std::uint64_t n, std::uint64_t q);

/// |N(S)| = q^(s(s+1)/2 + 2s(n-s)) for an isotropic S of dimension s.
Natural unipotent_radical_order(std::uint64_t s, std::uint64_t n, std::uint64_t q);

/// Number of totally isotropic s-dimensional subspaces of F_q^(2n).
/// Also checks ig * |N| * |GL_s| * |Sp_2(n-s)| == |Sp_2n| and throws
/// InvariantViolation if it fails.
Natural ig_count(std::uint64_t s, std::uint64_t n, std::uint64_t q);

/// Number of isotropic flags of the given type:
/// ig_count(s, n, q) times the q-multinomial of the increments.
Natural isotropic_flag_count(const FlagType& ft);

/// |Sp(V) / P(F_{n,P})| = q-multinomial(n; nP) * prod_{j=np_k+1..n} (q^j + 1).
/// Checked against isotropic_flag_count with increments (np_1, ..., np_(k-1)).
Natural sp_quotient_closed(std::uint64_t n, const ProbVec& p, std::uint64_t q);

/// (1/n^2) log_q sp_quotient_closed(n, P, q).
double normalized_logq_quotient(std::uint64_t n, const ProbVec& p, std::uint64_t q);

struct ChainIdentityReport {
  bool equal;
  Natural lhs;
  Natural rhs;
};

/// Exact check of
///   |Sp/P(F_{n,P})| = |Sp/P(F_{n,Q})| * prod_j qmult(n q_j; n P|j) * prod_{j=np_k+1..n q_m} (q^j + 1)
/// with Q the push-forward of P under `pi`.
ChainIdentityReport symplectic_chain_identity_check(std::uint64_t n, const ProbVec& p, const CoarseMap& pi,
                                                    std::uint64_t q);

}  // namespace orbent
