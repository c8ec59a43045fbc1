#pragma once

#include <cstdint>

#include "orbent/dynkin.hpp"
#include "orbent/natural.hpp"
#include "orbent/polynomial.hpp"
#include "orbent/probvec.hpp"

namespace orbent {

/// |W / W_P| for the rank n-1 group of `family` and the parabolic subgroup
/// attached to P. For family A this is the multinomial coefficient.
Natural orbit_count(Family family, std::uint64_t n, const ProbVec& p);

/// P_W(t) / P_{W_P}(t) by exact polynomial division. Nonnegative
/// coefficients; value at t = 1 is orbit_count.
IntPolynomial orbit_poincare(Family family, std::uint64_t n, const ProbVec& p);

/// (1/n) ln |W / W_P|.
double normalized_log_orbit(Family family, std::uint64_t n, const ProbVec& p);

struct CardinalityReport {
  bool equal;
  Natural lhs;  // |W| / |W_I|
  Natural rhs;  // |W| / |W_J| * prod |W_S| / |W_{S cap I}|
};

struct PoincareReport {
  bool zero;
  IntPolynomial lhs;
  IntPolynomial rhs;
  IntPolynomial difference;
};

// Coarsening identity
//
//   |W|/|W_I| = |W|/|W_J| * prod_{S in comp(J), S not in comp(I)} |W_S| / |W_{S cap I}|
//
// where I (resp. J) are the nodes surviving the fine (resp. coarse) removal,
// so the fine removal set must contain the coarse one. Components are
// compared as node-index sets. Any nested removal sets are accepted,
// consecutive or not.
CardinalityReport coarsening_cardinality_check(const Diagram& diagram, const NodeRemovalSet& fine,
                                               const NodeRemovalSet& coarse);
PoincareReport coarsening_poincare_check(const Diagram& diagram, const NodeRemovalSet& fine,
                                         const NodeRemovalSet& coarse);

/// Same identities with the removal sets induced by P (fine) and by its
/// push-forward under `coarse_map` (coarse).
CardinalityReport coarsening_cardinality_check(Family family, std::uint64_t n, const ProbVec& p,
                                               const CoarseMap& coarse_map);
PoincareReport coarsening_poincare_check(Family family, std::uint64_t n, const ProbVec& p,
                                         const CoarseMap& coarse_map);

}  // namespace orbent
