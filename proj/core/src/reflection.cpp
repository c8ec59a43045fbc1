#include "orbent/reflection.hpp"

#include <algorithm>
#include <iterator>

#include "orbent/entropy.hpp"
#include "orbent/errors.hpp"
#include "orbent/exact.hpp"

namespace orbent {

namespace {

// For each coarse component not shared with the fine decomposition, the fine
// components it contains.
struct Refinement {
  Component coarse;
  std::vector<Component> fine_parts;
};

struct NestedDecomposition {
  std::vector<Component> fine;
  std::vector<Component> coarse;
  std::vector<Refinement> unshared;
};

NestedDecomposition decompose(const Diagram& diagram, const NodeRemovalSet& fine, const NodeRemovalSet& coarse) {
  if (!coarse.is_subset_of(fine)) {
    throw InvalidArgument("coarsening check: coarse removal set must be contained in the fine one");
  }
  NestedDecomposition d{components(diagram, fine), components(diagram, coarse), {}};
  for (const Component& s : d.coarse) {
    const bool shared = std::any_of(d.fine.begin(), d.fine.end(),
                                    [&](const Component& c) { return c.nodes == s.nodes; });
    if (shared) continue;
    Refinement r{s, {}};
    for (const Component& c : d.fine) {
      if (std::includes(s.nodes.begin(), s.nodes.end(), c.nodes.begin(), c.nodes.end())) r.fine_parts.push_back(c);
    }
    d.unshared.push_back(std::move(r));
  }
  return d;
}

ParabolicType types_of(const std::vector<Component>& cs) {
  ParabolicType pt;
  for (const Component& c : cs) pt.push_back(c.type);
  return pt;
}

// prod [a] / prod [b] over bracket degrees; common brackets cancel first.
IntPolynomial bracket_quotient(std::vector<std::uint64_t> num, std::vector<std::uint64_t> den) {
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  std::vector<std::uint64_t> up, down;
  std::set_difference(num.begin(), num.end(), den.begin(), den.end(), std::back_inserter(up));
  std::set_difference(den.begin(), den.end(), num.begin(), num.end(), std::back_inserter(down));
  IntPolynomial out = IntPolynomial::one();
  for (std::uint64_t a : up) out = mul_gauss_bracket(out, a);
  for (std::uint64_t b : down) out = div_gauss_bracket_exact(out, b);
  return out;
}

NodeRemovalSet coarse_removal(std::uint64_t n, const ProbVec& p, const CoarseMap& coarse_map) {
  return distribution_removal(n, pushforward(p, coarse_map));
}

}  // namespace

Natural orbit_count(Family family, std::uint64_t n, const ProbVec& p) {
  const DistributionParabolic dp = parabolic_for_distribution(family, n, p);
  return group_order(family, dp.diagram.rank()).exact_div(parabolic_order(dp.type));
}

IntPolynomial orbit_poincare(Family family, std::uint64_t n, const ProbVec& p) {
  const DistributionParabolic dp = parabolic_for_distribution(family, n, p);
  std::vector<std::uint64_t> den;
  for (const Factor& f : dp.type) {
    const auto d = bracket_degrees(f.family, f.rank);
    den.insert(den.end(), d.begin(), d.end());
  }
  return bracket_quotient(bracket_degrees(family, dp.diagram.rank()), std::move(den));
}

double normalized_log_orbit(Family family, std::uint64_t n, const ProbVec& p) {
  return static_cast<double>(ln(orbit_count(family, n, p)) / static_cast<long double>(n));
}

CardinalityReport coarsening_cardinality_check(const Diagram& diagram, const NodeRemovalSet& fine,
                                               const NodeRemovalSet& coarse) {
  const NestedDecomposition d = decompose(diagram, fine, coarse);
  const Natural whole = group_order(diagram.family(), diagram.rank());

  Natural lhs = whole.exact_div(parabolic_order(types_of(d.fine)));
  Natural rhs = whole.exact_div(parabolic_order(types_of(d.coarse)));
  for (const Refinement& r : d.unshared) {
    rhs *= group_order(r.coarse.type.family, r.coarse.type.rank).exact_div(parabolic_order(types_of(r.fine_parts)));
  }
  const bool equal = lhs == rhs;
  return {equal, std::move(lhs), std::move(rhs)};
}

PoincareReport coarsening_poincare_check(const Diagram& diagram, const NodeRemovalSet& fine,
                                         const NodeRemovalSet& coarse) {
  const NestedDecomposition d = decompose(diagram, fine, coarse);
  const IntPolynomial whole = poincare_closed(diagram.family(), diagram.rank());

  IntPolynomial lhs = poly_div_exact(whole, poincare_parabolic(types_of(d.fine)));
  IntPolynomial rhs = poly_div_exact(whole, poincare_parabolic(types_of(d.coarse)));
  for (const Refinement& r : d.unshared) {
    rhs = poly_mul(rhs, poly_div_exact(poincare_closed(r.coarse.type.family, r.coarse.type.rank),
                                       poincare_parabolic(types_of(r.fine_parts))));
  }
  IntPolynomial diff = lhs - rhs;
  const bool zero = diff.is_zero();
  return {zero, std::move(lhs), std::move(rhs), std::move(diff)};
}

CardinalityReport coarsening_cardinality_check(Family family, std::uint64_t n, const ProbVec& p,
                                               const CoarseMap& coarse_map) {
  const DistributionParabolic dp = parabolic_for_distribution(family, n, p);
  return coarsening_cardinality_check(dp.diagram, dp.removal, coarse_removal(n, p, coarse_map));
}

PoincareReport coarsening_poincare_check(Family family, std::uint64_t n, const ProbVec& p,
                                         const CoarseMap& coarse_map) {
  const DistributionParabolic dp = parabolic_for_distribution(family, n, p);
  return coarsening_poincare_check(dp.diagram, dp.removal, coarse_removal(n, p, coarse_map));
}

}  // namespace orbent
