#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbent/natural.hpp"
#include "orbent/polynomial.hpp"
#include "orbent/probvec.hpp"

namespace orbent {

// Classical Dynkin families. B and C share every cardinality but stay distinct.
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

char family_tag(Family f);
/// "A", "B", "C" or "D" (case-insensitive); throws ParseError otherwise.
Family parse_family(std::string_view text);
std::size_t min_rank(Family f);

/// A connected Dynkin diagram with nodes 1..rank along a chain. The
/// family-specific end (double bond for B/C, fork for D) sits at node `rank`;
/// for D, nodes rank-1 and rank are both attached to rank-2.
class Diagram {
 public:
  /// rank >= 1 for A/B/C, rank >= 2 for D.
  Diagram(Family family, std::size_t rank);

  Family family() const { return family_; }
  std::size_t rank() const { return rank_; }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Family family_;
  std::size_t rank_;
};

/// Strictly increasing list of 1-based node indices.
class NodeRemovalSet {
 public:
  NodeRemovalSet() = default;
  explicit NodeRemovalSet(std::vector<std::size_t> nodes);

  const std::vector<std::size_t>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  bool contains(std::size_t node) const;
  bool is_subset_of(const NodeRemovalSet& other) const;

  friend bool operator==(const NodeRemovalSet&, const NodeRemovalSet&) = default;

 private:
  std::vector<std::size_t> nodes_;
};

struct Factor {
  Family family;
  std::size_t rank;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Irreducible factors of a parabolic subgroup, ordered by smallest node.
using ParabolicType = std::vector<Factor>;

std::string to_string(const ParabolicType& pt);

/// An irreducible piece of the diagram left after node removal, with the
/// 1-based node indices it occupies (sorted).
struct Component {
  Factor type;
  std::vector<std::size_t> nodes;
};

/// Connected pieces of `diagram` once `removal` is deleted. Segments away
/// from node `rank` are type A. The segment holding node `rank` inherits the
/// diagram family, with one D-specific case: when node rank-1 is removed,
/// node rank hangs off rank-2 and the piece is type A. The pair {rank-1, rank}
/// cut off from rank-2 is reported as the single factor D_2 (= A_1 x A_1).
/// Throws InvalidArgument for out-of-range indices.
std::vector<Component> components(const Diagram& diagram, const NodeRemovalSet& removal);

ParabolicType remove_nodes(const Diagram& diagram, const NodeRemovalSet& removal);

/// Order of the reflection group: A_m -> (m+1)!, B_m/C_m -> 2^m m!,
/// D_m -> 2^(m-1) m!.
Natural group_order(Family family, std::size_t rank);
Natural parabolic_order(const ParabolicType& pt);

/// Closed-form Poincare polynomial as a product of gauss brackets over the
/// degrees of the group: A_m -> [2]..[m+1], B_m/C_m -> [2][4]..[2m],
/// D_m -> [m][2][4]..[2m-2].
IntPolynomial poincare_closed(Family family, std::size_t rank);
/// The bracket degrees above, in that order.
std::vector<std::uint64_t> bracket_degrees(Family family, std::size_t rank);
IntPolynomial poincare_parabolic(const ParabolicType& pt);

struct DistributionParabolic {
  Diagram diagram;
  NodeRemovalSet removal;
  ParabolicType type;
};

/// Nodes n p_1, n (p_1 + p_2), ..., n (1 - p_k): the partial sums of P's
/// counts, excluding the full sum.
NodeRemovalSet distribution_removal(std::uint64_t n, const ProbVec& p);

/// The parabolic subgroup of the rank n-1 diagram obtained by removing nodes
/// n p_1, n (p_1 + p_2), ..., n (1 - p_k). Requires n >= min_rank + 1 and
/// every n p_i integral.
DistributionParabolic parabolic_for_distribution(Family family, std::uint64_t n, const ProbVec& p);

}  // namespace orbent
