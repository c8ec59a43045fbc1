#include "orbent/dynkin.hpp"

#include <algorithm>
#include <cctype>

#include "orbent/errors.hpp"
#include "orbent/exact.hpp"

namespace orbent {

char family_tag(Family f) { return static_cast<char>(f); }

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      default: break;
    }
  }
  throw ParseError("unknown Dynkin family '" + std::string(text) + "' (expected A, B, C or D)");
}

std::size_t min_rank(Family f) { return f == Family::D ? 2 : 1; }

Diagram::Diagram(Family family, std::size_t rank) : family_(family), rank_(rank) {
  if (rank < min_rank(family)) {
    throw InvalidArgument(std::string("diagram ") + family_tag(family) + std::to_string(rank) +
                          " is below the minimum rank " + std::to_string(min_rank(family)));
  }
}

NodeRemovalSet::NodeRemovalSet(std::vector<std::size_t> nodes) : nodes_(std::move(nodes)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == 0) throw InvalidArgument("node indices are 1-based");
    if (i > 0 && nodes_[i] <= nodes_[i - 1]) throw InvalidArgument("removal set must be strictly increasing");
  }
}

bool NodeRemovalSet::contains(std::size_t node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

bool NodeRemovalSet::is_subset_of(const NodeRemovalSet& other) const {
  return std::includes(other.nodes_.begin(), other.nodes_.end(), nodes_.begin(), nodes_.end());
}

std::string to_string(const ParabolicType& pt) {
  std::string out = "[";
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) out += ", ";
    out += family_tag(pt[i].family);
    out += std::to_string(pt[i].rank);
  }
  return out + "]";
}

std::vector<Component> components(const Diagram& diagram, const NodeRemovalSet& removal) {
  const std::size_t m = diagram.rank();
  if (!removal.empty() && removal.nodes().back() > m) {
    throw InvalidArgument("node " + std::to_string(removal.nodes().back()) + " is out of range for rank " +
                          std::to_string(m));
  }

  // Maximal runs of surviving nodes along the chain 1..m.
  std::vector<std::vector<std::size_t>> runs;
  for (std::size_t v = 1; v <= m; ++v) {
    if (removal.contains(v)) continue;
    if (runs.empty() || runs.back().back() != v - 1) runs.emplace_back();
    runs.back().push_back(v);
  }

  std::vector<Component> out;
  out.reserve(runs.size());
  for (auto& run : runs) out.push_back({{Family::A, run.size()}, std::move(run)});
  if (out.empty() || out.back().nodes.back() != m) return out;

  Component& tail = out.back();
  if (diagram.family() != Family::D) {
    tail.type.family = diagram.family();
    return out;
  }

  // D: the chain picture is exact except at the fork.
  const bool has_fork_partner = m >= 2 && !removal.contains(m - 1);
  if (has_fork_partner) {
    // Tail holds both m-1 and m; with m-2 it is D_r (r >= 3), without it the
    // disconnected pair is the degenerate D_2.
    tail.type.family = Family::D;
    return out;
  }
  // m-1 removed: m is a lone run in the chain, but it is attached to m-2.
  if (m >= 3 && !removal.contains(m - 2)) {
    Component lone = std::move(out.back());
    out.pop_back();
    Component& left = out.back();  // the run ending at m-2
    left.nodes.push_back(lone.nodes.front());
    left.type = {Family::A, left.nodes.size()};
  }
  return out;
}

ParabolicType remove_nodes(const Diagram& diagram, const NodeRemovalSet& removal) {
  ParabolicType pt;
  for (const Component& c : components(diagram, removal)) pt.push_back(c.type);
  return pt;
}

Natural group_order(Family family, std::size_t rank) {
  if (rank < min_rank(family)) {
    throw InvalidArgument(std::string("group_order: rank too small for ") + family_tag(family));
  }
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return Natural::power(2, rank) * factorial(rank);
    case Family::D: return Natural::power(2, rank - 1) * factorial(rank);
  }
  throw InvalidArgument("group_order: unknown family");
}

Natural parabolic_order(const ParabolicType& pt) {
  Natural out(1);
  for (const Factor& f : pt) out *= group_order(f.family, f.rank);
  return out;
}

std::vector<std::uint64_t> bracket_degrees(Family family, std::size_t rank) {
  if (rank < min_rank(family)) {
    throw InvalidArgument(std::string("bracket_degrees: rank too small for ") + family_tag(family));
  }
  std::vector<std::uint64_t> out;
  switch (family) {
    case Family::A:
      for (std::size_t i = 2; i <= rank + 1; ++i) out.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (std::size_t i = 1; i <= rank; ++i) out.push_back(2 * i);
      break;
    case Family::D:
      out.push_back(rank);
      for (std::size_t i = 1; i + 1 <= rank; ++i) out.push_back(2 * i);
      break;
  }
  return out;
}

IntPolynomial poincare_closed(Family family, std::size_t rank) {
  IntPolynomial out = IntPolynomial::one();
  for (std::uint64_t d : bracket_degrees(family, rank)) out = mul_gauss_bracket(out, d);
  return out;
}

IntPolynomial poincare_parabolic(const ParabolicType& pt) {
  IntPolynomial out = IntPolynomial::one();
  for (const Factor& f : pt) out = poly_mul(out, poincare_closed(f.family, f.rank));
  return out;
}

NodeRemovalSet distribution_removal(std::uint64_t n, const ProbVec& p) {
  const std::vector<std::uint64_t> counts = p.counts(n);
  std::vector<std::size_t> removed;
  std::uint64_t partial = 0;
  for (std::size_t i = 0; i + 1 < counts.size(); ++i) {
    partial += counts[i];
    removed.push_back(static_cast<std::size_t>(partial));
  }
  return NodeRemovalSet(std::move(removed));
}

DistributionParabolic parabolic_for_distribution(Family family, std::uint64_t n, const ProbVec& p) {
  if (n < min_rank(family) + 1) {
    throw InvalidArgument(std::string("n = ") + std::to_string(n) + " too small for family " + family_tag(family));
  }
  Diagram diagram(family, static_cast<std::size_t>(n - 1));
  NodeRemovalSet removal = distribution_removal(n, p);
  ParabolicType type = remove_nodes(diagram, removal);
  return {diagram, std::move(removal), std::move(type)};
}

}  // namespace orbent
