#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbent/natural.hpp"
#include "orbent/rational.hpp"

namespace orbent {

/// Probability vector (p_1, ..., p_k) with strictly positive rational entries
/// summing to exactly 1.
///
/// Entry order matters: the reflective and symplectic entropies single out
/// the last coordinate p_k, so nothing in the library ever reorders a ProbVec.
/// Zero-probability symbols must be dropped by the caller before
/// construction.
class ProbVec {
 public:
  /// Throws InvalidArgument for an empty list, a nonpositive entry, or a sum
  /// different from 1.
  explicit ProbVec(std::vector<Rational> probs);

  /// Parses "a1/d1,a2/d2,..." (integers allowed, e.g. "1"). Decimal input is
  /// rejected with a hint. Every failure, including an invalid distribution,
  /// throws ParseError.
  static ProbVec parse(std::string_view text);

  static ProbVec uniform(std::size_t k);

  std::size_t size() const { return probs_.size(); }
  const Rational& operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<Rational>& probs() const { return probs_; }
  const Rational& last() const { return probs_.back(); }

  /// Least common denominator; N_P is the set of its positive multiples.
  const Natural& denominator() const { return denominator_; }

  /// True when n * p_i is an integer for every i.
  bool admits(std::uint64_t n) const;

  /// (n p_1, ..., n p_k). Throws InvalidArgument when some n p_i is not
  /// an integer.
  std::vector<std::uint64_t> counts(std::uint64_t n) const;

  /// Canonical "a/b,c/d" rendering with reduced fractions.
  std::string to_string() const;

  friend bool operator==(const ProbVec& a, const ProbVec& b) { return a.probs_ == b.probs_; }

 private:
  std::vector<Rational> probs_;
  Natural denominator_{1};
};

/// An increasing surjection {1..k} -> {1..m}, stored as ordered block sizes
/// (b_1, ..., b_m) with sum k. Block j covers the consecutive indices
/// b_1 + ... + b_(j-1) + 1 through b_1 + ... + b_j.
class CoarseMap {
 public:
  /// Throws InvalidArgument on an empty list or a zero block.
  explicit CoarseMap(std::vector<std::size_t> blocks);

  /// Parses "2,1". Throws ParseError.
  static CoarseMap parse(std::string_view text);
  static CoarseMap identity(std::size_t k);

  const std::vector<std::size_t>& blocks() const { return blocks_; }
  std::size_t domain_size() const { return domain_size_; }
  std::size_t codomain_size() const { return blocks_.size(); }
  /// Zero-based index of the first element of zero-based block j.
  std::size_t block_begin(std::size_t j) const;
  std::size_t block_size(std::size_t j) const { return blocks_.at(j); }
  bool is_identity() const;

  /// second o first. Requires first.codomain_size() == second.domain_size().
  static CoarseMap compose(const CoarseMap& first, const CoarseMap& second);

  std::string to_string() const;

  friend bool operator==(const CoarseMap&, const CoarseMap&) = default;

 private:
  std::vector<std::size_t> blocks_;
  std::size_t domain_size_ = 0;
};

}  // namespace orbent
