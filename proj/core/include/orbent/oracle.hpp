#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "orbent/dynkin.hpp"
#include "orbent/natural.hpp"
#include "orbent/polynomial.hpp"

// Brute-force validators. Closed-form counts never feed the enumerations;
// they only bound group closure and supply the values reports compare against.
namespace orbent::oracle {

inline constexpr std::uint64_t kMaxWordLength = 10;
inline constexpr std::uint64_t kMaxWordSpace = std::uint64_t{1} << 24;
inline constexpr std::size_t kMaxCensusRank = 4;
inline constexpr std::uint64_t kMaxHalfDimension = 2;
inline constexpr std::uint64_t kMaxGeneralLinearSpace = std::uint64_t{1} << 20;

using FieldElement = std::uint8_t;

/// Arithmetic in F_q for prime q in {2, 3}.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t q);

  std::uint64_t order() const { return q_; }
  FieldElement add(FieldElement a, FieldElement b) const { return static_cast<FieldElement>((a + b) % q_); }
  FieldElement sub(FieldElement a, FieldElement b) const { return static_cast<FieldElement>((a + q_ - b) % q_); }
  FieldElement mul(FieldElement a, FieldElement b) const { return static_cast<FieldElement>((a * b) % q_); }
  FieldElement neg(FieldElement a) const { return static_cast<FieldElement>((q_ - a) % q_); }
  /// Throws InvalidArgument for 0.
  FieldElement inv(FieldElement a) const;

 private:
  std::uint64_t q_;
};

/// Dense row-major matrix over a small prime field.
class SmallMatrix {
 public:
  SmallMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row-echelon form with zero rows dropped; the canonical basis of
  /// the row space.
  SmallMatrix rref(const PrimeField& f) const;
  std::size_t rank(const PrimeField& f) const { return rref(f).rows(); }

  /// Rows of `top` followed by rows of `bottom`.
  static SmallMatrix stack(const SmallMatrix& top, const SmallMatrix& bottom);

  friend bool operator==(const SmallMatrix&, const SmallMatrix&) = default;
  friend auto operator<=>(const SmallMatrix&, const SmallMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// Standard alternating form u^T J v on F_q^(2n), J = [[0, -1], [1, 0]].
FieldElement symplectic_form(const PrimeField& f, std::span<const FieldElement> u, std::span<const FieldElement> v);

/// Words of length n over k = counts.size() symbols with the given symbol
/// counts, by enumerating all k^n words. n <= 10 and k^n <= 2^24.
Natural count_type_class(std::uint64_t n, std::span<const std::uint64_t> counts);

/// sum_g t^l(g) over the group generated by the simple reflections of
/// `family` (A, B, C or D) of rank <= 4, where l(g) counts positive roots sent
/// to negative roots.
IntPolynomial reflection_length_census(Family family, std::size_t rank);

/// The same census over the subgroup generated by the simple reflections
/// that survive `removal`; lengths are measured in the ambient group.
IntPolynomial parabolic_length_census(Family family, std::size_t rank, const NodeRemovalSet& removal);

/// Invertible m x m matrices over F_q, q in {2, 3}, q^(m^2) <= 2^20.
Natural enumerate_general_linear(std::uint64_t m, std::uint64_t q);

/// Number of s-dimensional subspaces of F_q^d (d <= 6), one canonical
/// row-reduced basis each.
Natural enumerate_subspaces(std::uint64_t s, std::uint64_t d, std::uint64_t q);

/// All s-dimensional subspaces of F_q^(2n) in canonical form, filtered for
/// total isotropy. n <= 2, q in {2, 3}.
std::vector<SmallMatrix> isotropic_subspaces(std::uint64_t s, std::uint64_t n, std::uint64_t q);
Natural enumerate_isotropic_subspaces(std::uint64_t s, std::uint64_t n, std::uint64_t q);

/// Chains of isotropic subspaces with the given dimension increments.
Natural enumerate_isotropic_flags(std::span<const std::uint64_t> increments, std::uint64_t n, std::uint64_t q);

/// Calls `visit` with the columns of every g in Sp_2n(F_q) (g^T J g = J),
/// found by column-wise backtracking. n <= 2, q in {2, 3}.
void for_each_symplectic(std::uint64_t n, std::uint64_t q,
                         const std::function<void(const std::vector<std::vector<FieldElement>>&)>& visit);
Natural enumerate_symplectic_group(std::uint64_t n, std::uint64_t q);

struct OrbitStabilizerReport {
  bool ok;
  Natural orbit;
  Natural stabilizer;
  Natural group;
  Natural expected_orbit;       // ig_count(s, n, q)
  Natural expected_stabilizer;  // |N| |GL_s| |Sp_2(n-s)|
  Natural expected_group;       // sp_order(n, q)
};

/// Orbit and stabilizer of span(e_1, ..., e_s) under the enumerated Sp_2n(F_q).
OrbitStabilizerReport stabilizer_and_orbit_check(std::uint64_t s, std::uint64_t n, std::uint64_t q = 2);

}  // namespace orbent::oracle
