#include "orbent/oracle.hpp"

#include <map>
#include <set>
#include <string>

#include "orbent/errors.hpp"
#include "orbent/symplectic.hpp"

namespace orbent::oracle {

namespace {

void require_half_dimension(std::uint64_t n) {
  if (n > kMaxHalfDimension) {
    throw InvalidArgument("oracle: half-dimension n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxHalfDimension));
  }
}

// ---------------------------------------------------------------------------
// Root systems in their standard integer realizations.

using IntVector = std::vector<int>;
using IntMatrix = std::vector<int>;  // row-major dim x dim

struct RootDatum {
  std::size_t dim;
  std::vector<IntVector> simple;
  std::vector<IntVector> positive;
};

IntVector unit(std::size_t dim, std::size_t i, int scale = 1) {
  IntVector v(dim, 0);
  v[i] = scale;
  return v;
}

IntVector combine(std::size_t dim, std::size_t i, int a, std::size_t j, int b) {
  IntVector v(dim, 0);
  v[i] += a;
  v[j] += b;
  return v;
}

RootDatum root_datum(Family family, std::size_t rank) {
  if (rank > kMaxCensusRank) {
    throw InvalidArgument("oracle: census rank " + std::to_string(rank) + " exceeds cap " +
                          std::to_string(kMaxCensusRank));
  }
  (void)Diagram(family, rank);  // validates the minimum rank

  RootDatum rd;
  rd.dim = family == Family::A ? rank + 1 : rank;
  const std::size_t d = rd.dim;
  const std::size_t chain = family == Family::A ? rank : rank - 1;
  for (std::size_t i = 0; i < chain; ++i) rd.simple.push_back(combine(d, i, 1, i + 1, -1));
  switch (family) {
    case Family::A: break;
    case Family::B: rd.simple.push_back(unit(d, rank - 1)); break;
    case Family::C: rd.simple.push_back(unit(d, rank - 1, 2)); break;
    case Family::D: rd.simple.push_back(combine(d, rank - 2, 1, rank - 1, 1)); break;
  }

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      rd.positive.push_back(combine(d, i, 1, j, -1));
      if (family != Family::A) rd.positive.push_back(combine(d, i, 1, j, 1));
    }
    if (family == Family::B) rd.positive.push_back(unit(d, i));
    if (family == Family::C) rd.positive.push_back(unit(d, i, 2));
  }
  return rd;
}

// s_a(x) = x - 2 (x, a) / (a, a) a as an integer matrix.
IntMatrix reflection_matrix(const IntVector& a) {
  const std::size_t d = a.size();
  int norm = 0;
  for (int x : a) norm += x * x;
  IntMatrix m(d * d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const int num = 2 * a[r] * a[c];
      if (num % norm != 0) throw InvariantViolation("oracle: non-integral reflection matrix");
      m[r * d + c] = (r == c ? 1 : 0) - num / norm;
    }
  }
  return m;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y, std::size_t d) {
  IntMatrix out(d * d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const int v = x[r * d + k];
      if (v == 0) continue;
      for (std::size_t c = 0; c < d; ++c) out[r * d + c] += v * y[k * d + c];
    }
  }
  return out;
}

bool lex_negative(const IntVector& v) {
  for (int x : v) {
    if (x != 0) return x < 0;
  }
  return false;
}

std::size_t length(const IntMatrix& g, const RootDatum& rd) {
  const std::size_t d = rd.dim;
  std::size_t count = 0;
  IntVector image(d);
  for (const IntVector& root : rd.positive) {
    for (std::size_t r = 0; r < d; ++r) {
      int acc = 0;
      for (std::size_t c = 0; c < d; ++c) acc += g[r * d + c] * root[c];
      image[r] = acc;
    }
    if (lex_negative(image)) ++count;
  }
  return count;
}

IntPolynomial census(Family family, std::size_t rank, const std::vector<std::size_t>& generator_nodes) {
  const RootDatum rd = root_datum(family, rank);
  const std::size_t d = rd.dim;
  const Natural cap = group_order(family, rank);

  std::vector<IntMatrix> generators;
  for (std::size_t node : generator_nodes) generators.push_back(reflection_matrix(rd.simple[node - 1]));

  IntMatrix identity(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) identity[i * d + i] = 1;

  std::set<IntMatrix> seen{identity};
  std::vector<IntMatrix> frontier{identity};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const IntMatrix& g : frontier) {
      for (const IntMatrix& s : generators) {
        IntMatrix h = multiply(s, g, d);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    if (Natural(seen.size()) > cap) throw InvariantViolation("oracle: group closure exceeded the expected order");
    frontier = std::move(next);
  }

  std::vector<mpz_class> coeffs(rd.positive.size() + 1);
  for (const IntMatrix& g : seen) coeffs[length(g, rd)] += 1;
  return IntPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Finite-field helpers.

using Vec = std::vector<FieldElement>;

// Calls visit(m) for every s x d matrix in reduced row-echelon form of rank s.
void for_each_rref(std::size_t s, std::size_t d, const PrimeField& f, const std::function<void(const SmallMatrix&)>& visit) {
  std::vector<std::size_t> pivots(s);
  const std::uint64_t q = f.order();

  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t row, std::size_t from) {
    if (row == s) {
      // Free entries: row r, columns after its pivot that are not pivots.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
      for (std::size_t r = 0; r < s; ++r) {
        for (std::size_t c = pivots[r] + 1; c < d; ++c) {
          if (!pivot_set.count(c)) free.emplace_back(r, c);
        }
      }
      SmallMatrix m(s, d);
      for (std::size_t r = 0; r < s; ++r) m.at(r, pivots[r]) = 1;
      std::vector<FieldElement> digits(free.size(), 0);
      while (true) {
        for (std::size_t i = 0; i < free.size(); ++i) m.at(free[i].first, free[i].second) = digits[i];
        visit(m);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
        if (i == digits.size()) break;
      }
      return;
    }
    for (std::size_t c = from; c + (s - row) <= d; ++c) {
      pivots[row] = c;
      choose(row + 1, c + 1);
    }
  };
  choose(0, 0);
}

bool is_isotropic(const SmallMatrix& basis, const PrimeField& f) {
  const std::size_t d = basis.cols();
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = i + 1; j < basis.rows(); ++j) {
      Vec u(d), v(d);
      for (std::size_t c = 0; c < d; ++c) {
        u[c] = basis.at(i, c);
        v[c] = basis.at(j, c);
      }
      if (symplectic_form(f, u, v) != 0) return false;
    }
  }
  return true;
}

bool contained_in(const SmallMatrix& small, const SmallMatrix& big, const PrimeField& f) {
  return SmallMatrix::stack(small, big).rank(f) == big.rows();
}

}  // namespace

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (q != 2 && q != 3) throw InvalidArgument("oracle: only the prime fields F_2 and F_3 are supported, got q = " + std::to_string(q));
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a % q_ == 0) throw InvalidArgument("oracle: zero has no inverse");
  // x^2 = 1 for every nonzero x in F_2 and F_3.
  return static_cast<FieldElement>(a % q_);
}

SmallMatrix::SmallMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

SmallMatrix SmallMatrix::rref(const PrimeField& f) const {
  SmallMatrix m = *this;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
    std::size_t pivot = lead_row;
    while (pivot < rows_ && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(m.at(pivot, k), m.at(lead_row, k));
    const FieldElement inv = f.inv(m.at(lead_row, c));
    for (std::size_t k = 0; k < cols_; ++k) m.at(lead_row, k) = f.mul(m.at(lead_row, k), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row || m.at(r, c) == 0) continue;
      const FieldElement factor = m.at(r, c);
      for (std::size_t k = 0; k < cols_; ++k) m.at(r, k) = f.sub(m.at(r, k), f.mul(factor, m.at(lead_row, k)));
    }
    ++lead_row;
  }
  SmallMatrix out(lead_row, cols_);
  for (std::size_t r = 0; r < lead_row; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) out.at(r, k) = m.at(r, k);
  }
  return out;
}

SmallMatrix SmallMatrix::stack(const SmallMatrix& top, const SmallMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw InvalidArgument("oracle: column mismatch in stack");
  SmallMatrix out(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return out;
}

FieldElement symplectic_form(const PrimeField& f, std::span<const FieldElement> u, std::span<const FieldElement> v) {
  if (u.size() != v.size() || u.size() % 2 != 0) throw InvalidArgument("oracle: symplectic form needs equal even lengths");
  const std::size_t n = u.size() / 2;
  FieldElement acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc = f.sub(acc, f.mul(u[i], v[n + i]));
    acc = f.add(acc, f.mul(u[n + i], v[i]));
  }
  return acc;
}

Natural count_type_class(std::uint64_t n, std::span<const std::uint64_t> counts) {
  if (n > kMaxWordLength) throw InvalidArgument("oracle: word length " + std::to_string(n) + " exceeds cap");
  const std::size_t k = counts.size();
  if (k == 0) throw InvalidArgument("oracle: need at least one symbol");
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  if (total != n) throw InvalidArgument("oracle: symbol counts must sum to n");
  std::uint64_t space = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    space *= k;
    if (space > kMaxWordSpace) throw InvalidArgument("oracle: k^n exceeds the word-space cap");
  }

  std::vector<std::size_t> word(n, 0);
  std::uint64_t matches = 0;
  std::vector<std::uint64_t> seen(k);
  for (std::uint64_t w = 0; w < space; ++w) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t symbol : word) ++seen[symbol];
    if (std::equal(seen.begin(), seen.end(), counts.begin())) ++matches;
    std::size_t i = 0;
    while (i < n && ++word[i] == k) word[i++] = 0;
  }
  return Natural(matches);
}

IntPolynomial reflection_length_census(Family family, std::size_t rank) {
  std::vector<std::size_t> nodes;
  for (std::size_t i = 1; i <= rank; ++i) nodes.push_back(i);
  return census(family, rank, nodes);
}

IntPolynomial parabolic_length_census(Family family, std::size_t rank, const NodeRemovalSet& removal) {
  if (!removal.empty() && removal.nodes().back() > rank) throw InvalidArgument("oracle: removal index out of range");
  std::vector<std::size_t> nodes;
  for (std::size_t i = 1; i <= rank; ++i) {
    if (!removal.contains(i)) nodes.push_back(i);
  }
  return census(family, rank, nodes);
}

Natural enumerate_general_linear(std::uint64_t m, std::uint64_t q) {
  const PrimeField f(q);
  std::uint64_t space = 1;
  for (std::uint64_t i = 0; i < m * m; ++i) {
    space *= q;
    if (space > kMaxGeneralLinearSpace) throw InvalidArgument("oracle: q^(m^2) exceeds the enumeration cap");
  }
  SmallMatrix g(m, m);
  std::vector<FieldElement> digits(m * m, 0);
  std::uint64_t invertible = 0;
  for (std::uint64_t w = 0; w < space; ++w) {
    for (std::size_t i = 0; i < digits.size(); ++i) g.at(i / m, i % m) = digits[i];
    if (g.rank(f) == m) ++invertible;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
  }
  return Natural(invertible);
}

Natural enumerate_subspaces(std::uint64_t s, std::uint64_t d, std::uint64_t q) {
  if (d > 2 * kMaxHalfDimension + 2) throw InvalidArgument("oracle: ambient dimension exceeds cap");
  if (s > d) throw InvalidArgument("oracle: subspace dimension exceeds ambient dimension");
  const PrimeField f(q);
  std::uint64_t count = 0;
  for_each_rref(s, d, f, [&](const SmallMatrix&) { ++count; });
  return Natural(count);
}

std::vector<SmallMatrix> isotropic_subspaces(std::uint64_t s, std::uint64_t n, std::uint64_t q) {
  require_half_dimension(n);
  if (s > 2 * n) throw InvalidArgument("oracle: subspace dimension exceeds ambient dimension");
  const PrimeField f(q);
  std::vector<SmallMatrix> out;
  for_each_rref(s, 2 * n, f, [&](const SmallMatrix& m) {
    if (is_isotropic(m, f)) out.push_back(m);
  });
  return out;
}

Natural enumerate_isotropic_subspaces(std::uint64_t s, std::uint64_t n, std::uint64_t q) {
  return Natural(isotropic_subspaces(s, n, q).size());
}

Natural enumerate_isotropic_flags(std::span<const std::uint64_t> increments, std::uint64_t n, std::uint64_t q) {
  require_half_dimension(n);
  const PrimeField f(q);
  std::uint64_t dim = 0;
  std::vector<SmallMatrix> level{SmallMatrix(0, 2 * n)};
  std::vector<Natural> ways{Natural(1)};
  for (std::uint64_t m : increments) {
    if (m == 0) throw InvalidArgument("oracle: flag increments must be positive");
    dim += m;
    if (dim > 2 * n) throw InvalidArgument("oracle: flag exceeds ambient dimension");
    std::vector<SmallMatrix> next = isotropic_subspaces(dim, n, q);
    std::vector<Natural> next_ways(next.size(), Natural(0));
    for (std::size_t b = 0; b < next.size(); ++b) {
      for (std::size_t a = 0; a < level.size(); ++a) {
        if (contained_in(level[a], next[b], f)) next_ways[b] += ways[a];
      }
    }
    level = std::move(next);
    ways = std::move(next_ways);
  }
  Natural total(0);
  for (const Natural& w : ways) total += w;
  return total;
}

void for_each_symplectic(std::uint64_t n, std::uint64_t q,
                         const std::function<void(const std::vector<std::vector<FieldElement>>&)>& visit) {
  require_half_dimension(n);
  const PrimeField f(q);
  const std::size_t d = 2 * n;

  std::vector<Vec> candidates;
  {
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < d; ++i) space *= q;
    Vec v(d, 0);
    for (std::uint64_t w = 0; w < space; ++w) {
      candidates.push_back(v);
      std::size_t i = 0;
      while (i < d && ++v[i] == q) v[i++] = 0;
    }
  }
  // Target Gram matrix J: J(i, n+i) = -1, J(n+i, i) = 1.
  auto gram = [&](std::size_t i, std::size_t j) -> FieldElement {
    if (j == i + n && i < n) return f.neg(1);
    if (i == j + n && j < n) return 1;
    return 0;
  };

  std::vector<Vec> columns(d);
  std::function<void(std::size_t)> extend = [&](std::size_t col) {
    if (col == d) {
      visit(columns);
      return;
    }
    for (const Vec& c : candidates) {
      bool ok = true;
      for (std::size_t prev = 0; prev < col && ok; ++prev) ok = symplectic_form(f, columns[prev], c) == gram(prev, col);
      if (!ok) continue;
      columns[col] = c;
      extend(col + 1);
    }
  };
  extend(0);
}

Natural enumerate_symplectic_group(std::uint64_t n, std::uint64_t q) {
  std::uint64_t count = 0;
  for_each_symplectic(n, q, [&](const std::vector<Vec>&) { ++count; });
  return Natural(count);
}

OrbitStabilizerReport stabilizer_and_orbit_check(std::uint64_t s, std::uint64_t n, std::uint64_t q) {
  require_half_dimension(n);
  if (s > n) throw InvalidArgument("oracle: isotropic dimension exceeds n");
  const PrimeField f(q);
  const std::size_t d = 2 * n;

  SmallMatrix standard(s, d);
  for (std::size_t i = 0; i < s; ++i) standard.at(i, i) = 1;

  std::set<SmallMatrix> orbit;
  std::uint64_t stabilizer = 0;
  std::uint64_t group = 0;
  for_each_symplectic(n, q, [&](const std::vector<Vec>& columns) {
    ++group;
    SmallMatrix image(s, d);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t r = 0; r < d; ++r) image.at(i, r) = columns[i][r];
    }
    SmallMatrix canonical = image.rref(f);
    if (canonical == standard) ++stabilizer;
    orbit.insert(std::move(canonical));
  });

  OrbitStabilizerReport report{false,
                               Natural(orbit.size()),
                               Natural(stabilizer),
                               Natural(group),
                               ig_count(s, n, q),
                               unipotent_radical_order(s, n, q) * gl_order(s, q) * sp_order(n - s, q),
                               sp_order(n, q)};
  report.ok = report.orbit == report.expected_orbit && report.stabilizer * report.orbit == report.group &&
              report.stabilizer == report.expected_stabilizer && report.group == report.expected_group;
  return report;
}

}  // namespace orbent::oracle
