#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "orbent/dynkin.hpp"
#include "orbent/entropy.hpp"
#include "orbent/errors.hpp"
#include "orbent/exact.hpp"
#include "orbent/oracle.hpp"
#include "orbent/reflection.hpp"

using namespace orbent;
using orbent::testing::Rng;

namespace {

constexpr Family kFamilies[] = {Family::A, Family::B, Family::C, Family::D};

// Smallest multiple of the denominator that gives the family a valid rank.
std::uint64_t smallest_admissible(Family f, const ProbVec& p) {
  const std::uint64_t d = p.denominator().to_u64();
  std::uint64_t n = d;
  while (n < min_rank(f) + 1) n += d;
  return n;
}

}  // namespace

TEST_CASE("orbit_count examples") {
  CHECK(orbit_count(Family::A, 4, ProbVec::parse("1/2,1/2")) == Natural(6));
  CHECK(orbit_count(Family::B, 8, ProbVec::parse("1/2,1/2")) == Natural(560));
  for (std::uint64_t n = 2; n <= 20; ++n) CHECK(orbit_count(Family::B, n, ProbVec::parse("1")) == Natural(1));
  CHECK(orbit_count(Family::B, 12, ProbVec::parse("1/3,1/3,1/3")) == Natural(2956800));
  CHECK_THROWS_AS(orbit_count(Family::A, 5, ProbVec::parse("1/2,1/2")), InvalidArgument);
}

TEST_CASE("orbit_poincare examples") {
  CHECK(orbit_poincare(Family::A, 2, ProbVec::parse("1/2,1/2")) == IntPolynomial{1, 1});
  const IntPolynomial p = orbit_poincare(Family::A, 4, ProbVec::parse("1/2,1/2"));
  CHECK(p == IntPolynomial{1, 1, 2, 1, 1});
  CHECK(poly_eval(p, Natural(1)) == Natural(6));
  CHECK(orbit_poincare(Family::B, 8, ProbVec::parse("1")) == IntPolynomial::one());
}

TEST_CASE("normalized_log_orbit examples") {
  CHECK(normalized_log_orbit(Family::A, 4, ProbVec::parse("1/2,1/2")) == doctest::Approx(0.44793986730701374).epsilon(1e-13));
  CHECK(normalized_log_orbit(Family::B, 8, ProbVec::parse("1/2,1/2")) == doctest::Approx(0.7909920979661493).epsilon(1e-13));
  CHECK(normalized_log_orbit(Family::B, 9, ProbVec::parse("1")) == 0.0);
}

TEST_CASE("orbit_poincare has nonnegative coefficients and evaluates to orbit_count") {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const Family f = kFamilies[trial % 4];
    const ProbVec p = orbent::testing::random_probvec(rng, 8, 4);
    std::uint64_t n = smallest_admissible(f, p);
    n *= orbent::testing::uniform_int(rng, 1, 3);
    CAPTURE(p.to_string());
    CAPTURE(n);
    const IntPolynomial poly = orbit_poincare(f, n, p);
    CHECK(poly.has_nonnegative_coeffs());
    CHECK(poly_eval(poly, Natural(1)) == orbit_count(f, n, p));
  }
}

TEST_CASE("parabolic order divides the group order") {
  Rng rng(12);
  for (int trial = 0; trial < 400; ++trial) {
    const Family f = kFamilies[trial % 4];
    const ProbVec p = orbent::testing::random_probvec(rng, 10, 5);
    const std::uint64_t d = p.denominator().to_u64();
    for (std::uint64_t n = smallest_admissible(f, p); n <= 40; n += d) {
      const auto dp = parabolic_for_distribution(f, n, p);
      REQUIRE(group_order(f, n - 1).divisible_by(parabolic_order(dp.type)));
    }
  }
}

TEST_CASE("family A orbit count is the multinomial") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const ProbVec p = orbent::testing::random_probvec(rng, 10, 5);
    const std::uint64_t d = p.denominator().to_u64();
    for (std::uint64_t n = smallest_admissible(Family::A, p); n <= 40; n += d) {
      const auto counts = p.counts(n);
      REQUIRE(orbit_count(Family::A, n, p) == multinomial(n, counts));
    }
  }
}

TEST_CASE("families B and C share orbit counts") {
  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const ProbVec p = orbent::testing::random_probvec(rng, 10, 5);
    const std::uint64_t d = p.denominator().to_u64();
    for (std::uint64_t n = smallest_admissible(Family::B, p); n <= 40; n += d) {
      REQUIRE(orbit_count(Family::B, n, p) == orbit_count(Family::C, n, p));
      REQUIRE(orbit_poincare(Family::B, n, p) == orbit_poincare(Family::C, n, p));
    }
  }
}

TEST_CASE("ratio of B to D orbit counts") {
  // Both the full group and the last parabolic factor lose a factor 2 in D,
  // so the ratio is 1 once the last block has at least 3 nodes. With a last
  // block of 1 the D parabolic has no D factor left and the ratio is 2. With
  // a last block of 2, the fork joins node rank to the preceding A segment.
  Rng rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const ProbVec p = orbent::testing::random_probvec(rng, 10, 4);
    const std::uint64_t d = p.denominator().to_u64();
    for (std::uint64_t n = smallest_admissible(Family::D, p); n <= 40; n += d) {
      const auto counts = p.counts(n);
      const Natural b = orbit_count(Family::B, n, p);
      const Natural dd = orbit_count(Family::D, n, p);
      CAPTURE(p.to_string());
      CAPTURE(n);
      const std::uint64_t last = counts.back();
      if (last >= 3) {
        REQUIRE(b == dd);
      } else if (last == 1) {
        REQUIRE(b == dd * Natural(2));
      } else {
        const std::uint64_t before = counts.size() >= 2 ? counts[counts.size() - 2] : 0;
        REQUIRE(b == dd * Natural(before + 1));
      }
    }
  }
}

TEST_CASE("D orbit counts agree with the brute-force census at small rank") {
  for (std::uint64_t n = 3; n <= oracle::kMaxCensusRank + 1; ++n) {
    for (std::uint64_t first = 1; first < n; ++first) {
      std::vector<Rational> probs{Rational(static_cast<std::int64_t>(first), static_cast<std::int64_t>(n)),
                                  Rational(static_cast<std::int64_t>(n - first), static_cast<std::int64_t>(n))};
      const ProbVec p(std::move(probs));
      const auto dp = parabolic_for_distribution(Family::D, n, p);
      const IntPolynomial full = oracle::reflection_length_census(Family::D, n - 1);
      const IntPolynomial sub = oracle::parabolic_length_census(Family::D, n - 1, dp.removal);
      CAPTURE(n);
      CAPTURE(first);
      CHECK(poly_div_exact(full, sub) == orbit_poincare(Family::D, n, p));
    }
  }
}

TEST_CASE("coarsening examples") {
  SUBCASE("multinomial chain rule") {
    const auto r = coarsening_cardinality_check(Family::A, 6, ProbVec::parse("1/6,2/6,3/6"), CoarseMap::parse("2,1"));
    CHECK(r.equal);
    CHECK(r.lhs == Natural(60));
    CHECK(r.rhs == Natural(60));
    CHECK(coarsening_poincare_check(Family::A, 6, ProbVec::parse("1/6,2/6,3/6"), CoarseMap::parse("2,1")).zero);
  }
  SUBCASE("B, 12, thirds") {
    const auto r = coarsening_cardinality_check(Family::B, 12, ProbVec::parse("1/3,1/3,1/3"), CoarseMap::parse("2,1"));
    CHECK(r.equal);
    CHECK(r.lhs == Natural(2956800));
  }
  SUBCASE("D, 12") {
    const auto r = coarsening_poincare_check(Family::D, 12, ProbVec::parse("1/6,1/6,2/3"), CoarseMap::parse("2,1"));
    CHECK(r.zero);
    CHECK(r.difference.is_zero());
  }
  SUBCASE("identity map") {
    for (Family f : kFamilies) {
      const ProbVec p = ProbVec::parse("1/4,1/4,1/2");
      CHECK(coarsening_cardinality_check(f, 8, p, CoarseMap::identity(3)).equal);
      CHECK(coarsening_poincare_check(f, 8, p, CoarseMap::identity(3)).zero);
    }
  }
  SUBCASE("non-nested removal sets") {
    const Diagram d(Family::B, 6);
    CHECK_THROWS_AS(coarsening_cardinality_check(d, NodeRemovalSet({2}), NodeRemovalSet({3})), InvalidArgument);
    CHECK_THROWS_AS(coarsening_poincare_check(d, NodeRemovalSet({2, 4}), NodeRemovalSet({1, 4})), InvalidArgument);
  }
}

TEST_CASE("coarsening identity over raw nested removal sets") {
  for (Family f : kFamilies) {
    for (std::size_t r = min_rank(f); r <= 6; ++r) {
      const Diagram d(f, r);
      for (std::uint32_t fine = 0; fine < (1u << r); ++fine) {
        for (std::uint32_t coarse = fine;; coarse = (coarse - 1) & fine) {
          std::vector<std::size_t> fn, cn;
          for (std::size_t i = 0; i < r; ++i) {
            if (fine & (1u << i)) fn.push_back(i + 1);
            if (coarse & (1u << i)) cn.push_back(i + 1);
          }
          const NodeRemovalSet fs(fn), cs(cn);
          REQUIRE(coarsening_cardinality_check(d, fs, cs).equal);
          REQUIRE(coarsening_poincare_check(d, fs, cs).zero);
          if (coarse == 0) break;
        }
      }
    }
  }
}

TEST_CASE("coarsening identity on random instances") {
  Rng rng(16);
  int checked = 0;
  while (checked < 200) {
    const Family f = kFamilies[checked % 4];
    const ProbVec p = orbent::testing::random_probvec(rng, 9, 5, 2);
    std::uint64_t n = smallest_admissible(f, p);
    const std::uint64_t max_mult = 36 / n;
    if (max_mult == 0) continue;
    n *= orbent::testing::uniform_int(rng, 1, max_mult);
    const CoarseMap pi = orbent::testing::random_coarse_map(rng, p.size());
    CAPTURE(family_tag(f));
    CAPTURE(n);
    CAPTURE(p.to_string());
    CAPTURE(pi.to_string());
    const auto card = coarsening_cardinality_check(f, n, p, pi);
    CHECK(card.equal);
    CHECK(card.lhs == orbit_count(f, n, p));
    CHECK(coarsening_poincare_check(f, n, p, pi).zero);
    ++checked;
  }
}

TEST_CASE("normalized log orbit approaches the reflective entropy") {
  for (const char* dist : {"1/2,1/2", "1/4,1/4,1/2", "1/3,1/3,1/3"}) {
    const ProbVec p = ProbVec::parse(dist);
    const double limit = reflective(p);
    double prev = INFINITY;
    for (std::uint64_t n = 12 * p.denominator().to_u64(); n <= 3072; n *= 2) {
      const double err = std::abs(normalized_log_orbit(Family::B, n, p) - limit);
      CAPTURE(dist);
      CAPTURE(n);
      CHECK(err < prev);
      prev = err;
    }
    CHECK(prev < 5e-3);
  }
}
