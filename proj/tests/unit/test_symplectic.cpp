#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "orbent/entropy.hpp"
#include "orbent/errors.hpp"
#include "orbent/exact.hpp"
#include "orbent/oracle.hpp"
#include "orbent/symplectic.hpp"

using namespace orbent;
using orbent::testing::Rng;

TEST_CASE("gl_order") {
  CHECK(gl_order(0, 2) == Natural(1));
  CHECK(gl_order(1, 2) == Natural(1));
  CHECK(gl_order(2, 2) == Natural(6));
  CHECK(gl_order(2, 3) == Natural(48));
  CHECK(gl_order(3, 2) == Natural(168));
  CHECK_THROWS_AS(gl_order(2, 1), InvalidArgument);
}

TEST_CASE("sp_order") {
  CHECK(sp_order(0, 5) == Natural(1));
  CHECK(sp_order(1, 2) == Natural(6));
  CHECK(sp_order(2, 2) == Natural(720));
  CHECK(sp_order(1, 3) == Natural(24));
  // Sp_2 is SL_2.
  for (std::uint64_t q = 2; q <= 16; ++q) CHECK(sp_order(1, q) == Natural(q * (q * q - 1)));
}

TEST_CASE("unipotent_radical_order") {
  for (std::uint64_t n = 0; n <= 5; ++n) CHECK(unipotent_radical_order(0, n, 7) == Natural(1));
  CHECK(unipotent_radical_order(1, 1, 2) == Natural(2));
  CHECK(unipotent_radical_order(1, 2, 2) == Natural(8));
  CHECK(unipotent_radical_order(2, 2, 2) == Natural(8));
  CHECK_THROWS_AS(unipotent_radical_order(3, 2, 2), InvalidArgument);
}

TEST_CASE("ig_count") {
  CHECK(ig_count(1, 1, 2) == Natural(3));
  CHECK(ig_count(2, 2, 2) == Natural(15));
  CHECK(ig_count(1, 2, 3) == Natural(40));
  CHECK(ig_count(0, 4, 3) == Natural(1));
  CHECK_THROWS_AS(ig_count(3, 2, 2), InvalidArgument);
}

TEST_CASE("isotropic_flag_count") {
  CHECK(isotropic_flag_count(FlagType({1, 1}, 2, 2)) == Natural(45));
  CHECK(isotropic_flag_count(FlagType({1}, 1, 3)) == Natural(4));
  CHECK(isotropic_flag_count(FlagType({}, 3, 2)) == Natural(1));
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (std::uint64_t s = 1; s <= n; ++s) CHECK(isotropic_flag_count(FlagType({s}, n, 3)) == ig_count(s, n, 3));
  }
  CHECK_THROWS_AS(FlagType({1, 0}, 3, 2), InvalidArgument);
  CHECK_THROWS_AS(FlagType({2, 2}, 3, 2), InvalidArgument);
  CHECK_THROWS_AS(FlagType({1}, 3, 1), InvalidArgument);
}

TEST_CASE("sp_quotient_closed") {
  CHECK(sp_quotient_closed(2, ProbVec::parse("1/2,1/2"), 2) == Natural(15));
  CHECK(sp_quotient_closed(3, ProbVec::parse("1/3,2/3"), 2) == Natural(63));
  CHECK(sp_quotient_closed(4, ProbVec::parse("1/2,1/2"), 2) == Natural(5355));
  for (std::uint64_t n = 1; n <= 8; ++n) CHECK(sp_quotient_closed(n, ProbVec::parse("1"), 5) == Natural(1));
  CHECK_THROWS_AS(sp_quotient_closed(3, ProbVec::parse("1/2,1/2"), 2), InvalidArgument);
}

TEST_CASE("normalized_logq_quotient") {
  CHECK(normalized_logq_quotient(7, ProbVec::parse("1"), 3) == 0.0);
  CHECK(normalized_logq_quotient(2, ProbVec::parse("1/2,1/2"), 2) == doctest::Approx(0.9767226489021297).epsilon(1e-13));
  CHECK(normalized_logq_quotient(4, ProbVec::parse("1/2,1/2"), 2) == doctest::Approx(0.7741669287273512).epsilon(1e-13));
}

TEST_CASE("normalized log quotient approaches the symplectic entropy") {
  for (const char* dist : {"1/2,1/2", "1/4,1/4,1/2", "1/3,2/3"}) {
    const ProbVec p = ProbVec::parse(dist);
    const double limit = symplectic_entropy(p).to_long_double();
    double prev = INFINITY;
    for (std::uint64_t n = 4 * p.denominator().to_u64(); n <= 768; n *= 2) {
      const double err = std::abs(normalized_logq_quotient(n, p, 2) - limit);
      CAPTURE(dist);
      CAPTURE(n);
      CHECK(err < prev);
      prev = err;
    }
    CHECK(prev < 5e-3);
  }
}

TEST_CASE("parabolic cardinality divides the group order and leaves ig_count") {
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
    for (std::uint64_t n = 0; n <= 30; ++n) {
      const Natural g = sp_order(n, q);
      for (std::uint64_t s = 0; s <= n; ++s) {
        const Natural stab = unipotent_radical_order(s, n, q) * gl_order(s, q) * sp_order(n - s, q);
        REQUIRE(g.divisible_by(stab));
        REQUIRE(g.exact_div(stab) == ig_count(s, n, q));
      }
    }
  }
}

TEST_CASE("Lagrangian and line specializations") {
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    for (std::uint64_t n = 1; n <= 30; ++n) {
      REQUIRE(ig_count(n, n, q) == q_plus_one_product(1, n, q));
      const mpz_class lines = (Natural::power(q, 2 * n).value() - 1) / (q - 1);
      REQUIRE(ig_count(1, n, q).value() == lines);
    }
  }
}

TEST_CASE("sp_quotient_closed equals the flag count on random instances") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const ProbVec p = orbent::testing::random_probvec(rng, 10, 5);
    const std::uint64_t d = p.denominator().to_u64();
    const std::uint64_t n = d * orbent::testing::uniform_int(rng, 1, std::max<std::uint64_t>(1, 30 / d));
    const std::uint64_t q = orbent::testing::uniform_int(rng, 2, 5);
    auto counts = p.counts(n);
    counts.pop_back();
    CAPTURE(p.to_string());
    CAPTURE(n);
    CAPTURE(q);
    REQUIRE(sp_quotient_closed(n, p, q) == isotropic_flag_count(FlagType(counts, n, q)));
  }
}

TEST_CASE("closed forms match enumeration at tiny scale") {
  for (std::uint64_t q : {2, 3}) {
    for (std::uint64_t n = 0; n <= oracle::kMaxHalfDimension; ++n) {
      for (std::uint64_t s = 0; s <= n; ++s) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(s);
        CHECK(oracle::enumerate_isotropic_subspaces(s, n, q) == ig_count(s, n, q));
      }
    }
    const std::vector<std::vector<std::uint64_t>> types{{}, {1}, {2}, {1, 1}};
    for (const auto& inc : types) {
      CHECK(oracle::enumerate_isotropic_flags(inc, 2, q) == isotropic_flag_count(FlagType(inc, 2, q)));
    }
  }
}

TEST_CASE("symplectic chain identity") {
  SUBCASE("identity map") {
    const auto r = symplectic_chain_identity_check(6, ProbVec::parse("1/6,1/3,1/2"), CoarseMap::identity(3), 2);
    CHECK(r.equal);
    CHECK(r.lhs == r.rhs);
  }
  SUBCASE("n = 4, q = 2") {
    const auto r = symplectic_chain_identity_check(4, ProbVec::parse("1/4,1/4,1/2"), CoarseMap::parse("2,1"), 2);
    CHECK(r.equal);
    CHECK(r.lhs == sp_quotient_closed(4, ProbVec::parse("1/4,1/4,1/2"), 2));
  }
  SUBCASE("n = 6, q = 3") {
    CHECK(symplectic_chain_identity_check(6, ProbVec::parse("1/6,1/3,1/2"), CoarseMap::parse("2,1"), 3).equal);
  }
  SUBCASE("random") {
    Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
      const ProbVec p = orbent::testing::random_probvec(rng, 8, 5, 2);
      const std::uint64_t n = p.denominator().to_u64() * orbent::testing::uniform_int(rng, 1, 4);
      const CoarseMap pi = orbent::testing::random_coarse_map(rng, p.size());
      const std::uint64_t q = orbent::testing::uniform_int(rng, 2, 9);
      CAPTURE(p.to_string());
      CAPTURE(pi.to_string());
      REQUIRE(symplectic_chain_identity_check(n, p, pi, q).equal);
    }
  }
}
