#include <cmath>
#include <numbers>

#include "doctest.h"
#include "generators.hpp"
#include "orbent/entropy.hpp"
#include "orbent/errors.hpp"

using namespace orbent;
using orbent::testing::Rng;

namespace {

const double kLn2 = std::numbers::ln2;

ProbVec pv(const char* text) { return ProbVec::parse(text); }

}  // namespace

TEST_CASE("pushforward") {
  CHECK(pushforward(pv("1/2,1/4,1/4"), CoarseMap::parse("2,1")) == pv("3/4,1/4"));
  CHECK(pushforward(pv("1/6,1/3,1/2"), CoarseMap::identity(3)) == pv("1/6,1/3,1/2"));
  CHECK(pushforward(pv("1/6,1/3,1/2"), CoarseMap::parse("3")) == pv("1"));
  CHECK_THROWS_AS(pushforward(pv("1/2,1/2"), CoarseMap::parse("2,1")), InvalidArgument);
}

TEST_CASE("conditional") {
  CHECK(conditional(pv("1/2,1/4,1/4"), CoarseMap::parse("2,1"), 0) == pv("2/3,1/3"));
  CHECK(conditional(pv("1/2,1/4,1/4"), CoarseMap::parse("2,1"), 1) == pv("1"));
  for (std::size_t j = 0; j < 3; ++j) CHECK(conditional(pv("1/6,1/3,1/2"), CoarseMap::identity(3), j) == pv("1"));
  CHECK(conditional(pv("1/3,1/3,1/3"), CoarseMap::parse("3"), 0) == pv("1/3,1/3,1/3"));
  CHECK_THROWS_AS(conditional(pv("1/2,1/2"), CoarseMap::parse("2"), 1), InvalidArgument);
}

TEST_CASE("shannon") {
  CHECK(shannon(pv("1")) == 0.0);
  CHECK(shannon(pv("1/2,1/2")) == doctest::Approx(kLn2).epsilon(1e-14));
  CHECK(shannon(pv("1/2,1/4,1/4")) == doctest::Approx(1.5 * kLn2).epsilon(1e-14));
}

TEST_CASE("shannon of uniform is ln k") {
  for (std::size_t k = 1; k <= 10000; k = k < 50 ? k + 1 : k * 3 / 2) {
    CAPTURE(k);
    REQUIRE(std::abs(shannon(ProbVec::uniform(k)) - std::log(static_cast<double>(k))) < 1e-12);
  }
  REQUIRE(std::abs(shannon(ProbVec::uniform(10000)) - std::log(10000.0)) < 1e-12);
}

TEST_CASE("tsallis2") {
  CHECK(tsallis2(pv("1")) == Rational(0));
  CHECK(tsallis2(pv("1/2,1/2")) == Rational(1, 2));
  for (std::int64_t k = 1; k <= 20; ++k) CHECK(tsallis2(ProbVec::uniform(static_cast<std::size_t>(k))) == Rational(k - 1, k));
}

TEST_CASE("reflective") {
  CHECK(reflective(pv("1")) == 0.0);
  CHECK(reflective(pv("1/2,1/2")) == doctest::Approx(1.5 * kLn2).epsilon(1e-14));
  const double h = -(0.25 * std::log(0.25) + 0.75 * std::log(0.75));
  CHECK(reflective(pv("1/4,3/4")) == doctest::Approx(h + 0.25 * kLn2).epsilon(1e-14));
  // Order matters through the last entry.
  CHECK(reflective(pv("3/4,1/4")) == doctest::Approx(h + 0.75 * kLn2).epsilon(1e-14));
}

TEST_CASE("symplectic_entropy") {
  CHECK(symplectic_entropy(pv("1")) == Rational(0));
  CHECK(symplectic_entropy(pv("1/2,1/2")) == Rational(5, 8));
  CHECK(symplectic_entropy(pv("1/3,1/3,1/3")) == Rational(7, 9));
}

TEST_CASE("chain residual examples") {
  CHECK(shannon_chain_residual(pv("1/6,1/3,1/2"), CoarseMap::identity(3)) == doctest::Approx(0.0));
  CHECK(std::abs(shannon_chain_residual(pv("1/2,1/4,1/4"), CoarseMap::parse("2,1"))) < 1e-10);
  CHECK(std::abs(shannon_chain_residual(pv("1/6,1/3,1/2"), CoarseMap::parse("2,1"))) < 1e-10);

  CHECK(std::abs(reflective_chain_residual(pv("1/6,1/3,1/2"), CoarseMap::identity(3))) < 1e-10);
  CHECK(std::abs(reflective_chain_residual(pv("1/4,1/4,1/2"), CoarseMap::parse("2,1"))) < 1e-10);
  CHECK(std::abs(reflective_chain_residual(pv("1/6,1/6,1/3,1/3"), CoarseMap::parse("2,2"))) < 1e-10);

  CHECK(symplectic_chain_residual(pv("1/6,1/3,1/2"), CoarseMap::identity(3)) == Rational(0));
  CHECK(symplectic_chain_residual(pv("1/4,1/4,1/2"), CoarseMap::parse("2,1")) == Rational(0));
  CHECK(symplectic_chain_residual(pv("1/6,1/3,1/2"), CoarseMap::parse("1,2")) == Rational(0));
}

TEST_CASE("grouping composes") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const ProbVec p = orbent::testing::random_probvec(rng, 60, 8, 2);
    const CoarseMap first = orbent::testing::random_coarse_map(rng, p.size(), false);
    const CoarseMap second = orbent::testing::random_coarse_map(rng, first.codomain_size(), false);
    REQUIRE(pushforward(pushforward(p, first), second) == pushforward(p, CoarseMap::compose(first, second)));
    for (std::size_t j = 0; j < first.codomain_size(); ++j) {
      const ProbVec cond = conditional(p, first, j);
      Rational total(0);
      for (const Rational& x : cond.probs()) total = total + x;
      REQUIRE(total == Rational(1));
    }
  }
}

TEST_CASE("reflective and symplectic entropies dominate their base") {
  Rng rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    const ProbVec p = orbent::testing::random_probvec(rng, 60, 8);
    const bool point = p.last() == Rational(1);
    CAPTURE(p.to_string());
    if (point) {
      REQUIRE(reflective(p) == shannon(p));
      REQUIRE(symplectic_entropy(p) == tsallis2(p) / Rational(2));
    } else {
      REQUIRE(reflective(p) > shannon(p));
      REQUIRE(symplectic_entropy(p) > tsallis2(p) / Rational(2));
    }
  }
}

TEST_CASE("chain rules hold on random pairs") {
  Rng rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const ProbVec p = orbent::testing::random_probvec(rng, 60, 8);
    const CoarseMap pi = orbent::testing::random_coarse_map(rng, p.size(), trial % 5 != 0);
    CAPTURE(p.to_string());
    CAPTURE(pi.to_string());
    REQUIRE(symplectic_chain_residual(p, pi) == Rational(0));
    REQUIRE(std::abs(shannon_chain_residual(p, pi)) < kChainResidualTolerance);
    REQUIRE(std::abs(reflective_chain_residual(p, pi)) < kChainResidualTolerance);
  }
}
