#include <algorithm>

#include "doctest.h"
#include "orbent/dynkin.hpp"
#include "orbent/errors.hpp"
#include "orbent/exact.hpp"
#include "orbent/oracle.hpp"
#include "orbent/symplectic.hpp"

using namespace orbent;
using namespace orbent::oracle;

TEST_CASE("prime field arithmetic") {
  for (std::uint64_t q : {2, 3}) {
    const PrimeField f(q);
    for (FieldElement a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    for (FieldElement a = 0; a < q; ++a) CHECK(f.add(a, f.neg(a)) == 0);
  }
  CHECK_THROWS_AS(PrimeField(5), InvalidArgument);
}

TEST_CASE("count_type_class") {
  const std::vector<std::uint64_t> c22{2, 2}, c12{1, 2}, c5{5};
  CHECK(count_type_class(4, c22) == Natural(6));
  CHECK(count_type_class(3, c12) == Natural(3));
  CHECK(count_type_class(5, c5) == Natural(1));
  const std::vector<std::uint64_t> c334{3, 3, 4};
  CHECK(count_type_class(10, c334) == multinomial(10, c334));
  const std::vector<std::uint64_t> bad{1, 1};
  CHECK_THROWS_AS(count_type_class(3, bad), InvalidArgument);
  const std::vector<std::uint64_t> too_long{6, 5};
  CHECK_THROWS_AS(count_type_class(11, too_long), InvalidArgument);
}

TEST_CASE("reflection_length_census") {
  CHECK(reflection_length_census(Family::A, 2) == IntPolynomial{1, 2, 2, 1});
  CHECK(reflection_length_census(Family::B, 2) == IntPolynomial{1, 2, 2, 2, 1});
  CHECK(reflection_length_census(Family::D, 2) == IntPolynomial{1, 2, 1});
  CHECK_THROWS_AS(reflection_length_census(Family::B, 5), InvalidArgument);
}

TEST_CASE("group and subspace enumerations") {
  CHECK(enumerate_general_linear(2, 2) == Natural(6));
  CHECK(enumerate_general_linear(2, 3) == Natural(48));
  CHECK(enumerate_general_linear(3, 2) == gl_order(3, 2));
  CHECK(enumerate_symplectic_group(1, 2) == Natural(6));
  CHECK(enumerate_symplectic_group(2, 2) == Natural(720));
  CHECK(enumerate_symplectic_group(1, 3) == Natural(24));
  CHECK(enumerate_symplectic_group(2, 3) == sp_order(2, 3));
  CHECK(enumerate_isotropic_subspaces(1, 1, 2) == Natural(3));
  CHECK(enumerate_isotropic_subspaces(2, 2, 2) == Natural(15));
  CHECK(enumerate_isotropic_subspaces(0, 2, 3) == Natural(1));
  const std::vector<std::uint64_t> i11{1, 1}, i2{2}, none{};
  CHECK(enumerate_isotropic_flags(i11, 2, 2) == Natural(45));
  CHECK(enumerate_isotropic_flags(i2, 2, 2) == Natural(15));
  CHECK(enumerate_isotropic_flags(none, 2, 3) == Natural(1));
  CHECK_THROWS_AS(enumerate_symplectic_group(3, 2), InvalidArgument);
  CHECK_THROWS_AS(enumerate_isotropic_subspaces(1, 1, 4), InvalidArgument);
}

TEST_CASE("subspace enumeration yields each subspace once") {
  for (std::uint64_t q : {2, 3}) {
    for (std::uint64_t d = 0; d <= 4; ++d) {
      for (std::uint64_t s = 0; s <= d; ++s) {
        const std::vector<std::uint64_t> parts{s, d - s};
        CHECK(enumerate_subspaces(s, d, q) == q_multinomial(d, parts, q));
      }
    }
    auto subs = isotropic_subspaces(1, 2, q);
    const std::size_t before = subs.size();
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    CHECK(subs.size() == before);
    for (const SmallMatrix& m : subs) CHECK(m.rref(PrimeField(q)) == m);
  }
}

TEST_CASE("stabilizer_and_orbit_check") {
  const auto line = stabilizer_and_orbit_check(1, 2);
  CHECK(line.ok);
  CHECK(line.orbit == Natural(15));
  CHECK(line.stabilizer == Natural(48));
  CHECK(line.group == Natural(720));
  const auto lagrangian = stabilizer_and_orbit_check(2, 2);
  CHECK(lagrangian.ok);
  CHECK(lagrangian.orbit == Natural(15));
  CHECK(lagrangian.stabilizer == Natural(48));
  const auto zero = stabilizer_and_orbit_check(0, 1);
  CHECK(zero.ok);
  CHECK(zero.orbit == Natural(1));
  CHECK(zero.stabilizer == zero.group);
  CHECK(stabilizer_and_orbit_check(1, 1, 3).ok);
}
