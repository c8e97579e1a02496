#include <doctest.h>

#include <random>

#include "omalous/monad.hpp"
#include "omalous/riemann_roch.hpp"

using namespace omalous;

TEST_CASE("euler_char") {
  CHECK(euler_char(BlowupSheafData::structure_sheaf(0), TwistSpec::none(0)) == 1);
  CHECK(euler_char(BlowupSheafData::structure_sheaf(5), TwistSpec::none(5)) == 1);
  // h^0(O(H)) = 3 and the higher cohomology vanishes.
  CHECK(euler_char(BlowupSheafData::structure_sheaf(2), TwistSpec{1, {0, 0}}) == 3);
  CHECK(euler_char(BlowupSheafData::omalous_target(4, 7), TwistSpec::with_exceptional(4, -1, 0)) == -5);
  // O(2H - E_1 - ... - E_5) on five points: conics through five points, chi = 6 - 5.
  CHECK(euler_char(BlowupSheafData::structure_sheaf(5), TwistSpec{2, {-1, -1, -1, -1, -1}}) == 1);
  CHECK_THROWS_AS(euler_char(BlowupSheafData::structure_sheaf(2), TwistSpec::none(3)), std::invalid_argument);
}

TEST_CASE("todd_euler_char") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(todd_euler_char(BlowupSheafData::structure_sheaf(n), TwistSpec::none(n)) == 1);
  }
  CHECK(todd_euler_char(BlowupSheafData::structure_sheaf(2), TwistSpec{1, {0, 0}}) == 3);
  CHECK(todd_euler_char(BlowupSheafData::omalous_target(4, 7), TwistSpec::with_exceptional(4, -1, 0)) == -5);
}

TEST_CASE("property: closed form agrees with the Todd-class oracle") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> points(0, 8);
  std::uniform_int_distribution<long> value(-20, 20);
  std::uniform_int_distribution<long> rank(1, 20);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = points(rng);
    BlowupSheafData sheaf{rank(rng), value(rng), {}, value(rng)};
    TwistSpec twist{value(rng), {}};
    for (int i = 0; i < n; ++i) {
      sheaf.a_vec.push_back(value(rng));
      twist.q_vec.push_back(value(rng));
    }
    CHECK(Rational(euler_char(sheaf, twist)) == todd_euler_char(sheaf, twist));
  }
}

TEST_CASE("h1_under_vanishing") {
  const auto e3 = BlowupSheafData::omalous_target(3, 4);
  CHECK(h1_under_vanishing(e3, TwistSpec::with_exceptional(3, -1, 0)) == 3);
  for (int i = 1; i <= 3; ++i) CHECK(h1_under_vanishing(e3, TwistSpec::with_exceptional(3, -1, i)) == 2);

  const auto e5 = BlowupSheafData::omalous_target(5, 6);
  CHECK(e5.dual().a == -3);
  CHECK(e5.dual().k == e5.k);
  CHECK(h1_under_vanishing(e5.dual(), TwistSpec::with_exceptional(5, -1, 0)) == 5);

  CHECK_THROWS_WITH_AS(h1_under_vanishing(BlowupSheafData::structure_sheaf(2), TwistSpec::none(2)),
                       doctest::Contains("vanishing assumption violated"), std::domain_error);
}

TEST_CASE("monad_dimensions") {
  const auto d34 = monad_dimensions(3, 4);
  CHECK(d34.dim_k == std::vector<long>{3, 3, 3, 3});
  CHECK(d34.dim_l == std::vector<long>{3, 2, 2, 2});
  CHECK(d34.dim_w == 25);

  CHECK(monad_dimensions(4, 5).dim_w == 50);

  CHECK_THROWS_AS(monad_dimensions(3, 3), HypothesisViolation);
  CHECK_THROWS_AS(monad_dimensions(2, 5), HypothesisViolation);
}

TEST_CASE("property: monad rank bookkeeping closes") {
  for (int n = 3; n <= 12; ++n) {
    for (long r = 4; r <= 12; ++r) {
      const auto d = monad_dimensions(n, r);
      long sum = r;
      for (long k : d.dim_k) sum += k;
      for (long l : d.dim_l) sum += l;
      CHECK(sum == d.dim_w);
      CHECK(d.dim_w == 4L * n * (n - 1) - 3 + r);
    }
  }
}

TEST_CASE("blow-up monad c1 closes against the omalous target") {
  for (int n = 3; n <= 6; ++n) {
    const auto monad = blowup_monad(n, 4);
    const auto& v = monad.variety();
    GradedClass target = GradedClass::hyperplane(v) * Rational(3);
    for (int i = 1; i <= n; ++i) target -= GradedClass::exceptional(v, i);
    CHECK(cohomology_data(monad).c(1) == target);
  }
}
