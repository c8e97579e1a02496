#include <doctest.h>

#include "generators.hpp"
#include "omalous/chow.hpp"

using namespace omalous;
using omalous::testing::random_class;
using omalous::testing::random_unit_leading;
using omalous::testing::sample_varieties;

namespace {

GradedClass blowup_divisor(const VarietySpec& v, long a, const std::vector<long>& e) {
  GradedClass d = GradedClass::hyperplane(v) * Rational(a);
  for (std::size_t i = 0; i < e.size(); ++i) d += GradedClass::exceptional(v, static_cast<int>(i) + 1) * Rational(e[i]);
  return d;
}

}  // namespace

TEST_CASE("variety dimensions and validation") {
  CHECK(VarietySpec::hypersurface(5).dimension() == 3);
  CHECK(VarietySpec::cicy(6, {2, 2, 3}).dimension() == 3);
  CHECK(VarietySpec::blowup(4).dimension() == 2);
  CHECK(VarietySpec::product(2, 3).dimension() == 5);
  CHECK_THROWS_AS(VarietySpec::cicy(5, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(VarietySpec::cicy(5, {6}), std::invalid_argument);
  CHECK_THROWS_AS(VarietySpec::hypersurface(0), std::invalid_argument);
  CHECK_THROWS_AS(VarietySpec::product(0, 2), std::invalid_argument);
}

TEST_CASE("add") {
  const auto b2 = VarietySpec::blowup(2);
  CHECK((GradedClass::hyperplane(b2) + (-GradedClass::hyperplane(b2))).is_zero());
  CHECK(add(GradedClass::hyperplane(b2), -GradedClass::hyperplane(b2)).coefficients().empty());

  const auto p11 = VarietySpec::product(1, 1);
  const auto sum = GradedClass::h1(p11) + GradedClass::h2(p11);
  CHECK(sum.coefficients().size() == 2);
  CHECK(sum.coefficient(Monomial::product(1, 0)) == 1);
  CHECK(sum.coefficient(Monomial::product(0, 1)) == 1);

  const auto b1 = VarietySpec::blowup(1);
  const auto h = GradedClass::hyperplane(b1);
  const auto e1 = GradedClass::exceptional(b1, 1);
  CHECK((h * Rational(3) - e1) + e1 == h * Rational(3));

  CHECK_THROWS_AS(GradedClass::hyperplane(b1) + GradedClass::hyperplane(b2), VarietyMismatch);
}

TEST_CASE("mul under the family relations") {
  const auto b2 = VarietySpec::blowup(2);
  const auto x = GradedClass::hyperplane(b2) + GradedClass::exceptional(b2, 1);
  CHECK(mul(x, x).is_zero());

  const auto p11 = VarietySpec::product(1, 1);
  const auto s = GradedClass::h1(p11) + GradedClass::h2(p11);
  CHECK(s * s == GradedClass::monomial(p11, Monomial::product(1, 1), 2));

  // -K on four points: intersection form gives 9 - 4.
  const auto b4 = VarietySpec::blowup(4);
  const auto minus_k = blowup_divisor(b4, 3, {-1, -1, -1, -1});
  CHECK(minus_k * minus_k == GradedClass::point(b4) * Rational(5));

  const auto x5 = VarietySpec::hypersurface(5);
  const auto h = GradedClass::hyperplane(x5);
  CHECK((h * h * h * h).is_zero());
  CHECK(h * h * h == GradedClass::monomial(x5, Monomial::hyperplane_power(3)));

  const auto p21 = VarietySpec::product(2, 1);
  CHECK((GradedClass::h2(p21) * GradedClass::h2(p21)).is_zero());
  CHECK_FALSE((GradedClass::h1(p21) * GradedClass::h1(p21)).is_zero());

  CHECK_THROWS_AS(mul(GradedClass::hyperplane(b2), GradedClass::hyperplane(x5)), VarietyMismatch);
}

TEST_CASE("integrate") {
  CHECK(integrate(GradedClass::point(VarietySpec::blowup(3))) == 1);
  const auto x5 = VarietySpec::hypersurface(5);
  CHECK(integrate(GradedClass::monomial(x5, Monomial::hyperplane_power(3))) == 5);
  const auto p11 = VarietySpec::product(1, 1);
  CHECK(integrate(GradedClass::h1(p11) * GradedClass::h2(p11)) == 1);
  const auto cy = VarietySpec::cicy(6, {2, 2, 3});
  CHECK(integrate(GradedClass::monomial(cy, Monomial::hyperplane_power(3))) == 12);
  CHECK(integrate(GradedClass::hyperplane(x5)) == 0);
}

TEST_CASE("truncated inverse") {
  const auto x5 = VarietySpec::hypersurface(5);
  CHECK(truncated_inverse(GradedClass::one(x5)) == GradedClass::one(x5));

  const auto cy = VarietySpec::cicy(5, {3, 3});
  const auto h = GradedClass::hyperplane(cy);
  const auto inv = truncated_inverse(GradedClass::one(cy) + h * Rational(3));
  CHECK(inv.truncated(2) == GradedClass::one(cy) - h * Rational(3) + h * h * Rational(9));
  CHECK(inv.part(3) == h * h * h * Rational(-27));

  const auto p22 = VarietySpec::product(2, 2);
  const auto u = GradedClass::one(p22) + GradedClass::h1(p22) +
                 GradedClass::h1(p22) * GradedClass::h2(p22) * Rational(5);
  CHECK(u * truncated_inverse(u) == GradedClass::one(p22));

  CHECK_THROWS_AS(truncated_inverse(GradedClass::constant(p22, 2)), std::invalid_argument);
  CHECK_THROWS_AS(truncated_inverse(GradedClass::h1(p22)), std::invalid_argument);
}

TEST_CASE("rendering") {
  const auto b2 = VarietySpec::blowup(2);
  const auto k = blowup_divisor(b2, 3, {-1, -1});
  CHECK(k.to_string() == "3*H - E1 - E2");
  CHECK((-k).to_string() == "-3*H + E1 + E2");
  CHECK((GradedClass::point(b2) * make_rational(1, 2)).to_string() == "1/2*pt");
  CHECK(GradedClass(b2).to_string() == "0");
  CHECK((GradedClass::one(b2) * Rational(2) - GradedClass::point(b2)).to_string() == "2 - pt");

  const auto p23 = VarietySpec::product(2, 3);
  const auto h1 = GradedClass::h1(p23);
  const auto h2 = GradedClass::h2(p23);
  CHECK((h1 * h1 * h2).to_string() == "h1^2*h2");
  CHECK((h2 * h2 + h1 * h2 + h1 * h1).to_string() == "h1^2 + h1*h2 + h2^2");
  CHECK((GradedClass::hyperplane(VarietySpec::hypersurface(4)) * Rational(10)).to_string() == "10*H");
  CHECK(render_monomial(VarietySpec::blowup(12), Monomial::exceptional(11)) == "E11");
}

TEST_CASE("parsing") {
  const auto b3 = VarietySpec::blowup(3);
  CHECK(parse_class(b3, "-H+E1") == GradedClass::exceptional(b3, 1) - GradedClass::hyperplane(b3));
  CHECK(parse_class(b3, "3*H - E1 - E2 - E3").to_string() == "3*H - E1 - E2 - E3");
  CHECK(parse_class(b3, "1/2*pt + 2") == GradedClass::point(b3) * make_rational(1, 2) + GradedClass::constant(b3, 2));
  CHECK(parse_class(b3, "0").is_zero());
  CHECK_THROWS_AS(parse_class(b3, "E4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class(b3, "E0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class(b3, "h1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class(b3, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_class(b3, "3*"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class(b3, "H -"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class(VarietySpec::hypersurface(5), "H^4"), std::invalid_argument);
  const auto p22 = VarietySpec::product(2, 2);
  CHECK(parse_class(p22, "h2*h1^2") == GradedClass::h1(p22) * GradedClass::h1(p22) * GradedClass::h2(p22));
  CHECK_THROWS_AS(parse_class(p22, "h1^3"), std::invalid_argument);
}

TEST_CASE("property: rendering parses back to the same class") {
  std::mt19937 rng(11);
  for (const auto& v : sample_varieties()) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto u = random_class(rng, v);
      CHECK(parse_class(v, u.to_string()) == u);
    }
  }
}

TEST_CASE("property: ring laws in every truncated ring") {
  std::mt19937 rng(2024);
  for (const auto& v : sample_varieties()) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_class(rng, v);
      const auto b = random_class(rng, v);
      const auto c = random_class(rng, v);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * GradedClass::one(v) == a);
      CHECK(a - a == GradedClass(v));
    }
  }
}

TEST_CASE("property: truncated inverse round-trip") {
  std::mt19937 rng(7);
  for (const auto& v : sample_varieties()) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto u = random_unit_leading(rng, v);
      CHECK(u * truncated_inverse(u) == GradedClass::one(v));
    }
  }
}

TEST_CASE("property: blow-up intersection form") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int n = 0; n <= 8; ++n) {
    const auto v = VarietySpec::blowup(n);
    for (int trial = 0; trial < 30; ++trial) {
      const long a = coeff(rng);
      const long b = coeff(rng);
      std::vector<long> av(n);
      std::vector<long> bv(n);
      long expected = a * b;
      for (int i = 0; i < n; ++i) {
        av[i] = coeff(rng);
        bv[i] = coeff(rng);
        expected -= av[i] * bv[i];
      }
      CHECK(integrate(blowup_divisor(v, a, av) * blowup_divisor(v, b, bv)) == expected);
    }
  }
}

TEST_CASE("property: repeated computation is bit-identical") {
  std::mt19937 rng1(5);
  std::mt19937 rng2(5);
  const auto v = VarietySpec::product(3, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u1 = random_unit_leading(rng1, v);
    const auto u2 = random_unit_leading(rng2, v);
    CHECK(truncated_inverse(u1).coefficients() == truncated_inverse(u2).coefficients());
    CHECK(power(u1, 7).to_string() == power(u2, 7).to_string());
  }
}

TEST_CASE("power and exponential") {
  const auto x = VarietySpec::hypersurface(4);
  const auto h = GradedClass::hyperplane(x);
  const auto p = power(GradedClass::one(x) + h, 10);
  CHECK(p.coefficient(Monomial::hyperplane_power(1)) == 10);
  CHECK(p.coefficient(Monomial::hyperplane_power(2)) == 45);
  CHECK(p.coefficient(Monomial::hyperplane_power(3)) == 120);
  const auto e = exponential(h * Rational(2));
  CHECK(e.coefficient(Monomial::hyperplane_power(3)) == make_rational(8, 6));
  CHECK_THROWS_AS(power(h, -1), std::invalid_argument);
}
