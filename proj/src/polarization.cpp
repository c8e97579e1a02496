#include "omalous/polarization.hpp"

namespace omalous {

LineBundleClass default_polarization(const VarietySpec& variety) {
  if (variety.family() == Family::product) {
    return LineBundleClass(GradedClass::h1(variety) + GradedClass::h2(variety));
  }
  return LineBundleClass(GradedClass::hyperplane(variety));
}

void require_ample(const LineBundleClass& pol) {
  const VarietySpec& v = pol.variety();
  const GradedClass& d = pol.divisor();
  auto reject = [&]() {
    throw std::invalid_argument("polarization " + d.to_string() + " is not an accepted ample class on " + v.label());
  };
  switch (v.family()) {
    case Family::hypersurface:
    case Family::cicy:
      if (d.coefficient(Monomial::hyperplane_power(1)) <= 0) reject();
      break;
    case Family::blowup:
      if (d != GradedClass::hyperplane(v)) reject();
      break;
    case Family::product:
      if (d.coefficient(Monomial::product(1, 0)) < 1 || d.coefficient(Monomial::product(0, 1)) < 1) reject();
      break;
  }
}

Rational degree(const GradedClass& c1, const LineBundleClass& pol) {
  require_same_variety(c1.variety(), pol.variety());
  if (!c1.is_homogeneous(1)) throw std::invalid_argument("degree expects a divisor class, got " + c1.to_string());
  require_ample(pol);
  return integrate(c1 * power(pol.divisor(), c1.variety().dimension() - 1));
}

Rational slope(const BundleChernData& bundle, const LineBundleClass& pol) {
  if (bundle.rank() == 0) throw std::domain_error("slope of a rank-0 bundle is undefined");
  Rational mu = degree(bundle.c(1), pol) / Rational(bundle.rank());
  mu.canonicalize();
  return mu;
}

long l_coefficient(int n, int m) {
  const VarietySpec v = VarietySpec::product(n, m);
  const GradedClass expansion = power(GradedClass::h1(v) + GradedClass::h2(v), n + m - 1);
  return to_long(expansion.coefficient(Monomial::product(n - 1, m)));
}

Rational l_coefficient_quoted(int n, int m) {
  mpz_class num = 1;
  for (long k = n; k <= static_cast<long>(n) + m + 1; ++k) num *= k;
  mpz_class den = 1;
  for (long k = 2; k <= m; ++k) den *= k;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational product_degree_closed_form(int n, int m, long p, long q) {
  Rational ratio = make_rational(m, n);
  return Rational(binomial(n + m - 1, n - 1)) * (Rational(p) + ratio * Rational(q));
}

}  // namespace omalous
