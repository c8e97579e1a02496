#pragma once

#include "omalous/chern.hpp"

namespace omalous {

/// H on the 3-folds and the blow-up, h1 + h2 on P^n x P^m.
LineBundleClass default_polarization(const VarietySpec& variety);

/// Throws std::invalid_argument unless `pol` is one of the accepted ample
/// classes: positive multiples of H on X_d / CICY, exactly H on the blow-up,
/// a*h1 + b*h2 with a, b >= 1 on a product.
void require_ample(const LineBundleClass& pol);

/// deg = integral of c1 * pol^(dim - 1).
Rational degree(const GradedClass& c1, const LineBundleClass& pol);

/// deg(c_1) / rank. Throws std::domain_error on rank 0.
Rational slope(const BundleChernData& bundle, const LineBundleClass& pol);

/// Coefficient of h1^(n-1) h2^m in (h1 + h2)^(n+m-1), read off the expansion
/// in the Chow ring of P^n x P^m. Equals C(n+m-1, n-1).
long l_coefficient(int n, int m);

/// The printed product n(n+1)...(n+m+1)/m!. It does not agree with
/// l_coefficient (its upper factor would have to be n+m-1); kept so reports
/// can show the discrepancy.
Rational l_coefficient_quoted(int n, int m);

/// C(n+m-1, n-1) * (p + (m/n) q): the (h1+h2)-degree of p*h1 + q*h2 on
/// P^n x P^m, from the binomial closed form rather than the expansion.
Rational product_degree_closed_form(int n, int m, long p, long q);

}  // namespace omalous
