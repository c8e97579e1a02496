#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "omalous/rational.hpp"
#include "omalous/variety.hpp"

namespace omalous {

/// Basis element of a truncated Chow ring.
///
/// `degree` is the codimension. `index` picks the element inside that degree:
///   - hypersurface / CICY: always 0 (H^degree);
///   - blow-up: in degree 1, 0 is H and i >= 1 is E_i; 0 otherwise (1, pt);
///   - product: the exponent of h2, so the monomial is h1^(degree-index) * h2^index.
/// The defaulted ordering (degree, index) is the canonical rendering order.
struct Monomial {
  int degree = 0;
  int index = 0;

  auto operator<=>(const Monomial&) const = default;

  static constexpr Monomial unit() { return {0, 0}; }
  static constexpr Monomial hyperplane_power(int j) { return {j, 0}; }
  static constexpr Monomial blowup_line() { return {1, 0}; }
  static constexpr Monomial exceptional(int i) { return {1, i}; }
  static constexpr Monomial point() { return {2, 0}; }
  static constexpr Monomial product(int h1_exp, int h2_exp) { return {h1_exp + h2_exp, h2_exp}; }
};

bool is_valid_monomial(const VarietySpec& variety, Monomial mono);

/// "1", "H", "H^2", "E3", "pt", "h1^2*h2".
std::string render_monomial(const VarietySpec& variety, Monomial mono);

/// An element of the Chow ring of `variety` with exact rational coefficients.
/// Zero coefficients are never stored, and every stored monomial lies inside
/// the truncation of the variety.
class GradedClass {
 public:
  using Coefficients = std::map<Monomial, Rational>;

  explicit GradedClass(VarietySpec variety) : variety_(std::move(variety)) {}

  static GradedClass constant(const VarietySpec& variety, const Rational& value);
  static GradedClass one(const VarietySpec& variety) { return constant(variety, 1); }
  static GradedClass monomial(const VarietySpec& variety, Monomial mono, const Rational& coeff = 1);

  // Named generators. Each throws std::invalid_argument on the wrong family.
  static GradedClass hyperplane(const VarietySpec& variety);  // H
  static GradedClass exceptional(const VarietySpec& variety, int i);
  static GradedClass point(const VarietySpec& variety);
  static GradedClass h1(const VarietySpec& variety);
  static GradedClass h2(const VarietySpec& variety);

  const VarietySpec& variety() const { return variety_; }
  const Coefficients& coefficients() const { return coeffs_; }
  Rational coefficient(Monomial mono) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// True when every stored monomial has the given degree (zero counts).
  bool is_homogeneous(int degree) const;
  bool has_integer_coefficients() const;

  /// Degree-k component.
  GradedClass part(int degree) const;
  /// Drops components above max_degree.
  GradedClass truncated(int max_degree) const;

  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);
  GradedClass& operator*=(const Rational& scalar);

  friend GradedClass operator+(GradedClass u, const GradedClass& v) { return u += v; }
  friend GradedClass operator-(GradedClass u, const GradedClass& v) { return u -= v; }
  friend GradedClass operator-(GradedClass u) { return u *= -1; }
  friend GradedClass operator*(GradedClass u, const Rational& s) { return u *= s; }
  friend GradedClass operator*(const Rational& s, GradedClass u) { return u *= s; }
  friend GradedClass operator*(const GradedClass& u, const GradedClass& v);

  bool operator==(const GradedClass& other) const = default;

  /// Canonical rendering, e.g. "3*H - E1 - E2", "1/2*pt", "0".
  std::string to_string() const;

 private:
  void accumulate(Monomial mono, const Rational& value);

  VarietySpec variety_;
  Coefficients coeffs_;
};

GradedClass add(const GradedClass& u, const GradedClass& v);
GradedClass mul(const GradedClass& u, const GradedClass& v);

/// Top-degree coefficient times the variety's top normalization.
Rational integrate(const GradedClass& u);

/// Inverse in the truncated ring. Requires the degree-0 part to be exactly 1.
GradedClass truncated_inverse(const GradedClass& u);

/// u^k for k >= 0, by repeated squaring.
GradedClass power(const GradedClass& u, long k);

/// Sum of D^k / k! up to the variety dimension.
GradedClass exponential(const GradedClass& d);

/// Parses the canonical rendering (and looser spacing): terms joined by
/// '+'/'-', each "[coeff*]monomial" or a bare rational. Throws
/// std::invalid_argument on malformed input or monomials outside the ring.
GradedClass parse_class(const VarietySpec& variety, std::string_view text);

}  // namespace omalous
