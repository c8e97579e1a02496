#pragma once

#include <string>
#include <vector>

#include "omalous/monad.hpp"

namespace omalous {

/// Omality of a bundle: c_1(E) = c_1(TX) (equivalently det E* = omega_X, the
/// Picard groups here being torsion-free) and c_2(E) = c_2(TX). The defect
/// c_2(E) - c_2(TX) is always filled in; rank is reported, not required.
struct OmalityReport {
  long rank;
  GradedClass c1_target;
  GradedClass c1_actual;
  GradedClass c2_target;
  GradedClass c2_actual;
  GradedClass defect;
  bool omalous;

  bool operator==(const OmalityReport&) const = default;
};

OmalityReport is_omalous(const BundleChernData& bundle, const VarietySpec& variety);

enum class Stability { stable, semi_stable, unknown };

/// Stability is never decided here; a tag only records a cited theorem.
class StabilityTag {
 public:
  static StabilityTag stable(std::string citation);
  static StabilityTag semi_stable(std::string citation);
  static StabilityTag unknown() { return StabilityTag(Stability::unknown, {}); }

  Stability kind() const { return kind_; }
  const std::string& citation() const { return citation_; }
  /// "stable", "semi-stable", "unknown".
  std::string name() const;

  bool operator==(const StabilityTag&) const = default;

 private:
  StabilityTag(Stability kind, std::string citation);
  Stability kind_;
  std::string citation_;
};

// ---- rank-3 linear monads on X_d ------------------------------------------

struct HypersurfaceSolution {
  int d;
  long l;
  long c;
  StabilityTag tag;

  bool operator==(const HypersurfaceSolution&) const = default;
};

StabilityTag hypersurface_stability(int d, long l, long c);

/// Brute scan over 1 <= d <= d_max with l = 5 - d, c = (d^2 + d - 10)/2,
/// every candidate checked with is_omalous on the linear monad. Parallel
/// over d; result in increasing d.
std::vector<HypersurfaceSolution> hypersurface_scan(int d_max);
/// Serial reference for hypersurface_scan.
std::vector<HypersurfaceSolution> hypersurface_scan_serial(int d_max);
/// Odd k >= 7: d = (k-1)/2, l = (11-k)/2, c = (k^2-41)/8, while d <= d_max.
std::vector<HypersurfaceSolution> hypersurface_closed_form(int d_max);
/// Scan and closed form, asserted equal (std::logic_error otherwise).
std::vector<HypersurfaceSolution> hypersurface_solutions(int d_max);

// ---- complete intersection Calabi-Yau 3-folds -----------------------------

struct CicyRow {
  VarietySpec variety;
  long c;
  MonadSpec monad;
  OmalityReport report;
  StabilityTag tag;
};

/// The five CICY 3-folds: (5) in P^4, (3,3) and (4,2) in P^5, (2,2,3) in P^6,
/// (2,2,2,2) in P^7.
std::vector<VarietySpec> cicy_varieties();

/// c = (sum d_i^2 - (n+1)) / 2.
long cicy_closed_form_c(const Cicy3Fold& cicy);

/// One row per CICY, c taken from the tangent quotient and checked against
/// the closed form; every monad is checked omalous.
std::vector<CicyRow> cicy_catalog();

// ---- blow-ups of P^2 -------------------------------------------------------

struct BlowupResult {
  MonadSpec monad;
  MonadDimensions dims;
  BundleChernData cohomology;
  OmalityReport report;
};

BlowupResult blowup_family(int n, long rank);

// ---- P^n x P^m -------------------------------------------------------------

struct ProductSolution {
  long a;
  long b;
  long c;
  StabilityTag tag;

  bool operator==(const ProductSolution&) const = default;
};

/// Brute scan of 0 <= b, c <= bound, 0 <= a <= b + c - 1 for omalous
/// cokernels of O^a -> O(1,0)^b + O(0,1)^c. Parallel over (b, c); ordered
/// lexicographically in (b, c, a). Asserts the solution set is exactly
/// {(a, n+1, m+1)}. Requires bound >= n + m + 2.
std::vector<ProductSolution> product_solutions(int n, int m, int bound);
/// Serial reference for product_solutions.
std::vector<ProductSolution> product_solutions_serial(int n, int m, int bound);

}  // namespace omalous
