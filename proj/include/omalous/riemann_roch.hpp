#pragma once

#include <vector>

#include "omalous/rational.hpp"

namespace omalous {

/// Chern-character data of a torsion-free sheaf on P^2 blown up at n points:
///   ch = r + (a H + sum a_i E_i) - (k - (a^2 - |a_vec|^2)/2) pt,
/// so k is c_2. The ambient n is a_vec.size().
struct BlowupSheafData {
  long rank;
  long a;
  std::vector<long> a_vec;
  long k;

  int points() const { return static_cast<int>(a_vec.size()); }

  /// E* at the character level: c_1 negated, c_2 unchanged.
  BlowupSheafData dual() const;

  /// The rank-r data with c_1 = 3H - sum E_i and c_2 = (3 + n) pt.
  static BlowupSheafData omalous_target(int n, long rank);
  static BlowupSheafData structure_sheaf(int n);
};

/// Twist by O(pH + sum q_i E_i).
struct TwistSpec {
  long p;
  std::vector<long> q_vec;

  static TwistSpec none(int n) { return {0, std::vector<long>(n, 0)}; }
  /// O(p H + E_i); i = 0 means no exceptional part.
  static TwistSpec with_exceptional(int n, long p, int i);
};

/// Closed-form Riemann-Roch on the blown-up plane. Exact integer.
long euler_char(const BlowupSheafData& sheaf, const TwistSpec& twist);

/// Independent oracle: integral of ch(E (x) O(D)) * td in the Chow ring,
/// with td = 1 - K/2 + (K^2 + e)/12 pt.
Rational todd_euler_char(const BlowupSheafData& sheaf, const TwistSpec& twist);

/// h^1 = -chi, assuming h^0 = h^2 = 0. Throws std::domain_error if chi > 0.
long h1_under_vanishing(const BlowupSheafData& sheaf, const TwistSpec& twist);

struct MonadDimensions {
  std::vector<long> dim_k;  // K_0, K_1, ..., K_n
  std::vector<long> dim_l;  // L_0, L_1, ..., L_n
  long dim_w;
};

/// Dimensions of the spaces in the blow-up monad for an omalous bundle of
/// rank r. Each entry is recomputed by Riemann-Roch and checked against the
/// closed forms. Requires n >= 3 and r > 3 (HypothesisViolation otherwise).
MonadDimensions monad_dimensions(int n, long rank);

}  // namespace omalous
