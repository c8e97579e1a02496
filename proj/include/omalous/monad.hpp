#pragma once

#include <string>
#include <variant>
#include <vector>

#include "omalous/chern.hpp"
#include "omalous/riemann_roch.hpp"

namespace omalous {

struct Summand {
  LineBundleClass line;
  long multiplicity;

  bool operator==(const Summand&) const = default;
};

/// A formal direct sum of line bundles. Zero-multiplicity summands are
/// dropped on construction; an empty term has rank 0.
class TermSpec {
 public:
  TermSpec(VarietySpec variety, std::vector<Summand> summands);

  static TermSpec empty(const VarietySpec& variety) { return TermSpec(variety, {}); }
  static TermSpec trivial(const VarietySpec& variety, long rank);

  const VarietySpec& variety() const { return variety_; }
  const std::vector<Summand>& summands() const { return summands_; }
  long rank() const;
  BundleChernData chern_data() const;

  bool operator==(const TermSpec&) const = default;

 private:
  VarietySpec variety_;
  std::vector<Summand> summands_;
};

/// M0 -> M1 -> M2 at the level of classes; the maps are not represented.
class MonadSpec {
 public:
  MonadSpec(TermSpec m0, TermSpec m1, TermSpec m2, std::string provenance = {});

  const VarietySpec& variety() const { return m1_.variety(); }
  const TermSpec& m0() const { return m0_; }
  const TermSpec& m1() const { return m1_; }
  const TermSpec& m2() const { return m2_; }
  const std::string& provenance() const { return provenance_; }
  long cohomology_rank() const { return m1_.rank() - m0_.rank() - m2_.rank(); }

  bool operator==(const MonadSpec&) const = default;

 private:
  TermSpec m0_;
  TermSpec m1_;
  TermSpec m2_;
  std::string provenance_;
};

/// ker(beta)/im(alpha): c = c(M1) / (c(M0) c(M2)), ch = ch(M1) - ch(M0) - ch(M2).
BundleChernData cohomology_data(const MonadSpec& monad);
/// ker(beta) = M1 - M2.
BundleChernData kernel_data(const MonadSpec& monad);
/// coker(alpha) = M1 - M0.
BundleChernData cokernel_data(const MonadSpec& monad);
/// Q in 0 -> sub -> total -> Q -> 0.
BundleChernData cokernel_data(const TermSpec& sub, const TermSpec& total);

// Builders for the monad families. Each throws HypothesisViolation when the
// parameters leave the range where the construction is stated.

/// O(-1)^10 -> O^22 -> O(1)^10 on the quintic.
MonadSpec quintic_monad();

/// O(-1)^(c+l) -> O^(3+2c+l) -> O(1)^c on X_d.
MonadSpec linear_monad(int d, long l, long c);

/// O(-1)^c -> O^(2+2c) -> O(1)^c on a CICY 3-fold, c = c_2(TX) / H^2.
MonadSpec cicy_monad(const VarietySpec& variety);

/// (+) K_i (x) O(-H + E_i) -> W (x) O -> (+) L_i (x) O(H - E_i) with E_0 = 0.
MonadSpec blowup_monad(int n, long rank);

/// O^a -> O(1,0)^b + O(0,1)^c -> 0 on P^n x P^m; the cohomology is the cokernel Q.
MonadSpec product_cokernel_monad(int n, int m, long a, long b, long c);

struct QuinticParams {};
struct LinearParams {
  int d;
  long l;
  long c;
};
struct CicyParams {
  VarietySpec variety;
};
struct BlowupParams {
  int n;
  long rank;
};
using FamilyParams = std::variant<QuinticParams, LinearParams, CicyParams, BlowupParams>;

MonadSpec build_family(const FamilyParams& params);

}  // namespace omalous
