#include "omalous/monad.hpp"

#include <algorithm>

namespace omalous {

TermSpec::TermSpec(VarietySpec variety, std::vector<Summand> summands) : variety_(std::move(variety)) {
  for (auto& s : summands) {
    require_same_variety(variety_, s.line.variety());
    if (s.multiplicity < 0) throw std::invalid_argument("negative multiplicity " + std::to_string(s.multiplicity));
    if (s.multiplicity > 0) summands_.push_back(std::move(s));
  }
}

TermSpec TermSpec::trivial(const VarietySpec& variety, long rank) {
  return TermSpec(variety, {{LineBundleClass::trivial(variety), rank}});
}

long TermSpec::rank() const {
  long r = 0;
  for (const auto& s : summands_) r += s.multiplicity;
  return r;
}

BundleChernData TermSpec::chern_data() const {
  std::vector<WeightedBundle> parts;
  parts.reserve(summands_.size());
  for (const auto& s : summands_) parts.push_back({line_bundle_data(s.line), s.multiplicity});
  return whitney_sum(variety_, parts);
}

MonadSpec::MonadSpec(TermSpec m0, TermSpec m1, TermSpec m2, std::string provenance)
    : m0_(std::move(m0)), m1_(std::move(m1)), m2_(std::move(m2)), provenance_(std::move(provenance)) {
  require_same_variety(m0_.variety(), m1_.variety());
  require_same_variety(m1_.variety(), m2_.variety());
  if (cohomology_rank() < 0) {
    throw std::domain_error("monad cohomology rank " + std::to_string(cohomology_rank()) + " is negative");
  }
}

BundleChernData cohomology_data(const MonadSpec& monad) {
  const BundleChernData kernel =
      whitney_quotient(monad.m1().chern_data(), monad.m2().chern_data(), RankPolicy::allow_zero);
  return whitney_quotient(kernel, monad.m0().chern_data(), RankPolicy::allow_zero);
}

BundleChernData kernel_data(const MonadSpec& monad) {
  return whitney_quotient(monad.m1().chern_data(), monad.m2().chern_data(), RankPolicy::allow_zero);
}

BundleChernData cokernel_data(const MonadSpec& monad) {
  return whitney_quotient(monad.m1().chern_data(), monad.m0().chern_data(), RankPolicy::allow_zero);
}

BundleChernData cokernel_data(const TermSpec& sub, const TermSpec& total) {
  require_same_variety(sub.variety(), total.variety());
  if (total.rank() < sub.rank()) {
    throw std::domain_error("cokernel rank underflow: " + std::to_string(total.rank()) + " < " +
                            std::to_string(sub.rank()));
  }
  return whitney_quotient(total.chern_data(), sub.chern_data(), RankPolicy::allow_zero);
}

namespace {

LineBundleClass h_multiple(const VarietySpec& v, long k) {
  return LineBundleClass(GradedClass::hyperplane(v) * Rational(k));
}

}  // namespace

MonadSpec quintic_monad() {
  const VarietySpec v = VarietySpec::hypersurface(5);
  return MonadSpec(TermSpec(v, {{h_multiple(v, -1), 10}}), TermSpec::trivial(v, 22),
                   TermSpec(v, {{h_multiple(v, 1), 10}}), "rank-2 instanton monad on the quintic");
}

MonadSpec linear_monad(int d, long l, long c) {
  if (c < 0) throw HypothesisViolation("linear monad requires c >= 0");
  if (c + l < 0) throw HypothesisViolation("linear monad requires c + l >= 0");
  if (3 + 2 * c + l < 0) throw HypothesisViolation("linear monad requires 3 + 2c + l >= 0");
  const VarietySpec v = VarietySpec::hypersurface(d);
  return MonadSpec(TermSpec(v, {{h_multiple(v, -1), c + l}}), TermSpec::trivial(v, 3 + 2 * c + l),
                   TermSpec(v, {{h_multiple(v, 1), c}}), "rank-3 linear monad on a degree-d hypersurface");
}

MonadSpec cicy_monad(const VarietySpec& variety) {
  if (variety.family() != Family::cicy && !(variety == VarietySpec::hypersurface(5))) {
    throw HypothesisViolation("CICY monad requires a Calabi-Yau complete intersection 3-fold");
  }
  const Rational c2 = tangent_data(variety).c(2).coefficient(Monomial::hyperplane_power(2));
  const long c = to_long(c2);
  if (c < 0) throw HypothesisViolation("CICY monad requires c_2(TX) >= 0");
  return MonadSpec(TermSpec(variety, {{h_multiple(variety, -1), c}}), TermSpec::trivial(variety, 2 + 2 * c),
                   TermSpec(variety, {{h_multiple(variety, 1), c}}), "rank-2 monad on a complete intersection CY 3-fold");
}

MonadSpec blowup_monad(int n, long rank) {
  const MonadDimensions dims = monad_dimensions(n, rank);
  const VarietySpec v = VarietySpec::blowup(n);
  const GradedClass h = GradedClass::hyperplane(v);

  std::vector<Summand> m0;
  std::vector<Summand> m2;
  m0.push_back({LineBundleClass(-h), dims.dim_k[0]});
  m2.push_back({LineBundleClass(h), dims.dim_l[0]});
  for (int i = 1; i <= n; ++i) {
    const GradedClass e = GradedClass::exceptional(v, i);
    m0.push_back({LineBundleClass(e - h), dims.dim_k[i]});
    m2.push_back({LineBundleClass(h - e), dims.dim_l[i]});
  }
  return MonadSpec(TermSpec(v, std::move(m0)), TermSpec::trivial(v, dims.dim_w), TermSpec(v, std::move(m2)),
                   "omalous bundle of rank r > 3 on P^2 blown up at n >= 3 points");
}

MonadSpec product_cokernel_monad(int n, int m, long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) throw HypothesisViolation("cokernel sequence needs a, b, c >= 0");
  const VarietySpec v = VarietySpec::product(n, m);
  return MonadSpec(TermSpec::trivial(v, a),
                   TermSpec(v, {{LineBundleClass(GradedClass::h1(v)), b}, {LineBundleClass(GradedClass::h2(v)), c}}),
                   TermSpec::empty(v), "cokernel of O^a -> O(1,0)^b + O(0,1)^c");
}

MonadSpec build_family(const FamilyParams& params) {
  struct Visitor {
    MonadSpec operator()(const QuinticParams&) const { return quintic_monad(); }
    MonadSpec operator()(const LinearParams& p) const { return linear_monad(p.d, p.l, p.c); }
    MonadSpec operator()(const CicyParams& p) const { return cicy_monad(p.variety); }
    MonadSpec operator()(const BlowupParams& p) const { return blowup_monad(p.n, p.rank); }
  };
  return std::visit(Visitor{}, params);
}

}  // namespace omalous
