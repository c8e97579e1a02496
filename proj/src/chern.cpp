#include "omalous/chern.hpp"

#include <vector>

namespace omalous {

LineBundleClass::LineBundleClass(GradedClass divisor) : divisor_(std::move(divisor)) {
  if (!divisor_.is_homogeneous(1)) {
    throw std::invalid_argument("line bundle class must be a divisor, got " + divisor_.to_string());
  }
  if (!divisor_.has_integer_coefficients()) {
    throw std::invalid_argument("line bundle class needs integer coefficients, got " + divisor_.to_string());
  }
}

LineBundleClass LineBundleClass::parse(const VarietySpec& variety, std::string_view text) {
  return LineBundleClass(parse_class(variety, text));
}

BundleChernData::BundleChernData(long rank, GradedClass total_chern, GradedClass character)
    : rank_(rank), total_chern_(std::move(total_chern)), character_(std::move(character)) {
  require_same_variety(total_chern_.variety(), character_.variety());
  if (rank_ < 0) throw std::domain_error("negative rank");
  const VarietySpec& v = total_chern_.variety();
  if (total_chern_.part(0) != GradedClass::one(v)) {
    throw std::invalid_argument("total Chern class must start with 1, got " + total_chern_.to_string());
  }
  if (character_.part(0) != GradedClass::constant(v, rank_)) {
    throw std::invalid_argument("character rank term disagrees with rank " + std::to_string(rank_));
  }
  const GradedClass c1 = total_chern_.part(1);
  if (character_.part(1) != c1) throw std::invalid_argument("ch_1 != c_1");
  GradedClass expected_ch2 = c1 * c1 - total_chern_.part(2) * Rational(2);
  expected_ch2 *= make_rational(1, 2);
  if (character_.part(2) != expected_ch2) {
    throw std::invalid_argument("ch_2 != (c_1^2 - 2 c_2)/2: " + character_.part(2).to_string() + " vs " +
                                expected_ch2.to_string());
  }
}

BundleChernData line_bundle_data(const LineBundleClass& line) {
  const GradedClass& d = line.divisor();
  return BundleChernData(1, GradedClass::one(d.variety()) + d, exponential(d));
}

BundleChernData trivial_bundle_data(const VarietySpec& variety, long rank) {
  return BundleChernData(rank, GradedClass::one(variety), GradedClass::constant(variety, rank));
}

BundleChernData whitney_sum(const VarietySpec& variety, std::span<const WeightedBundle> parts) {
  long rank = 0;
  GradedClass total = GradedClass::one(variety);
  GradedClass character(variety);
  for (const auto& part : parts) {
    require_same_variety(variety, part.data.variety());
    if (part.multiplicity < 0) throw std::invalid_argument("negative multiplicity in direct sum");
    if (part.multiplicity == 0) continue;
    rank += part.data.rank() * part.multiplicity;
    total = total * power(part.data.total_chern(), part.multiplicity);
    character += part.data.character() * Rational(part.multiplicity);
  }
  return BundleChernData(rank, std::move(total), std::move(character));
}

BundleChernData whitney_quotient(const BundleChernData& total, const BundleChernData& sub, RankPolicy policy) {
  require_same_variety(total.variety(), sub.variety());
  const long rank = total.rank() - sub.rank();
  if (rank < 0 || (rank == 0 && policy == RankPolicy::positive)) {
    throw std::domain_error("quotient rank " + std::to_string(total.rank()) + " - " + std::to_string(sub.rank()) +
                            " is not admissible");
  }
  return BundleChernData(rank, total.total_chern() * truncated_inverse(sub.total_chern()),
                         total.character() - sub.character());
}

namespace {

BundleChernData sum_of_lines(const VarietySpec& variety, const std::vector<std::pair<GradedClass, long>>& lines) {
  std::vector<WeightedBundle> parts;
  parts.reserve(lines.size());
  for (const auto& [divisor, mult] : lines) {
    parts.push_back({line_bundle_data(LineBundleClass(divisor)), mult});
  }
  return whitney_sum(variety, parts);
}

// T P^n restricted to a 3-fold, cut down by the normal bundle O(d_1) + ... + O(d_l):
// 0 -> O -> O(1)^{n+1} -> T P^n -> 0 and 0 -> TX -> T P^n|X -> N -> 0.
BundleChernData complete_intersection_tangent(const VarietySpec& variety, int ambient_dim,
                                              const std::vector<int>& degrees) {
  const GradedClass h = GradedClass::hyperplane(variety);
  const BundleChernData ambient =
      whitney_quotient(sum_of_lines(variety, {{h, ambient_dim + 1}}), trivial_bundle_data(variety, 1));
  std::vector<std::pair<GradedClass, long>> normal;
  for (int d : degrees) normal.emplace_back(h * Rational(d), 1);
  return whitney_quotient(ambient, sum_of_lines(variety, normal));
}

}  // namespace

BundleChernData tangent_data(const VarietySpec& variety) {
  switch (variety.family()) {
    case Family::hypersurface:
      return complete_intersection_tangent(variety, 4, {variety.as<Hypersurface3Fold>().d});
    case Family::cicy: {
      const auto& c = variety.as<Cicy3Fold>();
      return complete_intersection_tangent(variety, c.n, c.degrees);
    }
    case Family::blowup: {
      // c_1 = -K, c_2 = Euler characteristic 3 + n.
      const int n = variety.as<BlowupPlane>().n;
      const GradedClass c1 = -canonical_class(variety).divisor();
      const GradedClass c2 = GradedClass::point(variety) * Rational(3 + n);
      GradedClass ch2 = c1 * c1 - c2 * Rational(2);
      ch2 *= make_rational(1, 2);
      return BundleChernData(2, GradedClass::one(variety) + c1 + c2, GradedClass::constant(variety, 2) + c1 + ch2);
    }
    case Family::product: {
      // Euler sequence 0 -> O^2 -> O(1,0)^{n+1} + O(0,1)^{m+1} -> TX -> 0.
      const auto& p = variety.as<ProductPP>();
      const BundleChernData middle =
          sum_of_lines(variety, {{GradedClass::h1(variety), p.n + 1}, {GradedClass::h2(variety), p.m + 1}});
      return whitney_quotient(middle, trivial_bundle_data(variety, 2));
    }
  }
  throw std::logic_error("unknown variety family");
}

LineBundleClass canonical_class(const VarietySpec& variety) {
  switch (variety.family()) {
    case Family::hypersurface:
      return LineBundleClass(GradedClass::hyperplane(variety) * Rational(variety.as<Hypersurface3Fold>().d - 5));
    case Family::cicy:
      return LineBundleClass::trivial(variety);
    case Family::blowup: {
      GradedClass k = GradedClass::hyperplane(variety) * Rational(-3);
      for (int i = 1; i <= variety.as<BlowupPlane>().n; ++i) k += GradedClass::exceptional(variety, i);
      return LineBundleClass(std::move(k));
    }
    case Family::product: {
      const auto& p = variety.as<ProductPP>();
      return LineBundleClass(GradedClass::h1(variety) * Rational(-(p.n + 1)) +
                             GradedClass::h2(variety) * Rational(-(p.m + 1)));
    }
  }
  throw std::logic_error("unknown variety family");
}

}  // namespace omalous
