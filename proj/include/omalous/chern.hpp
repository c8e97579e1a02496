#pragma once

#include <span>
#include <string_view>

#include "omalous/chow.hpp"

namespace omalous {

/// Divisor class of a line bundle: homogeneous of degree 1, integer coefficients.
class LineBundleClass {
 public:
  explicit LineBundleClass(GradedClass divisor);

  static LineBundleClass trivial(const VarietySpec& variety) { return LineBundleClass(GradedClass(variety)); }
  static LineBundleClass parse(const VarietySpec& variety, std::string_view text);

  const GradedClass& divisor() const { return divisor_; }
  const VarietySpec& variety() const { return divisor_.variety(); }
  std::string to_string() const { return divisor_.to_string(); }

  bool operator==(const LineBundleClass&) const = default;

 private:
  GradedClass divisor_;
};

/// Rank, total Chern class and Chern character of a (possibly virtual) bundle.
///
/// Construction checks that ch_0 = rank, ch_1 = c_1 and ch_2 = (c_1^2 - 2 c_2)/2.
class BundleChernData {
 public:
  BundleChernData(long rank, GradedClass total_chern, GradedClass character);

  long rank() const { return rank_; }
  const GradedClass& total_chern() const { return total_chern_; }
  const GradedClass& character() const { return character_; }
  const VarietySpec& variety() const { return total_chern_.variety(); }

  GradedClass c(int k) const { return total_chern_.part(k); }
  GradedClass ch(int k) const { return character_.part(k); }

  bool operator==(const BundleChernData&) const = default;

 private:
  long rank_;
  GradedClass total_chern_;
  GradedClass character_;
};

struct WeightedBundle {
  BundleChernData data;
  long multiplicity;
};

enum class RankPolicy { positive, allow_zero };

BundleChernData line_bundle_data(const LineBundleClass& line);

BundleChernData trivial_bundle_data(const VarietySpec& variety, long rank);

/// Direct sum with multiplicities. `variety` fixes the ring for an empty list.
BundleChernData whitney_sum(const VarietySpec& variety, std::span<const WeightedBundle> parts);

/// Data of Q in 0 -> sub -> total -> Q -> 0. Throws std::domain_error when
/// the rank would go negative, or hit zero under RankPolicy::positive.
BundleChernData whitney_quotient(const BundleChernData& total, const BundleChernData& sub,
                                 RankPolicy policy = RankPolicy::positive);

BundleChernData tangent_data(const VarietySpec& variety);

/// K_X. Always equal to -c_1(TX).
LineBundleClass canonical_class(const VarietySpec& variety);

}  // namespace omalous
