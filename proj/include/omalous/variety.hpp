#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace omalous {

/// Operands over different varieties were combined.
class VarietyMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction was asked for outside the range where it is defined.
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Smooth 3-fold of degree d in P^4.
struct Hypersurface3Fold {
  int d;
  bool operator==(const Hypersurface3Fold&) const = default;
};

/// Calabi-Yau complete intersection 3-fold in P^n cut out by hypersurfaces
/// of the given degrees.
struct Cicy3Fold {
  int n;
  std::vector<int> degrees;
  bool operator==(const Cicy3Fold&) const = default;
};

/// P^2 blown up at n distinct points.
struct BlowupPlane {
  int n;
  bool operator==(const BlowupPlane&) const = default;
};

/// P^n x P^m.
struct ProductPP {
  int n;
  int m;
  bool operator==(const ProductPP&) const = default;
};

enum class Family { hypersurface, cicy, blowup, product };

class VarietySpec {
 public:
  using Data = std::variant<Hypersurface3Fold, Cicy3Fold, BlowupPlane, ProductPP>;

  // Validating factories; throw std::invalid_argument on bad parameters.
  static VarietySpec hypersurface(int d);
  static VarietySpec cicy(int n, std::vector<int> degrees);
  static VarietySpec blowup(int n);
  static VarietySpec product(int n, int m);

  Family family() const { return static_cast<Family>(data_.index()); }
  const Data& data() const { return data_; }

  template <class T>
  const T& as() const {
    return std::get<T>(data_);
  }

  int dimension() const;

  /// Value of the top-degree pairing on the canonical top monomial:
  /// d for X_d, the product of degrees for a CICY, 1 otherwise.
  long top_normalization() const;

  /// Short human label, e.g. "X_5 in P^4", "P^2 x P^3".
  std::string label() const;

  bool operator==(const VarietySpec&) const = default;

 private:
  explicit VarietySpec(Data data) : data_(std::move(data)) {}
  Data data_;
};

void require_same_variety(const VarietySpec& a, const VarietySpec& b);

}  // namespace omalous
