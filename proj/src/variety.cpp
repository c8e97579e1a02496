#include "omalous/variety.hpp"

#include <numeric>

namespace omalous {

VarietySpec VarietySpec::hypersurface(int d) {
  if (d < 1) throw std::invalid_argument("hypersurface degree must be >= 1");
  return VarietySpec(Hypersurface3Fold{d});
}

VarietySpec VarietySpec::cicy(int n, std::vector<int> degrees) {
  if (degrees.empty()) throw std::invalid_argument("complete intersection needs at least one degree");
  for (int d : degrees) {
    if (d < 2) throw std::invalid_argument("complete intersection degrees must be >= 2");
  }
  if (static_cast<int>(degrees.size()) != n - 3) {
    throw std::invalid_argument("complete intersection in P^" + std::to_string(n) + " must have " +
                                std::to_string(n - 3) + " equations to be a 3-fold");
  }
  const int sum = std::accumulate(degrees.begin(), degrees.end(), 0);
  if (sum != n + 1) {
    throw std::invalid_argument("Calabi-Yau condition violated: sum of degrees " + std::to_string(sum) +
                                " != n+1 = " + std::to_string(n + 1));
  }
  return VarietySpec(Cicy3Fold{n, std::move(degrees)});
}

VarietySpec VarietySpec::blowup(int n) {
  if (n < 0) throw std::invalid_argument("number of blown-up points must be >= 0");
  return VarietySpec(BlowupPlane{n});
}

VarietySpec VarietySpec::product(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("product factors need n, m >= 1");
  return VarietySpec(ProductPP{n, m});
}

int VarietySpec::dimension() const {
  switch (family()) {
    case Family::hypersurface:
    case Family::cicy:
      return 3;
    case Family::blowup:
      return 2;
    case Family::product:
      return as<ProductPP>().n + as<ProductPP>().m;
  }
  return 0;
}

long VarietySpec::top_normalization() const {
  switch (family()) {
    case Family::hypersurface:
      return as<Hypersurface3Fold>().d;
    case Family::cicy: {
      long prod = 1;
      for (int d : as<Cicy3Fold>().degrees) prod *= d;
      return prod;
    }
    default:
      return 1;
  }
}

std::string VarietySpec::label() const {
  switch (family()) {
    case Family::hypersurface:
      return "X_" + std::to_string(as<Hypersurface3Fold>().d) + " in P^4";
    case Family::cicy: {
      const auto& c = as<Cicy3Fold>();
      std::string out = "(";
      for (std::size_t i = 0; i < c.degrees.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c.degrees[i]);
      }
      return out + ") in P^" + std::to_string(c.n);
    }
    case Family::blowup:
      return "P^2 blown up at " + std::to_string(as<BlowupPlane>().n) + " points";
    case Family::product:
      return "P^" + std::to_string(as<ProductPP>().n) + " x P^" + std::to_string(as<ProductPP>().m);
  }
  return {};
}

void require_same_variety(const VarietySpec& a, const VarietySpec& b) {
  if (!(a == b)) throw VarietyMismatch("variety mismatch: " + a.label() + " vs " + b.label());
}

}  // namespace omalous
