#include "omalous/search.hpp"

#include <exception>
#include <optional>

namespace omalous {

namespace {

OmalityReport compare_with_tangent(const BundleChernData& bundle, const BundleChernData& tangent) {
  require_same_variety(bundle.variety(), tangent.variety());
  OmalityReport report{bundle.rank(), tangent.c(1), bundle.c(1), tangent.c(2), bundle.c(2),
                       bundle.c(2) - tangent.c(2), false};
  report.omalous = report.c1_actual == report.c1_target && report.defect.is_zero();
  return report;
}

// Runs body(i) for i in [0, count) on OpenMP threads; the first exception
// thrown by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(long count, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(omalous_parallel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

std::optional<HypersurfaceSolution> hypersurface_candidate(int d) {
  const long l = 5 - d;
  const long twice_c = static_cast<long>(d) * d + d - 10;
  if (twice_c < 0 || twice_c % 2 != 0) return std::nullopt;
  const long c = twice_c / 2;
  const VarietySpec v = VarietySpec::hypersurface(d);
  const OmalityReport report = is_omalous(cohomology_data(linear_monad(d, l, c)), v);
  if (!report.omalous) return std::nullopt;
  return HypersurfaceSolution{d, l, c, hypersurface_stability(d, l, c)};
}

std::vector<HypersurfaceSolution> compact(std::vector<std::optional<HypersurfaceSolution>>& slots) {
  std::vector<HypersurfaceSolution> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

// Omalous cokernels O^a -> O(1,0)^b + O(0,1)^c for one (b, c), increasing a.
std::vector<ProductSolution> product_cell(const VarietySpec& v, const BundleChernData& tangent, long b, long c) {
  std::vector<ProductSolution> out;
  const TermSpec total(v, {{LineBundleClass(GradedClass::h1(v)), b}, {LineBundleClass(GradedClass::h2(v)), c}});
  for (long a = 0; a <= b + c - 1; ++a) {
    const BundleChernData q = cokernel_data(TermSpec::trivial(v, a), total);
    if (compare_with_tangent(q, tangent).omalous) {
      out.push_back({a, b, c, StabilityTag::stable("Thm 8, stability of syzygy bundles on products (L-stability of Q*(0,1))")});
    }
  }
  return out;
}

void check_product_solution_set(int n, int m, const std::vector<ProductSolution>& found) {
  bool exact = static_cast<long>(found.size()) == static_cast<long>(n) + m + 2;
  for (std::size_t i = 0; exact && i < found.size(); ++i) {
    exact = found[i].a == static_cast<long>(i) && found[i].b == n + 1 && found[i].c == m + 1;
  }
  if (!exact) {
    throw std::logic_error("product scan on P^" + std::to_string(n) + " x P^" + std::to_string(m) +
                           " did not return exactly (a, n+1, m+1), 0 <= a <= n+m+1");
  }
}

void require_bound(int n, int m, int bound) {
  if (bound < n + m + 2) {
    throw std::invalid_argument("product search bound " + std::to_string(bound) + " must be >= n + m + 2 = " +
                                std::to_string(n + m + 2));
  }
}

}  // namespace

OmalityReport is_omalous(const BundleChernData& bundle, const VarietySpec& variety) {
  require_same_variety(bundle.variety(), variety);
  return compare_with_tangent(bundle, tangent_data(variety));
}

StabilityTag::StabilityTag(Stability kind, std::string citation) : kind_(kind), citation_(std::move(citation)) {
  if (kind_ != Stability::unknown && citation_.empty()) {
    throw std::invalid_argument("a stability claim needs a citation");
  }
}

StabilityTag StabilityTag::stable(std::string citation) { return StabilityTag(Stability::stable, std::move(citation)); }

StabilityTag StabilityTag::semi_stable(std::string citation) {
  return StabilityTag(Stability::semi_stable, std::move(citation));
}

std::string StabilityTag::name() const {
  switch (kind_) {
    case Stability::stable:
      return "stable";
    case Stability::semi_stable:
      return "semi-stable";
    case Stability::unknown:
      return "unknown";
  }
  return "unknown";
}

StabilityTag hypersurface_stability(int d, long l, long c) {
  if ((d == 3 && l == 2 && c == 1) || (d == 4 && l == 1 && c == 5)) {
    return StabilityTag::stable("Thm 7, linear monads on hypersurfaces (stability)");
  }
  if (d == 5 && l == 0 && c == 10) return StabilityTag::semi_stable("Thm 3, linear monads on hypersurfaces (instanton semi-stability)");
  return StabilityTag::unknown();
}

std::vector<HypersurfaceSolution> hypersurface_scan_serial(int d_max) {
  std::vector<std::optional<HypersurfaceSolution>> slots(std::max(d_max, 0));
  for (int d = 1; d <= d_max; ++d) slots[d - 1] = hypersurface_candidate(d);
  return compact(slots);
}

std::vector<HypersurfaceSolution> hypersurface_scan(int d_max) {
  std::vector<std::optional<HypersurfaceSolution>> slots(std::max(d_max, 0));
  parallel_for(d_max, [&](long i) { slots[i] = hypersurface_candidate(static_cast<int>(i) + 1); });
  return compact(slots);
}

std::vector<HypersurfaceSolution> hypersurface_closed_form(int d_max) {
  std::vector<HypersurfaceSolution> out;
  for (long k = 7;; k += 2) {
    const long d = (k - 1) / 2;
    if (d > d_max) break;
    const long l = (11 - k) / 2;
    const long c = (k * k - 41) / 8;
    out.push_back({static_cast<int>(d), l, c, hypersurface_stability(static_cast<int>(d), l, c)});
  }
  return out;
}

std::vector<HypersurfaceSolution> hypersurface_solutions(int d_max) {
  auto scanned = hypersurface_scan(d_max);
  if (scanned != hypersurface_closed_form(d_max)) {
    throw std::logic_error("hypersurface scan disagrees with the odd-k parametrization at d_max = " +
                           std::to_string(d_max));
  }
  return scanned;
}

std::vector<VarietySpec> cicy_varieties() {
  return {VarietySpec::cicy(4, {5}), VarietySpec::cicy(5, {3, 3}), VarietySpec::cicy(5, {4, 2}),
          VarietySpec::cicy(6, {2, 2, 3}), VarietySpec::cicy(7, {2, 2, 2, 2})};
}

long cicy_closed_form_c(const Cicy3Fold& cicy) {
  long squares = 0;
  for (int d : cicy.degrees) squares += static_cast<long>(d) * d;
  return (squares - (cicy.n + 1)) / 2;
}

std::vector<CicyRow> cicy_catalog() {
  std::vector<CicyRow> rows;
  for (const VarietySpec& v : cicy_varieties()) {
    const BundleChernData tangent = tangent_data(v);
    if (!tangent.c(1).is_zero()) throw std::logic_error("CICY " + v.label() + " is not Calabi-Yau");
    const long c = to_long(tangent.c(2).coefficient(Monomial::hyperplane_power(2)));
    if (c != cicy_closed_form_c(v.as<Cicy3Fold>())) {
      throw std::logic_error("c_2 quotient disagrees with closed form on " + v.label());
    }
    MonadSpec monad = cicy_monad(v);
    OmalityReport report = compare_with_tangent(cohomology_data(monad), tangent);
    if (!report.omalous) throw std::logic_error("CICY monad on " + v.label() + " is not omalous");
    rows.push_back({v, c, std::move(monad), std::move(report),
                    StabilityTag::stable("Main Theorem, instanton bundles on Fano and Calabi-Yau 3-folds")});
  }
  return rows;
}

BlowupResult blowup_family(int n, long rank) {
  const MonadDimensions dims = monad_dimensions(n, rank);
  MonadSpec monad = blowup_monad(n, rank);
  BundleChernData cohomology = cohomology_data(monad);
  OmalityReport report = is_omalous(cohomology, monad.variety());
  return {std::move(monad), dims, std::move(cohomology), std::move(report)};
}

std::vector<ProductSolution> product_solutions_serial(int n, int m, int bound) {
  require_bound(n, m, bound);
  const VarietySpec v = VarietySpec::product(n, m);
  const BundleChernData tangent = tangent_data(v);
  std::vector<ProductSolution> out;
  for (long b = 0; b <= bound; ++b) {
    for (long c = 0; c <= bound; ++c) {
      auto cell = product_cell(v, tangent, b, c);
      out.insert(out.end(), cell.begin(), cell.end());
    }
  }
  check_product_solution_set(n, m, out);
  return out;
}

std::vector<ProductSolution> product_solutions(int n, int m, int bound) {
  require_bound(n, m, bound);
  const VarietySpec v = VarietySpec::product(n, m);
  const BundleChernData tangent = tangent_data(v);
  const long side = bound + 1;
  std::vector<std::vector<ProductSolution>> cells(side * side);
  parallel_for(side * side, [&](long i) { cells[i] = product_cell(v, tangent, i / side, i % side); });
  std::vector<ProductSolution> out;
  for (auto& cell : cells) out.insert(out.end(), cell.begin(), cell.end());
  check_product_solution_set(n, m, out);
  return out;
}

}  // namespace omalous
