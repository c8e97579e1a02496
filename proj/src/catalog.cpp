#include "omalous/catalog.hpp"

#include <charconv>

namespace omalous {

namespace {

int parse_int(std::string_view text, std::string_view key) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad integer '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

IntRange parse_range(std::string_view text, std::string_view key) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, key);
    return {v, v};
  }
  IntRange r{parse_int(text.substr(0, dots), key), parse_int(text.substr(dots + 2), key)};
  if (r.lo > r.hi) throw std::invalid_argument("empty range for " + std::string(key));
  return r;
}

void add_entry(std::vector<CatalogEntry>& out, std::string id, MonadSpec monad, StabilityTag tag, Json parameters) {
  OmalityReport report = is_omalous(cohomology_data(monad), monad.variety());
  if (!report.omalous) throw std::logic_error("catalog entry " + id + " is not omalous");
  std::string provenance = monad.provenance();
  out.push_back({std::move(id), std::move(monad), std::move(report), std::move(tag), std::move(provenance),
                 std::move(parameters)});
}

}  // namespace

CatalogRanges parse_catalog_ranges(std::string_view spec, CatalogRanges base) {
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find_first_of(",;", start);
    if (end == std::string_view::npos) end = spec.size();
    const std::string_view item = spec.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "d_max") {
      base.d_max = parse_int(value, key);
    } else if (key == "blowup_n") {
      base.blowup_n = parse_range(value, key);
    } else if (key == "blowup_r") {
      base.blowup_r = parse_range(value, key);
    } else if (key == "product") {
      base.product = parse_range(value, key);
    } else {
      throw std::invalid_argument("unknown catalog range key '" + std::string(key) + "'");
    }
  }
  return base;
}

std::vector<CatalogEntry> build_catalog(const CatalogRanges& ranges) {
  std::vector<CatalogEntry> out;

  add_entry(out, "quintic", quintic_monad(), StabilityTag::stable("Main Theorem, instanton bundles on Fano and Calabi-Yau 3-folds"),
            Json::object());

  for (const auto& s : hypersurface_solutions(ranges.d_max)) {
    add_entry(out, "hypersurface-d" + std::to_string(s.d), linear_monad(s.d, s.l, s.c), s.tag,
              {{"d", s.d}, {"l", s.l}, {"c", s.c}});
  }

  for (auto& row : cicy_catalog()) {
    std::string id = "cicy-P" + std::to_string(row.variety.as<Cicy3Fold>().n);
    for (int d : row.variety.as<Cicy3Fold>().degrees) id += "-" + std::to_string(d);
    add_entry(out, std::move(id), std::move(row.monad), std::move(row.tag), {{"c", row.c}});
  }

  for (int n = ranges.blowup_n.lo; n <= ranges.blowup_n.hi; ++n) {
    for (int r = ranges.blowup_r.lo; r <= ranges.blowup_r.hi; ++r) {
      BlowupResult res = blowup_family(n, r);
      add_entry(out, "blowup-n" + std::to_string(n) + "-r" + std::to_string(r), std::move(res.monad),
                StabilityTag::unknown(), {{"n", n}, {"r", r}, {"dimensions", dimensions_to_json(res.dims)}});
    }
  }

  for (int n = ranges.product.lo; n <= ranges.product.hi; ++n) {
    for (int m = ranges.product.lo; m <= ranges.product.hi; ++m) {
      add_entry(out, "product-P" + std::to_string(n) + "xP" + std::to_string(m),
                product_cokernel_monad(n, m, 2, n + 1, m + 1),
                StabilityTag::stable("Thm 8, stability of syzygy bundles on products (L-stability of Q*(0,1))"),
                {{"a", 2}, {"b", n + 1}, {"c", m + 1}});
    }
  }
  return out;
}

Json catalog_to_json(const std::vector<CatalogEntry>& entries, const CatalogRanges& ranges) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["ranges"] = {{"d_max", ranges.d_max},
                   {"blowup_n", {ranges.blowup_n.lo, ranges.blowup_n.hi}},
                   {"blowup_r", {ranges.blowup_r.lo, ranges.blowup_r.hi}},
                   {"product", {ranges.product.lo, ranges.product.hi}}};
  Json list = Json::array();
  for (const auto& e : entries) {
    Json j;
    j["id"] = e.id;
    j["provenance"] = e.provenance;
    j["parameters"] = e.parameters;
    j["monad"] = monad_to_json(e.monad);
    j["report"] = report_to_json(e.report);
    j["tag"] = tag_to_json(e.tag);
    list.push_back(std::move(j));
  }
  doc["entries"] = std::move(list);
  return doc;
}

std::string render_catalog(const CatalogRanges& ranges) {
  return catalog_to_json(build_catalog(ranges), ranges).dump(2) + "\n";
}

}  // namespace omalous
