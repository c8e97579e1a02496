#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "omalous/serialize.hpp"

namespace omalous {

struct IntRange {
  int lo;
  int hi;
  bool operator==(const IntRange&) const = default;
};

/// Parameter ranges of the reproducibility catalog.
struct CatalogRanges {
  int d_max = 10;
  IntRange blowup_n{3, 6};
  IntRange blowup_r{4, 6};
  IntRange product{1, 3};  // both n and m

  bool operator==(const CatalogRanges&) const = default;
};

/// Applies overrides of the form "d_max=12,blowup_n=3..8,blowup_r=4..5,product=1..2"
/// (',' or ';' separated; unknown keys and malformed values throw
/// std::invalid_argument).
CatalogRanges parse_catalog_ranges(std::string_view spec, CatalogRanges base = {});

struct CatalogEntry {
  std::string id;
  MonadSpec monad;
  OmalityReport report;
  StabilityTag tag;
  std::string provenance;
  Json parameters;
};

/// Quintic monad, linear monads on X_d up to d_max, the five CICY rows,
/// blow-up monads over the n x r grid and the P^n x P^m cokernels (a = 2).
/// Every entry is omalous; std::logic_error otherwise.
std::vector<CatalogEntry> build_catalog(const CatalogRanges& ranges);

Json catalog_to_json(const std::vector<CatalogEntry>& entries, const CatalogRanges& ranges);

/// Pretty-printed, newline-terminated; byte-identical across runs.
std::string render_catalog(const CatalogRanges& ranges);

}  // namespace omalous
