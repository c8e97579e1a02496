#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "omalous/catalog.hpp"
#include "omalous/polarization.hpp"

namespace omalous::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VarietyFlags {
  std::optional<int> hypersurface;
  std::vector<int> cicy;
  std::optional<int> blowup;
  std::vector<int> product;

  void attach(CLI::App* cmd) {
    auto* group = cmd->add_option_group("variety", "exactly one variety");
    group->add_option("--hypersurface", hypersurface, "3-fold of degree D in P^4")->type_name("D");
    group->add_option("--cicy", cicy, "CICY 3-fold: ambient n then degrees")->type_name("N D1 ...")->expected(2, 5);
    group->add_option("--blowup", blowup, "P^2 blown up at N points")->type_name("N");
    group->add_option("--product", product, "P^N x P^M")->type_name("N M")->expected(2);
    group->require_option(1);
  }

  VarietySpec resolve() const {
    if (hypersurface) return VarietySpec::hypersurface(*hypersurface);
    if (blowup) return VarietySpec::blowup(*blowup);
    if (!product.empty()) return VarietySpec::product(product.at(0), product.at(1));
    if (!cicy.empty()) return VarietySpec::cicy(cicy.front(), std::vector<int>(cicy.begin() + 1, cicy.end()));
    throw std::invalid_argument("no variety given");
  }
};

std::vector<long> parse_csv_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer list '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad integer list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::vector<long> exceptional_part(const std::vector<long>& values, std::size_t skip, int n) {
  if (values.size() == skip) return std::vector<long>(n, 0);
  if (values.size() != skip + static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " exceptional coefficients");
  }
  return {values.begin() + static_cast<long>(skip), values.end()};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern data and omality checks for monad bundles", "omalous"};
  app.require_subcommand(1);

  // tangent
  VarietyFlags tangent_variety;
  auto* tangent = app.add_subcommand("tangent", "Chern classes of TX and the canonical class");
  tangent_variety.attach(tangent);

  // check
  std::string check_path;
  auto* check = app.add_subcommand("check", "omality report for a monad JSON file");
  check->add_option("--monad", check_path, "monad JSON file")->required();

  // search
  auto* search = app.add_subcommand("search", "enumerate omalous families");
  search->require_subcommand(1);
  bool serial = false;
  search->add_flag("--serial", serial, "use the serial reference scan");
  int d_max = 0;
  auto* search_hyp = search->add_subcommand("hypersurface", "linear monads on X_d");
  search_hyp->add_option("--d-max", d_max)->required();
  int prod_n = 0;
  int prod_m = 0;
  int bound = 0;
  auto* search_prod = search->add_subcommand("product", "cokernels on P^n x P^m");
  search_prod->add_option("--n", prod_n)->required();
  search_prod->add_option("--m", prod_m)->required();
  search_prod->add_option("--bound", bound)->required();

  // rr
  int rr_n = 0;
  std::optional<long> rr_rank;
  std::string rr_sheaf;
  std::string rr_twist;
  auto* rr = app.add_subcommand("rr", "Riemann-Roch on P^2 blown up at n points");
  rr->add_option("--n", rr_n, "number of blown-up points")->required();
  auto* rr_rank_opt = rr->add_option("--r", rr_rank, "rank of the omalous bundle (monad dimensions)");
  auto* rr_sheaf_opt = rr->add_option("--sheaf", rr_sheaf, "r,a,k[,a1,...,an]");
  rr->add_option("--twist", rr_twist, "p[,q1,...,qn]")->needs(rr_sheaf_opt);
  rr_rank_opt->excludes(rr_sheaf_opt);

  // slope
  VarietyFlags slope_variety;
  bool slope_tangent = false;
  std::string slope_monad;
  std::string slope_c1;
  long slope_rank = 0;
  std::string slope_pol;
  auto* slope_cmd = app.add_subcommand("slope", "degree and slope with respect to a polarization");
  slope_variety.attach(slope_cmd);
  auto* source = slope_cmd->add_option_group("bundle", "bundle source");
  source->add_flag("--tangent", slope_tangent, "the tangent bundle");
  source->add_option("--monad", slope_monad, "cohomology of a monad JSON file");
  auto* c1_opt = source->add_option("--c1", slope_c1, "first Chern class, e.g. \"3*h1 + 4*h2\"");
  slope_cmd->add_option("--rank", slope_rank)->needs(c1_opt);
  source->require_option(1);
  slope_cmd->add_option("--pol", slope_pol, "polarization class (default H or h1 + h2)");

  // catalog
  std::string catalog_out;
  std::string catalog_ranges;
  auto* catalog = app.add_subcommand("catalog", "write the reproducibility catalog");
  catalog->add_option("--out", catalog_out, "output path")->required();
  catalog->add_option("--ranges", catalog_ranges, "overrides, e.g. d_max=12,blowup_n=3..8");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (tangent->parsed()) {
      const VarietySpec v = tangent_variety.resolve();
      const BundleChernData t = tangent_data(v);
      Json j;
      j["schema"] = kSchemaVersion;
      j["variety"] = variety_to_json(v);
      j["rank"] = t.rank();
      j["c1"] = t.c(1).to_string();
      j["c2"] = t.c(2).to_string();
      j["canonical"] = canonical_class(v).to_string();
      out << j.dump(2) << "\n";
      return kOk;
    }
    if (check->parsed()) {
      const MonadSpec monad = monad_from_json(read_json_file(check_path));
      const OmalityReport report = is_omalous(cohomology_data(monad), monad.variety());
      out << report_to_json(report).dump(2) << "\n";
      return report.omalous ? kOk : kNegative;
    }
    if (search_hyp->parsed()) {
      if (serial) {
        // The serial path still cross-checks against the closed form.
        auto found = hypersurface_scan_serial(d_max);
        if (found != hypersurface_closed_form(d_max)) throw std::logic_error("scan disagrees with closed form");
        Json list = Json::array();
        for (const auto& s : found) list.push_back(to_json(s));
        out << list.dump(2) << "\n";
        return kOk;
      }
      Json list = Json::array();
      for (const auto& s : hypersurface_solutions(d_max)) list.push_back(to_json(s));
      out << list.dump(2) << "\n";
      return kOk;
    }
    if (search_prod->parsed()) {
      const auto found =
          serial ? product_solutions_serial(prod_n, prod_m, bound) : product_solutions(prod_n, prod_m, bound);
      Json list = Json::array();
      for (const auto& s : found) list.push_back(to_json(s));
      out << list.dump(2) << "\n";
      return kOk;
    }
    if (rr->parsed()) {
      Json j;
      j["schema"] = kSchemaVersion;
      j["n"] = rr_n;
      if (rr_rank) {
        j["r"] = *rr_rank;
        const Json dims = dimensions_to_json(monad_dimensions(rr_n, *rr_rank));
        for (const auto& [key, value] : dims.items()) j[key] = value;
      } else if (!rr_sheaf.empty()) {
        if (rr_n < 0) throw std::invalid_argument("--n must be >= 0");
        const auto s = parse_csv_longs(rr_sheaf);
        if (s.size() < 3) throw std::invalid_argument("--sheaf needs r,a,k");
        const BlowupSheafData sheaf{s[0], s[1], exceptional_part(s, 3, rr_n), s[2]};
        TwistSpec twist = TwistSpec::none(rr_n);
        if (!rr_twist.empty()) {
          const auto t = parse_csv_longs(rr_twist);
          twist = {t[0], exceptional_part(t, 1, rr_n)};
        }
        j["chi"] = euler_char(sheaf, twist);
        j["todd_chi"] = rational_to_json(todd_euler_char(sheaf, twist));
      } else {
        throw std::invalid_argument("rr needs --r or --sheaf");
      }
      out << j.dump(2) << "\n";
      return kOk;
    }
    if (slope_cmd->parsed()) {
      const VarietySpec v = slope_variety.resolve();
      std::optional<BundleChernData> bundle;
      if (slope_tangent) {
        bundle = tangent_data(v);
      } else if (!slope_monad.empty()) {
        const MonadSpec monad = monad_from_json(read_json_file(slope_monad));
        require_same_variety(monad.variety(), v);
        bundle = cohomology_data(monad);
      }
      const LineBundleClass pol =
          slope_pol.empty() ? default_polarization(v) : LineBundleClass::parse(v, slope_pol);
      Json j;
      j["schema"] = kSchemaVersion;
      j["variety"] = variety_to_json(v);
      j["polarization"] = pol.to_string();
      if (bundle) {
        j["rank"] = bundle->rank();
        j["c1"] = bundle->c(1).to_string();
        j["degree"] = rational_to_json(degree(bundle->c(1), pol));
        j["slope"] = rational_to_json(slope(*bundle, pol));
      } else {
        const GradedClass c1 = parse_class(v, slope_c1);
        j["rank"] = slope_rank;
        j["c1"] = c1.to_string();
        j["degree"] = rational_to_json(degree(c1, pol));
        if (slope_rank > 0) {
          Rational mu = degree(c1, pol) / Rational(slope_rank);
          mu.canonicalize();
          j["slope"] = rational_to_json(mu);
        } else {
          throw std::domain_error("slope needs --rank >= 1");
        }
      }
      if (v.family() == Family::product) {
        const auto& p = v.as<ProductPP>();
        j["l_coefficient"] = l_coefficient(p.n, p.m);
        j["l_coefficient_quoted"] = rational_to_json(l_coefficient_quoted(p.n, p.m));
      }
      out << j.dump(2) << "\n";
      return kOk;
    }
    if (catalog->parsed()) {
      CatalogRanges ranges;
      if (const char* env = std::getenv("OMALOUS_CATALOG_RANGES")) ranges = parse_catalog_ranges(env, ranges);
      if (!catalog_ranges.empty()) ranges = parse_catalog_ranges(catalog_ranges, ranges);
      const std::string text = render_catalog(ranges);
      std::ofstream file(catalog_out, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open " + catalog_out + " for writing");
      file << text;
      file.close();
      if (!file) throw IoError("failed writing " + catalog_out);
      return kOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace omalous::cli
