#include "omalous/serialize.hpp"

namespace omalous {

namespace {

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

}  // namespace

Json rational_to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Json variety_to_json(const VarietySpec& variety) {
  Json j;
  switch (variety.family()) {
    case Family::hypersurface:
      j["family"] = "hypersurface";
      j["d"] = variety.as<Hypersurface3Fold>().d;
      break;
    case Family::cicy:
      j["family"] = "cicy";
      j["n"] = variety.as<Cicy3Fold>().n;
      j["degrees"] = variety.as<Cicy3Fold>().degrees;
      break;
    case Family::blowup:
      j["family"] = "blowup";
      j["n"] = variety.as<BlowupPlane>().n;
      break;
    case Family::product:
      j["family"] = "product";
      j["n"] = variety.as<ProductPP>().n;
      j["m"] = variety.as<ProductPP>().m;
      break;
  }
  return j;
}

VarietySpec variety_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw std::invalid_argument("variety must be an object with a string 'family'");
  }
  const std::string family = j.at("family").get<std::string>();
  if (family == "hypersurface") return VarietySpec::hypersurface(int_field(j, "d"));
  if (family == "blowup") return VarietySpec::blowup(int_field(j, "n"));
  if (family == "product") return VarietySpec::product(int_field(j, "n"), int_field(j, "m"));
  if (family == "cicy") {
    if (!j.contains("degrees") || !j.at("degrees").is_array()) throw std::invalid_argument("cicy needs 'degrees'");
    std::vector<int> degrees;
    for (const auto& d : j.at("degrees")) {
      if (!d.is_number_integer()) throw std::invalid_argument("cicy degrees must be integers");
      degrees.push_back(d.get<int>());
    }
    return VarietySpec::cicy(int_field(j, "n"), std::move(degrees));
  }
  throw std::invalid_argument("unknown variety family '" + family + "'");
}

Json term_to_json(const TermSpec& term) {
  Json out = Json::array();
  for (const auto& s : term.summands()) out.push_back({{"divisor", s.line.to_string()}, {"mult", s.multiplicity}});
  return out;
}

TermSpec term_from_json(const VarietySpec& variety, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("monad term must be an array");
  std::vector<Summand> summands;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("divisor") || !entry.at("divisor").is_string()) {
      throw std::invalid_argument("summand needs a string 'divisor'");
    }
    if (!entry.contains("mult") || !entry.at("mult").is_number_integer()) {
      throw std::invalid_argument("summand needs an integer 'mult'");
    }
    summands.push_back(
        {LineBundleClass::parse(variety, entry.at("divisor").get<std::string>()), entry.at("mult").get<long>()});
  }
  return TermSpec(variety, std::move(summands));
}

Json monad_to_json(const MonadSpec& monad) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["variety"] = variety_to_json(monad.variety());
  j["m0"] = term_to_json(monad.m0());
  j["m1"] = term_to_json(monad.m1());
  j["m2"] = term_to_json(monad.m2());
  j["provenance"] = monad.provenance();
  return j;
}

MonadSpec monad_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("monad document must be an object");
  if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema " + j.at("schema").dump());
  }
  if (!j.contains("variety")) throw std::invalid_argument("monad document needs 'variety'");
  const VarietySpec v = variety_from_json(j.at("variety"));
  auto term = [&](const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("monad document needs '") + key + "'");
    return term_from_json(v, j.at(key));
  };
  std::string provenance;
  if (j.contains("provenance")) {
    if (!j.at("provenance").is_string()) throw std::invalid_argument("'provenance' must be a string");
    provenance = j.at("provenance").get<std::string>();
  }
  return MonadSpec(term("m0"), term("m1"), term("m2"), std::move(provenance));
}

Json chern_to_json(const BundleChernData& data) {
  return {{"rank", data.rank()},
          {"total_chern", data.total_chern().to_string()},
          {"character", data.character().to_string()}};
}

Json report_to_json(const OmalityReport& report) {
  return {{"schema", kSchemaVersion},
          {"rank", report.rank},
          {"c1_target", report.c1_target.to_string()},
          {"c1_actual", report.c1_actual.to_string()},
          {"c2_target", report.c2_target.to_string()},
          {"c2_actual", report.c2_actual.to_string()},
          {"defect", report.defect.to_string()},
          {"omalous", report.omalous}};
}

Json tag_to_json(const StabilityTag& tag) { return {{"stability", tag.name()}, {"citation", tag.citation()}}; }

Json dimensions_to_json(const MonadDimensions& dims) {
  return {{"K", dims.dim_k},
          {"L", dims.dim_l},
          {"W", dims.dim_w},
          {"note", "dimension valid under cohomology vanishing (h0 = h2 = 0)"}};
}

Json to_json(const HypersurfaceSolution& s) {
  return {{"d", s.d}, {"l", s.l}, {"c", s.c}, {"stability", s.tag.name()}, {"citation", s.tag.citation()}};
}

Json to_json(const ProductSolution& s) {
  return {{"a", s.a}, {"b", s.b}, {"c", s.c}, {"stability", s.tag.name()}, {"citation", s.tag.citation()}};
}

}  // namespace omalous
