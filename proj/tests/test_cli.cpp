#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "omalous/catalog.hpp"

using namespace omalous;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("omalous-cli-" + std::to_string(std::rand()) + "-" +
                                         std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("tangent") {
  auto r = run_cli({"tangent", "--hypersurface", "5"});
  REQUIRE(r.code == cli::kOk);
  auto j = Json::parse(r.out);
  CHECK(j["c1"] == "0");
  CHECK(j["c2"] == "10*H^2");

  j = Json::parse(run_cli({"tangent", "--blowup", "4"}).out);
  CHECK(j["c1"] == "3*H - E1 - E2 - E3 - E4");
  CHECK(j["c2"] == "7*pt");
  CHECK(j["canonical"] == "-3*H + E1 + E2 + E3 + E4");

  j = Json::parse(run_cli({"tangent", "--product", "1", "1"}).out);
  CHECK(j["c1"] == "2*h1 + 2*h2");
  CHECK(j["rank"] == 2);

  j = Json::parse(run_cli({"tangent", "--cicy", "5", "3", "3"}).out);
  CHECK(j["c2"] == "6*H^2");

  CHECK(run_cli({"tangent"}).code == cli::kUsage);
  CHECK(run_cli({"tangent", "--hypersurface", "5", "--blowup", "3"}).code == cli::kUsage);
  CHECK(run_cli({"tangent", "--cicy", "5", "3", "2"}).code == cli::kUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
  CHECK(run_cli({}).code == cli::kUsage);
}

TEST_CASE("check") {
  TempDir dir;
  const auto good = dir.file("quintic.json");
  write_file(good, monad_to_json(quintic_monad()).dump());
  auto r = run_cli({"check", "--monad", good.string()});
  CHECK(r.code == cli::kOk);
  CHECK(Json::parse(r.out)["omalous"] == true);

  const auto lin = dir.file("linear.json");
  write_file(lin, monad_to_json(linear_monad(3, 2, 2)).dump());
  r = run_cli({"check", "--monad", lin.string()});
  CHECK(r.code == cli::kNegative);
  CHECK(Json::parse(r.out)["defect"] == "H^2");

  const auto broken = dir.file("broken.json");
  write_file(broken, "{\"schema\": \"1\", \"variety\": ");
  CHECK(run_cli({"check", "--monad", broken.string()}).code == cli::kUsage);

  const auto wrong = dir.file("wrong.json");
  write_file(wrong, R"({"schema": "1", "variety": {"family": "hypersurface", "d": 5},
    "m0": [{"divisor": "E1", "mult": 1}], "m1": [], "m2": [], "provenance": ""})");
  CHECK(run_cli({"check", "--monad", wrong.string()}).code == cli::kUsage);

  r = run_cli({"check", "--monad", dir.file("missing.json").string()});
  CHECK(r.code == cli::kIo);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("search") {
  auto r = run_cli({"search", "hypersurface", "--d-max", "6"});
  REQUIRE(r.code == cli::kOk);
  auto j = Json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[3]["d"] == 6);
  CHECK(j[3]["l"] == -1);
  CHECK(j[3]["c"] == 16);
  CHECK(j[3]["stability"] == "unknown");
  CHECK(run_cli({"search", "--serial", "hypersurface", "--d-max", "6"}).out == r.out);

  r = run_cli({"search", "product", "--n", "2", "--m", "3", "--bound", "10"});
  REQUIRE(r.code == cli::kOk);
  j = Json::parse(r.out);
  CHECK(j.size() == 7);
  CHECK(run_cli({"search", "--serial", "product", "--n", "2", "--m", "3", "--bound", "10"}).out == r.out);

  CHECK(run_cli({"search", "product", "--n", "2", "--m", "3", "--bound", "5"}).code == cli::kUsage);
  CHECK(run_cli({"search", "hypersurface"}).code == cli::kUsage);
}

TEST_CASE("rr") {
  auto r = run_cli({"rr", "--n", "3", "--r", "4"});
  REQUIRE(r.code == cli::kOk);
  auto j = Json::parse(r.out);
  CHECK(j["K"] == Json::parse("[3, 3, 3, 3]"));
  CHECK(j["L"] == Json::parse("[3, 2, 2, 2]"));
  CHECK(j["W"] == 25);

  CHECK(run_cli({"rr", "--n", "2", "--r", "4"}).code == cli::kUsage);
  CHECK(run_cli({"rr", "--n", "3", "--r", "3"}).code == cli::kUsage);

  r = run_cli({"rr", "--n", "2", "--sheaf", "1,0,0", "--twist", "1"});
  REQUIRE(r.code == cli::kOk);
  j = Json::parse(r.out);
  CHECK(j["chi"] == 3);
  CHECK(j["todd_chi"] == 3);

  j = Json::parse(run_cli({"rr", "--n", "4", "--sheaf", "7,3,7,-1,-1,-1,-1", "--twist", "-1"}).out);
  CHECK(j["chi"] == j["todd_chi"]);

  CHECK(run_cli({"rr", "--n", "3"}).code == cli::kUsage);
  CHECK(run_cli({"rr", "--n", "2", "--sheaf", "1,x,0"}).code == cli::kUsage);
}

TEST_CASE("slope") {
  auto r = run_cli({"slope", "--product", "2", "3", "--tangent"});
  REQUIRE(r.code == cli::kOk);
  auto j = Json::parse(r.out);
  CHECK(j["degree"] == 36);
  CHECK(j["slope"] == "36/5");
  CHECK(j["l_coefficient"] == 4);
  CHECK(j["l_coefficient_quoted"] == 120);

  j = Json::parse(run_cli({"slope", "--hypersurface", "5", "--c1", "2*H", "--rank", "3"}).out);
  CHECK(j["degree"] == 10);
  CHECK(j["slope"] == "10/3");

  CHECK(run_cli({"slope", "--product", "2", "2", "--tangent", "--pol", "h1"}).code == cli::kUsage);
  CHECK(run_cli({"slope", "--product", "2", "2", "--c1", "h1", "--rank", "0"}).code == cli::kUsage);

  TempDir dir;
  const auto quintic = dir.file("quintic.json");
  write_file(quintic, monad_to_json(quintic_monad()).dump());
  j = Json::parse(run_cli({"slope", "--hypersurface", "5", "--monad", quintic.string()}).out);
  CHECK(j["slope"] == 0);
  CHECK(run_cli({"slope", "--hypersurface", "4", "--monad", quintic.string()}).code == cli::kUsage);
}

TEST_CASE("catalog") {
  TempDir dir;
  const auto path = dir.file("catalog.json");
  REQUIRE(run_cli({"catalog", "--out", path.string(), "--ranges", "d_max=6,blowup_n=3..4,blowup_r=4,product=1..2"})
              .code == cli::kOk);
  const std::string first = read_file(path);
  REQUIRE(run_cli({"catalog", "--out", path.string(), "--ranges", "d_max=6,blowup_n=3..4,blowup_r=4,product=1..2"})
              .code == cli::kOk);
  CHECK(read_file(path) == first);
  const auto doc = Json::parse(first);
  CHECK(doc["entries"].size() == 1 + 4 + 5 + 2 + 4);

  CHECK(run_cli({"catalog", "--out", dir.file("no/such/dir/c.json").string()}).code == cli::kIo);
  CHECK(run_cli({"catalog", "--out", path.string(), "--ranges", "bogus=1"}).code == cli::kUsage);

  ::setenv("OMALOUS_CATALOG_RANGES", "d_max=3,blowup_n=3..3,blowup_r=4..4,product=1..1", 1);
  const auto env_path = dir.file("env.json");
  CHECK(run_cli({"catalog", "--out", env_path.string()}).code == cli::kOk);
  CHECK(Json::parse(read_file(env_path))["entries"].size() == 1 + 1 + 5 + 1 + 1);
  // Flags override the environment.
  CHECK(run_cli({"catalog", "--out", env_path.string(), "--ranges", "d_max=4"}).code == cli::kOk);
  CHECK(Json::parse(read_file(env_path))["entries"].size() == 1 + 2 + 5 + 1 + 1);
  ::unsetenv("OMALOUS_CATALOG_RANGES");
}
