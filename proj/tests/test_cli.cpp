#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "geographer/cli.hpp"

using namespace geographer;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("realize prints a JSON certificate") {
  const Result r = run({"realize", "0", "4", "4"});
  CHECK(r.code == cli::kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("recipe").at("description") == "B_1(1) = B(3,3,3;1)");
  CHECK(j.at("command") == "realize");
}

TEST_CASE("negative signatures parse as positionals") {
  const Result r = run({"realize", "-16", "3", "1", "--format", "tsv"});
  CHECK(r.code == cli::kSuccess);
  CHECK(count_lines(r.out) == 2);
  CHECK(r.out.find("E(2,1,2,2)") != std::string::npos);
}

TEST_CASE("explicit genus") {
  CHECK(run({"realize", "0", "4", "4", "--genus", "6"}).out.find("B(3,3,6;1)") != std::string::npos);
  const Result low = run({"realize", "0", "4", "4", "--genus", "2"});
  CHECK(low.code == cli::kInadmissible);
}

TEST_CASE("inadmissible triples exit with 2") {
  const Result r = run({"realize", "8", "2", "0"});
  CHECK(r.code == cli::kInadmissible);
  CHECK(r.out.empty());
  CHECK(r.err.find("signature") != std::string::npos);
  CHECK(run({"realize", "--null", "0", "2", "1"}).code == cli::kInadmissible);
}

TEST_CASE("open null cases exit with 3") {
  const Result r = run({"realize", "--null", "0", "3", "1"});
  CHECK(r.code == cli::kOpen);
  CHECK(nlohmann::json::parse(r.out).at("status") == "open");
  CHECK(r.err.find("open") != std::string::npos);
  const Result ok = run({"realize", "--null", "0", "3", "3"});
  CHECK(ok.code == cli::kSuccess);
  CHECK(ok.out.find("B(2,2,2;1)") != std::string::npos);
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"realize", "0", "4"}).code == cli::kUsage);
  CHECK(run({"realize", "zero", "4", "4"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"enumerate", "--sigma-min", "8", "--b1-max", "2"}).code == cli::kUsage);
  CHECK(run({"verify", "--grid-max", "0"}).code == cli::kUsage);
  CHECK(run({"invariants"}).code == cli::kUsage);
  CHECK(run({"invariants", "--bundle", "1", "1", "2"}).code == cli::kUsage);
}

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("realize") != std::string::npos);
}

TEST_CASE("invariants and its alias") {
  const Result bundle = run({"invariants", "--bundle", "1", "1", "2", "1"});
  CHECK(bundle.code == cli::kSuccess);
  CHECK(nlohmann::json::parse(bundle.out).at("invariants").at("nullity") == 2);
  const Result alias = run({"inspect", "--fibersum", "2", "1", "2", "2"});
  CHECK(alias.code == cli::kSuccess);
  CHECK(nlohmann::json::parse(alias.out).at("invariants").at("sigma") == -16);
  const Result dolgachev = run({"invariants", "--dolgachev", "2", "3", "0", "0", "2"});
  CHECK(dolgachev.code == cli::kSuccess);
  CHECK(run({"invariants", "--bundle", "2", "1", "3", "0"}).code == cli::kInadmissible);
}

TEST_CASE("enumerate writes one header then one row per triple") {
  const Result r = run({"enumerate", "--sigma-min", "-8", "--b1-max", "2"});
  CHECK(r.code == cli::kSuccess);
  CHECK(count_lines(r.out) == 7);
  CHECK(r.out.rfind("a\tb\tc\t", 0) == 0);
  CHECK(r.out.find("a\tb\tc\t", 1) == std::string::npos);

  const Result lines = run({"enumerate", "--sigma-min", "-8", "--b1-max", "2", "--format", "json"});
  CHECK(count_lines(lines.out) == 6);
  std::istringstream in(lines.out);
  for (std::string line; std::getline(in, line);) CHECK(nlohmann::json::parse(line).at("schema_version") == "1");
}

TEST_CASE("verify exit codes") {
  const Result ok = run({"verify", "--grid-max", "3"});
  CHECK(ok.code == cli::kSuccess);
  CHECK(ok.out.find("verify: PASS") != std::string::npos);
  const Result bad = run({"verify", "--grid-max", "3", "--mutate", "sign-flip"});
  CHECK(bad.code == cli::kVerificationFailed);
  CHECK(bad.out.find("verify: FAIL") != std::string::npos);
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "geographer_cli_out.json";
  std::filesystem::remove(path);
  const Result r = run({"realize", "0", "4", "0", "--out", path.string()});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in).at("recipe").at("description") == "B_0(0) = B(0,1,2;0)");
  std::filesystem::remove(path);
}

TEST_CASE("genus floor from the environment") {
  ::setenv("GEOGRAPHER_GENUS_DEFAULT", "4", 1);
  CHECK(run({"realize", "0", "4", "4"}).out.find("B(3,3,4;1)") != std::string::npos);
  ::setenv("GEOGRAPHER_GENUS_DEFAULT", "1", 1);
  CHECK(run({"realize", "0", "4", "4"}).code == cli::kUsage);
  ::setenv("GEOGRAPHER_GENUS_DEFAULT", "abc", 1);
  CHECK(run({"realize", "0", "4", "4"}).code == cli::kUsage);
  ::unsetenv("GEOGRAPHER_GENUS_DEFAULT");
}
