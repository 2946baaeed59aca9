#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "npwigner/cli.hpp"
#include "npwigner/emit.hpp"
#include "npwigner/phase.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = npw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "npwigner_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("verify succeeds on a number state") {
  const auto r = run({"verify", "--state", "number", "--M", "5", "--cutoff", "16", "--no-timestamps"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["passed"] == true);
  CHECK(doc["metadata"]["state"]["M"] == 5);
}

TEST_CASE("verify records the coherent minimum without gating on it") {
  const auto r = run({"verify", "--state", "coherent", "--alpha", "4", "--no-timestamps"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& c : doc["checks"]) {
    if (c["name"] == "min_w") {
      found = true;
      CHECK(c["gating"] == false);
    }
  }
  CHECK(found);
}

TEST_CASE("figure 3 reproduces the 1/(2pi) peak") {
  const auto path = scratch_dir() / "fig3.csv";
  const auto r = run({"figure", "3", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  const auto grid = npw::read_grid_csv(in, 32);
  CHECK(std::abs(*std::max_element(grid.values.begin(), grid.values.end()) - 1.0 / npw::kTwoPi) < 1e-9);
}

TEST_CASE("figure 1 writes the grid and the phi = 0.5 slice") {
  const auto dir = scratch_dir();
  const auto r = run({"figure", "1", "--out", (dir / "fig1.csv").string()});
  REQUIRE(r.code == 0);
  std::ifstream in(dir / "fig1_slice.csv");
  const auto slice = npw::read_grid_csv(in, 0);
  CHECK(slice.phi_samples == 1);
  CHECK(slice.phi(0) == 0.5);
  CHECK(slice.n_max > 16);
}

TEST_CASE("cutoff too small is a validation failure with a one-line diagnostic") {
  const auto r = run({"wigner", "--state", "coherent", "--alpha", "4", "--cutoff", "10"});
  CHECK(r.code == 1);
  CHECK(r.err.find("cutoff") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"wigner"}).code == 2);
  CHECK(run({"wigner", "--state", "number"}).code == 2);
  CHECK(run({"wigner", "--state", "number", "--M", "1", "--format", "xml"}).code == 2);
  CHECK(run({"wigner", "--state", "squeezed"}).code == 2);
  CHECK(run({"wigner", "--state", "number", "--M", "1", "--cutoff", "-3"}).code == 2);
  CHECK(run({"figure", "4"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto spec = scratch_dir() / "both.json";
  std::ofstream(spec) << R"({"kind": "number", "M": 1})";
  CHECK(run({"state", "--state", "number", "--M", "1", "--spec-file", spec.string()}).code == 2);

  const auto bad = scratch_dir() / "bad.json";
  std::ofstream(bad) << R"({"kind": "squeezed"})";
  CHECK(run({"state", "--spec-file", bad.string()}).code == 2);
}

TEST_CASE("verify on a fabricated non-Hermitian matrix fails cleanly") {
  const auto spec = scratch_dir() / "skew.json";
  std::ofstream(spec) << R"({"kind": "mixed", "matrix": [[0.5, [0.1, 0.2]], [[0.1, 0.2], 0.5]]})";
  const auto r = run({"verify", "--spec-file", spec.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("Hermitian") != std::string::npos);
}

TEST_CASE("subcommands are deterministic") {
  const std::vector<std::string> args{"wigner", "--state", "cat", "--alpha", "2", "--phi-samples", "64",
                                      "--format", "json", "--no-timestamps"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["axes"]["phi"].size() == 64);
}

TEST_CASE("state and marginals output") {
  const auto s = run({"state", "--state", "phase", "--M", "3", "--phi0", "0.2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("trace,,1") != std::string::npos);
  CHECK(s.out.find("p,3,0.25") != std::string::npos);

  const auto m = run({"marginals", "--state", "number", "--M", "2", "--phi-samples", "8", "--format", "json"});
  CHECK(m.code == 0);
  const auto doc = nlohmann::json::parse(m.out);
  CHECK(doc["photon"]["p"][2] == 1.0);
  CHECK(doc["phase"]["values"].size() == 8);
  CHECK(doc["metadata"].contains("generated_at"));

  const auto spec = scratch_dir() / "mixed.json";
  std::ofstream(spec) << R"({"kind": "mixed", "components": [
      {"weight": 0.5, "state": {"kind": "number", "M": 0}},
      {"weight": 0.5, "state": {"kind": "phase", "M": 2, "phi0": 1.0}}]})";
  CHECK(run({"verify", "--spec-file", spec.string(), "--no-timestamps"}).code == 0);
}
