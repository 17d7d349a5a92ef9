#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "lbi");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = lbi::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

const char* const kAppell = "1 1\n-1 -1\n1 0\n0 1\n-1 0\n0 -1\n";

}  // namespace

TEST_CASE("decompose json") {
  const Run r = run({"decompose", "--matrix", "2 4\\n-2 -4\\n1 1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& c : j["components"]) {
    if (c["kind"] != "andean") continue;
    found = true;
    CHECK(c["sigma"] == nlohmann::json::array({1, 2}));
    CHECK(c["monomial_generators"] == nlohmann::json::parse("[[0,4],[2,2],[4,0]]"));
  }
  CHECK(found);
  // Byte stable.
  CHECK(run({"decompose", "--matrix", "2 4;-2 -4;1 1", "--format", "json"}).out == r.out);
}

TEST_CASE("decompose text from a file") {
  const auto path = temp_file("lbi_appell.txt", kAppell);
  const Run r = run({"decompose", path.string(), "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(I(B) : (x₃x₄x₅x₆)^∞) + ⟨x₂, x₁⟩") != std::string::npos);
}

TEST_CASE("stdin input") {
  const Run r = run({"decompose", "--matrix", "-", "--format", "json"}, kAppell);
  CHECK(r.code == 0);
  CHECK(r.out.find("andean") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
  const auto bad = temp_file("lbi_bad.txt", "1 2 x\n");
  const Run r = run({"decompose", bad.string()});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
  CHECK(run({"decompose", "--matrix", "2 4\\n-2 -4"}).code == 2);
  CHECK(run({"decompose"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"holonomic", "--matrix", "2 4;-2 -4;1 1"}).code == 2);
  CHECK(run({"holonomic", "--matrix", "2 4;-2 -4;1 1", "--kappa", "1,2"}).code == 2);
  CHECK(run({"holonomic", "--matrix", "2 4;-2 -4;1 1", "--grading", "2 2 0", "--kappa", "1,2,0"}).code == 2);
  CHECK(run({"graph", "band", "--matrix", "7 4;1 1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("holonomic verdicts") {
  CHECK(run({"holonomic", "--matrix", "2 4\\n-2 -4\\n1 1", "--kappa", "1,3,0"}).out ==
        "NOT HOLONOMIC (stratum {1,2}, value 4)\n");
  CHECK(run({"holonomic", "--matrix", "2 4\\n-2 -4\\n1 1", "--kappa", "1/2,0,0"}).out == "HOLONOMIC\n");
  CHECK(run({"holonomic", "--matrix", "2 4\\n-2 -4\\n1 1", "--grading", "1 1 0", "--kappa", "1,3,0"}).out ==
        "NOT HOLONOMIC (stratum {1,2}, value 4)\n");
  CHECK(run({"holonomic", "--matrix", "1 0;1 0;0 1", "--kappa", "0,0,0"}).out == "THEOREMS INAPPLICABLE\n");
  const auto j = nlohmann::json::parse(
      run({"holonomic", "--matrix", "2 4;-2 -4;1 1", "--kappa", "1,3,0", "--format", "json"}).out);
  CHECK(j["holonomic"] == false);
}

TEST_CASE("arrangement json") {
  const Run r = run({"arrangement", "--matrix", kAppell, "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["hypothesis_ok"] == true);
  REQUIRE(j["strata"].size() == 1);
  CHECK(j["strata"][0]["allowed"] == nlohmann::json::array({0}));
  CHECK(j["strata"][0]["sigma"] == nlohmann::json::array({1, 2}));
  for (const auto& h : j["strata"][0]["h"]) CHECK(h.is_string());
}

TEST_CASE("graph census") {
  CHECK(run({"graph", "2x2", "--matrix", "1 3\\n-2 -4"}).out.find("finite components: 4\n") == 0);
  CHECK(run({"graph", "band", "--matrix", "7 4\\n1 1", "--level", "7"}).out.find("no infinite components") !=
        std::string::npos);
  CHECK(run({"graph", "band", "--matrix", "2 6;1 2", "--level", "6"}).out.find("infinite columns: 0 2 4 6") !=
        std::string::npos);
  const Run slice = run({"graph", "slice", "--matrix", "2 2;-3 -3;1 2", "--level", "4", "--format", "json"});
  REQUIRE(slice.code == 0);
  const auto j = nlohmann::json::parse(slice.out);
  CHECK(j["band_level"] == 2);
}

TEST_CASE("graph svg") {
  const auto path = std::filesystem::temp_directory_path() / "lbi_band.svg";
  std::filesystem::remove(path);
  const Run r = run({"graph", "band", "--matrix", "2 6\\n1 2", "--level", "6", "--svg", path.string()});
  CHECK(r.code == 0);
  std::ifstream file(path);
  const std::string svg((std::istreambuf_iterator<char>(file)), {});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("class=\"infinite\"") != std::string::npos);
  CHECK(svg.find("class=\"finite\"") != std::string::npos);
  CHECK(run({"graph", "2x2", "--matrix", "1 3;-2 -4", "--format", "svg"}).out.rfind("<svg", 0) == 0);
  CHECK(run({"decompose", "--matrix", "1 3;-2 -4", "--format", "svg"}).code == 2);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--max-entry", "3", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all 2x2/band/andean equivalences passed (") != std::string::npos);
  CHECK(run({"verify", "--case", "dilation-boundary", "--max-entry", "4"}).code == 0);
  CHECK(run({"verify", "--case", "grading", "--case", "a-independence", "--seed", "3"}).code == 0);
  const Run none = run({"verify", "--max-entry", "0"});
  CHECK(none.code == 2);
  CHECK(none.err.find("empty case space") != std::string::npos);
}

TEST_CASE("budget exhaustion exits 3") {
  setenv("LATTICE_ANDEAN_BUDGET", "40", 1);
  const Run r = run({"verify", "--case", "2x2", "--max-entry", "3"});
  unsetenv("LATTICE_ANDEAN_BUDGET");
  CHECK(r.code == 3);
}
