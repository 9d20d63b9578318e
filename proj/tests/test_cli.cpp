#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vdg/cli.hpp"
#include "vdg/graph.hpp"

using namespace vdg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("vdg-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("family subcommand writes canonical graph files") {
  TempDir dir;
  std::ostringstream out, err;
  CHECK(cli::run_family("johnson:5,2", dir.file("j52.graph"), "text", out, err) == cli::kExitOk);
  std::string text = slurp(dir.file("j52.graph"));
  CHECK(text.substr(0, text.find('\n')) == "10 30");
  CHECK(out.str().find("vertices: 10") != std::string::npos);
  CHECK(out.str().find("{1,2}") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cli::run_family("cycle:5", dir.file("c5.graph"), "text", out2, err2) == cli::kExitOk);
  CHECK(slurp(dir.file("c5.graph")).substr(0, 3) == "5 5");

  std::ostringstream out3, err3;
  CHECK(cli::run_family("grassmann:2,4,2", dir.file("g242.graph"), "text", out3, err3) == cli::kExitOk);
  CHECK(slurp(dir.file("g242.graph")).substr(0, 6) == "35 315");

  // byte-stable across runs, and the round trip preserves the digest
  std::ostringstream out4, err4;
  CHECK(cli::run_family("johnson:5,2", dir.file("j52-again.graph"), "text", out4, err4) == cli::kExitOk);
  CHECK(slurp(dir.file("j52-again.graph")) == text);
  Graph parsed = from_text(text);
  CHECK(to_text(parsed) == text);

  std::ostringstream out5, err5;
  CHECK(cli::run_family("johnson:5,2", dir.file("j52.json"), "json", out5, err5) == cli::kExitOk);
  Graph json_graph = from_json(slurp(dir.file("j52.json")));
  CHECK(digest(json_graph) == digest(parsed));
}

TEST_CASE("family subcommand exit codes") {
  std::ostringstream out, err;
  CHECK(cli::run_family("coxeter:3", "-", "text", out, err) == cli::kExitParse);
  CHECK(cli::run_family("johnson:1,5", "-", "text", out, err) == cli::kExitInvariant);
}

TEST_CASE("aut subcommand reports the group as json") {
  TempDir dir;
  std::ostringstream out, err;
  REQUIRE(cli::run_family("johnson:4,2", dir.file("j42.graph"), "text", out, err) == cli::kExitOk);
  std::ostringstream aut_out, aut_err;
  CHECK(cli::run_aut(dir.file("j42.graph"), aut_out, aut_err) == cli::kExitOk);
  auto j = nlohmann::json::parse(aut_out.str());
  CHECK(j["order"] == "48");
  CHECK(j["degree"] == 6);

  write_file(dir.file("k1.graph"), "1 0\n");
  std::ostringstream one_out, one_err;
  CHECK(cli::run_aut(dir.file("k1.graph"), one_out, one_err) == cli::kExitOk);
  CHECK(nlohmann::json::parse(one_out.str())["order"] == "1");

  std::ostringstream bad_out, bad_err;
  CHECK(cli::run_aut(dir.file("missing.graph"), bad_out, bad_err) == cli::kExitParse);
}

TEST_CASE("stability subcommand") {
  TempDir dir;
  std::ostringstream out, err;
  REQUIRE(cli::run_family("kneser:5,2", dir.file("petersen.graph"), "text", out, err) == cli::kExitOk);
  std::ostringstream s_out, s_err;
  CHECK(cli::run_stability(dir.file("petersen.graph"), s_out, s_err) == cli::kExitOk);
  auto verdict = nlohmann::json::parse(s_out.str());
  CHECK(verdict["criterion"] == "holds");
  CHECK(verdict["a0"] == 0);
  CHECK(verdict["stable"] == true);
  CHECK(verdict["aut_order"] == "120");
  CHECK(verdict["double_aut_order"] == "240");

  REQUIRE(cli::run_family("cycle:7", dir.file("c7.graph"), "text", out, err) == cli::kExitOk);
  std::ostringstream c7_out, c7_err;
  CHECK(cli::run_stability(dir.file("c7.graph"), c7_out, c7_err) == cli::kExitOk);
  auto c7 = nlohmann::json::parse(c7_out.str());
  CHECK(c7["criterion"] == "inconclusive");
  CHECK(c7["stable"] == true);

  write_file(dir.file("two.graph"), "4 2\n0 1\n2 3\n");
  std::ostringstream d_out, d_err;
  CHECK(cli::run_stability(dir.file("two.graph"), d_out, d_err) == cli::kExitPrecondition);
}

TEST_CASE("suite subcommand") {
  TempDir dir;

  write_file(dir.file("empty.json"), "[]");
  std::ostringstream e_out, e_err;
  CHECK(cli::run_suite(dir.file("empty.json"), dir.file("empty-report.json"), {}, e_out, e_err) == cli::kExitOk);
  CHECK(nlohmann::json::parse(slurp(dir.file("empty-report.json"))).empty());

  write_file(dir.file("ok.json"), R"([
    {"spec": "johnson:5,2", "checks": ["order", "neighbor-counts"]},
    {"spec": "cycle:5", "checks": ["stability", "weichsel:complete:3", "brute-oracle"]},
    {"spec": "bipartite-kneser:4,1", "checks": ["verify"]},
    {"spec": "doubled-grassmann:2,3,1", "checks": ["path"]}
  ])");
  std::ostringstream ok_out, ok_err;
  CHECK(cli::run_suite(dir.file("ok.json"), dir.file("ok-report.json"), {}, ok_out, ok_err) == cli::kExitOk);
  auto report = nlohmann::json::parse(slurp(dir.file("ok-report.json")));
  CHECK(report.size() > 5);
  // deterministic aggregation order
  for (std::size_t i = 1; i < report.size(); ++i) {
    auto key = [&](std::size_t idx) {
      return std::make_pair(report[idx]["theorem_id"].get<std::string>(), report[idx]["instance"].get<std::string>());
    };
    CHECK(key(i - 1) <= key(i));
  }

  // a deliberately wrong expected order must flip the exit code
  write_file(dir.file("bad.json"), R"([{"spec": "johnson:5,2", "checks": ["order"], "expected_order": "121"}])");
  std::ostringstream bad_out, bad_err;
  CHECK(cli::run_suite(dir.file("bad.json"), "-", {}, bad_out, bad_err) == cli::kExitRefuted);

  write_file(dir.file("broken.json"), "{not json");
  std::ostringstream b_out, b_err;
  CHECK(cli::run_suite(dir.file("broken.json"), "-", {}, b_out, b_err) == cli::kExitParse);

  write_file(dir.file("unknown.json"), R"([{"spec": "johnson:5,2", "checks": ["no-such-check"]}])");
  std::ostringstream u_out, u_err;
  CHECK(cli::run_suite(dir.file("unknown.json"), "-", {}, u_out, u_err) == cli::kExitParse);
}

TEST_CASE("default suite config parses and covers the families") {
  auto config = nlohmann::json::parse(cli::default_suite_config());
  CHECK(config.is_array());
  CHECK(config.size() >= 15);
}
