#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vdg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"graph families, automorphism groups and structure checks"};
  app.require_subcommand(1);

  std::string spec_text, output_path = "-", format = "text";
  auto* family = app.add_subcommand("family", "build a family graph and write it to a file");
  family->add_option("spec", spec_text, "family spec, e.g. johnson:5,2 or doubled-grassmann:2,3,1")->required();
  family->add_option("-o,--output", output_path, "output path, - for stdout");
  family->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string aut_path;
  auto* aut = app.add_subcommand("aut", "compute the automorphism group of a graph file");
  aut->add_option("graph", aut_path, "graph file (text or json)")->required();

  std::string stability_path;
  auto* stability = app.add_subcommand("stability", "stability verdict for a connected graph");
  stability->add_option("graph", stability_path, "graph file (text or json)")->required();

  std::string config_path, report_path = "-";
  vdg::cli::SuiteOptions suite_options;
  double timeout_secs = 0;
  auto* suite = app.add_subcommand("suite", "run the verification suite");
  suite->add_option("config", config_path, "JSON config; omit for the built-in default list");
  suite->add_option("-o,--output", report_path, "report path, - for stdout");
  auto* timeout_opt = suite->add_option("--timeout-secs", timeout_secs, "per-instance deadline");
  suite->add_option("--brute-cap", suite_options.brute_cap, "vertex cap for brute-force cross-checks");
  auto* dump = app.add_subcommand("default-config", "print the built-in suite config");

  CLI11_PARSE(app, argc, argv);

  if (family->parsed()) return vdg::cli::run_family(spec_text, output_path, format, std::cout, std::cerr);
  if (aut->parsed()) return vdg::cli::run_aut(aut_path, std::cout, std::cerr);
  if (stability->parsed()) return vdg::cli::run_stability(stability_path, std::cout, std::cerr);
  if (suite->parsed()) {
    if (timeout_opt->count() > 0) suite_options.timeout_secs = timeout_secs;
    return vdg::cli::run_suite(config_path, report_path, suite_options, std::cout, std::cerr);
  }
  if (dump->parsed()) {
    std::cout << vdg::cli::default_suite_config() << "\n";
    return 0;
  }
  return 0;
}
