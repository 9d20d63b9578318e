#ifndef VDG_CLI_HPP
#define VDG_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace vdg::cli {

// Exit-code contract: 0 ok, 1 some check refuted, 2 parse failure,
// 3 invariant violation, 4 precondition failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitPrecondition = 4;

struct SuiteOptions {
  std::optional<double> timeout_secs;  // per instance
  int brute_cap = 10;
};

/// Builds a family graph and writes it to output_path ("-" for stdout) in the
/// requested format ("text" or "json"); prints counts and a label legend.
int run_family(const std::string& spec_text, const std::string& output_path, const std::string& format,
               std::ostream& out, std::ostream& err);

/// Reads a graph file (text or JSON detected by first non-space byte) and
/// prints {degree, generators, order} as JSON.
int run_aut(const std::string& graph_path, std::ostream& out, std::ostream& err);

/// Prints the full stability verdict for a connected graph as JSON.
int run_stability(const std::string& graph_path, std::ostream& out, std::ostream& err);

/// Runs the verification suite from a JSON config (empty path = the built-in
/// default list); writes the report array to report_path ("-"/"" = stdout).
int run_suite(const std::string& config_path, const std::string& report_path, const SuiteOptions& options,
              std::ostream& out, std::ostream& err);

/// The built-in default suite configuration (JSON text).
std::string default_suite_config();

}  // namespace vdg::cli

#endif  // VDG_CLI_HPP
