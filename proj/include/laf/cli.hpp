#ifndef LAF_CLI_HPP
#define LAF_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace laf {

/// One command per invocation. Paths are resolved and parsed before any
/// computation starts.
struct RunConfig {
    std::string command;  // disc | stratify | fiber | hecke | tower | selftest
    std::string input_path;
    std::string char_path;
    std::string preset;
    bool compare = false;
    std::optional<double> tol_override;
    std::uint64_t seed = 1;
    std::size_t max_minors = 20000;
    std::string out_path;  // empty = standard output
};

struct RunOutcome {
    nlohmann::json report;
    int exit_code = 0;
};

/// Dispatches to the modules and assembles the JSON report. Throws
/// input_error / compute_error; those map to exit codes 1 / 2.
RunOutcome run(const RunConfig& config);

/// run() plus report emission and error mapping; prints timing to stderr.
int run_cli(const RunConfig& config);

} // namespace laf

#endif
