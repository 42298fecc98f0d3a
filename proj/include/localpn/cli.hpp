#pragma once

#include <optional>
#include <string>

#include "localpn/cache.hpp"
#include "localpn/model.hpp"
#include "localpn/report.hpp"

namespace localpn {

// exit-code contract: CI can tell a failed mathematical check from misuse
enum ExitCode : int {
    kExitPass = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitDegenerate = 3,
};

struct RunConfig {
    std::string subcommand;
    int n = 1;
    std::string lambda_spec = "1,2"; // "a,b,..." | "zeta:m" | "spl2-canonical"
    int order = 30;                  // truncation N
    int depth = 8;                   // K
    int zmax = 3;
    int index = -1; // fixed point i; -1 = all
    std::string format = "json";    // json | text
    std::string out;                // empty = stdout
    std::string cache_dir;          // empty = env default or disabled
    int jobs = 1;
    std::string operator_json;      // admissible: optional custom table file

    void validate() const; // throws UsageError
};

struct RunOutcome {
    int exit_code = kExitPass;
    Json report;
};

// "1,2" / "1/2,-3" / "zeta:3" / "spl2-canonical" -> weights
LambdaConfig parse_lambda(int n, const std::string& spec);

// run the subcommand; all mathematical failures are reported (exit 1), all
// usage/degeneracy problems throw
RunOutcome dispatch(const RunConfig& cfg);

// JSON (stable key order, no timestamps) or a human-readable text rendering
std::string render_report(const Json& report, const std::string& format);

} // namespace localpn
