#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcorr/bath.hpp"

namespace qcorr::app {

struct CheckResult {
    std::string id;           // "1" .. "10", "6-info" for the informational comparison
    std::string description;
    double tolerance = 0.0;
    double deviation = 0.0;   // worst measured deviation (or margin, see detail)
    double budget_seconds = 0.0;  // 0 = no runtime limit
    double seconds = 0.0;
    bool passed = false;
    bool mandatory = true;
    std::string detail;
};

struct VerifyOptions {
    QuadratureSpec quadrature;
    // Replacement for the closed-form discord, used by the mutation test.
    std::function<double(double)> discord_closed;
    // Scratch directory for the determinism check's CSV files.
    std::string scratch_dir;
    // Check ids to run; empty runs all of them.
    std::vector<std::string> only;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

// One line per check plus a summary line.
std::string format_report(const std::vector<CheckResult>& results);

bool all_mandatory_passed(const std::vector<CheckResult>& results);

// Runs every check, prints the report to `log`, writes it to report_path when
// non-empty. Returns kExitOk or kExitVerifyFailed (kExitConfig on I/O error).
int cmd_verify(const std::string& report_path, std::ostream& log);

}  // namespace qcorr::app
