#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qseries/identity.hpp"

namespace qseries::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Exit codes: 0 when every requested
/// verification succeeded, 1 on a mismatch or insufficient precision, 2 on usage, parse or
/// lookup errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON array of reports with a fixed key order. elapsed_ms is null unless `timings` is set, so
/// that repeated runs produce identical bytes.
std::string report_json(const std::vector<VerificationReport>& reports, bool timings = false);

/// "hcf-plus: verified (+1) to q^20" and friends.
std::string describe(const VerificationReport& report, bool timings = false);

}  // namespace qseries::cli
