#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/// Batch front-end: `phase`, `sweep`, `exponents` and `compare` subcommands.
namespace lipkin::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kSolverError = 3,
    kFitError = 4,
    kValidationFailure = 5,
};

/// Runs one invocation; args excludes the program name. Tabular output goes to
/// `out` unless --out names a file, diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "2^10,2^11,3000" -> {1024, 2048, 3000}.
std::vector<std::int64_t> parse_n_list(std::string_view text);

/// "a:b:points" -> points values from a to b inclusive.
std::vector<double> parse_range(std::string_view text);

/// "a:b" -> (a, b) with a < b.
std::pair<double, double> parse_window(std::string_view text);

/// 17 significant digits, '.' decimal point.
std::string format_double(double v);

}  // namespace lipkin::cli
