#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperkirch::cli {

/// Runs one command line (without the program name). The result document
/// goes to `out`, diagnostics and warnings to `err`.
///
/// Exit codes: 0 success, 1 domain/input error (an error record is written to
/// `out`), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Enumeration cap used when --budget is absent: $HYPERKIRCH_BUDGET if set
/// and valid, otherwise 10^8.
std::uint64_t default_budget();

}  // namespace hyperkirch::cli
