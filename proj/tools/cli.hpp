#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "contin/certified.hpp"
#include "contin/report.hpp"

namespace contin::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_validation = 2,
    exit_limit = 3,
    exit_precision = 4,
};

struct RunConfig {
    unsigned workers = 0;  // 0: machine parallelism
    std::uint64_t enumeration_limit = 100'000'000;
    PrecisionPolicy precision;
    OutputFormat format = OutputFormat::plain;
    std::uint64_t witness_top_k = 3;
    std::uint64_t seed = 1;
};

/// "128" or "128/4096" (initial/max significand bits).
PrecisionPolicy parse_precision(const std::string& text);

/// Runs one command line (args excludes the program name). Flags may also be
/// supplied through CONTIN_WORKERS, CONTIN_LIMIT, CONTIN_PRECISION,
/// CONTIN_FORMAT, CONTIN_TOP_K and CONTIN_SEED.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contin::cli
