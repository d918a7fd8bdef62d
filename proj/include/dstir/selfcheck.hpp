#pragma once

#include <optional>
#include <string>

#include "dstir/stirling.hpp"

namespace dstir {

struct SelfcheckOptions {
    unsigned nmax = 10;        // index range for cross-path checks
    unsigned rmax = 3;         // largest minimum block size exercised
    unsigned oracle_nmax = 9;  // range for brute-force partition comparisons
};

// First failing witness of a cross-path or oracle check.
struct SelfcheckMismatch {
    std::string check;
    Kind kind = Kind::second;
    unsigned r = 0;
    unsigned n = 0;
    unsigned k = 0;

    std::string describe() const;
};

// Runs the cross-path agreement, classical specialization, r=1 reduction and
// Bell verification suites. Returns the first mismatch, or nullopt when
// everything agrees.
std::optional<SelfcheckMismatch> run_selfcheck(const SelfcheckOptions& opts);

}  // namespace dstir
