#pragma once

#include <iosfwd>
#include <string>

#include "turanham/counts.hpp"

namespace turanham {

enum class VerifyScope { fixtures, oracle, identities, all };

VerifyScope parse_verify_scope(const std::string& name);

struct VerifyOptions {
    VerifyScope scope = VerifyScope::all;
    int max_points = 12;     // exhaustive-enumeration budget for oracle checks
    int beyond_n_max = 0;    // also print rows past fixture coverage, unverified
    Corrections corrections;
};

// Runs the requested checks, one report line each, and returns true when all
// of them pass. Formula failures (exact-division errors, negative counts)
// are caught and reported as failures.
bool run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace turanham
