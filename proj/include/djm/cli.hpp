#pragma once

// The djm command line: gen, validate, solve, oracle, compare, estimate-c, svg.
//
// Exit codes: 0 ok, 1 validation failure, 2 guarantee, claim, equivalence or
// certification violation, 3 I/O or argument error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace djm {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitViolation = 2, kExitUsage = 3 };

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class EstimateKinds { Both, SelfHosted, Random };

struct EstimateReport {
    int delta = 0;
    int trials = 0;
    int min = 0;
    int max = 0;
    double mean = 0;
    int selfhosted_trials = 0;
    int random_trials = 0;
    int selfhosted_min = 0;
    int random_min = 0;
    bool exact = true;  // every oracle run finished
};

// Trial t uses CYL_SELFHOSTED for even t and CYL_RANDOM for odd t when
// kinds is Both, seeded with derive_seed(seed, t).
EstimateReport estimate_c(int delta, int trials, std::uint64_t seed, EstimateKinds kinds, std::int64_t node_limit);

}  // namespace djm
