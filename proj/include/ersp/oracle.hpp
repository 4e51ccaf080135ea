#ifndef ERSP_ORACLE_HPP_
#define ERSP_ORACLE_HPP_

#include <vector>

#include "ersp/labels.hpp"
#include "ersp/master.hpp"

namespace ersp {

struct OracleLimits {
    long max_expansions = 20000000;
    long max_sequences = 1000000;
};

struct EnumeratedSequence {
    Path path;        // minimal path, charging from the LP oracle
    double cost = 0;  // arc costs plus LP-optimal charging cost
    double rc = 0;
};

// Depth-first enumeration of all feasible complete node sequences (subject to
// the configured elementarity family) with LP-optimal charging. Independent
// of the label-setting machinery; throws on limit overrun.
std::vector<EnumeratedSequence> enumerate_sequences(const Instance& inst, const DualPrices& duals,
                                                    const PricingConfig& cfg,
                                                    const OracleLimits& limits = {});

struct ExactTiny {
    double lp_bound = 0.0;
    double ip_value = 0.0;
    bool ip_found = false;
    bool artificial_active = false;
    long n_paths = 0;
};

// Full master over every enumerated minimal path; exact LP and pool-complete
// branch-and-bound.
ExactTiny solve_exact_tiny(const Instance& inst, const PricingConfig& cfg,
                           const OracleLimits& limits = {});

}  // namespace ersp

#endif  // ERSP_ORACLE_HPP_
