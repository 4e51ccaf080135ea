#ifndef ERSP_SEPARATION_HPP_
#define ERSP_SEPARATION_HPP_

#include <vector>

#include "ersp/master.hpp"

namespace ersp {

struct SeparatedCut {
    Cut cut;
    double violation = 0.0;
};

// Enumerate task triples; a triple is violated when the full-memory
// coefficient sum exceeds 1. Returns up to max_cuts new cuts, most violated
// first, each with a minimal memory preserving the detected violation.
// Existing S sets are not reproposed.
std::vector<SeparatedCut> separate_lmsri(const RmpModel& model, const LpSolution& lp,
                                         int max_cuts = 10, double tol = 1e-6, int threads = 1);

// Memory for a violated triple: S plus the nodes strictly between consecutive
// S-visits on supporting paths whose limited coefficient would otherwise
// undercount the full-memory one.
NodeSet build_memory(const NodeSet& S, const std::vector<const Path*>& supporting,
                     const Instance& inst);

}  // namespace ersp

#endif  // ERSP_SEPARATION_HPP_
