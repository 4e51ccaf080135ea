#ifndef ERSP_CUTS_HPP_
#define ERSP_CUTS_HPP_

#include <vector>

#include "ersp/bits.hpp"
#include "ersp/instance.hpp"

namespace ersp {

// Limited-memory subset-row inequality over a task triple, weights fixed at
// one half. Rows read sum_p alpha~_q(p) z_p <= 1.
struct Cut {
    int id = -1;
    NodeSet S;       // |S| = 3, tasks only
    NodeSet memory;  // S subseteq M subseteq V
};

// Per-cut forward/backward resources of a node sequence. With w = 1/2 the
// resources take values {0, 1/2}; we store exact numerators over denominator
// 2, so every field is a small integer.
struct CutResources {
    int fwd_num = 0;          // numerator of forward resource (0 or 1)
    int bwd_num = 0;          // numerator of backward resource (0 or 1)
    bool all_in_memory = true;  // U(s) subseteq M_q
};

// Streaming coefficient (reset on leaving memory, floor accumulation).
int lmsri_coefficient(const std::vector<int>& nodes, const Cut& cut);

// Algebraic interval-sum form; used as the independent route in tests.
int lmsri_coefficient_algebraic(const std::vector<int>& nodes, const Cut& cut);

// From-scratch resources of a node sequence.
CutResources cut_resources(const std::vector<int>& nodes, const Cut& cut);

// Incremental resource update for an arc extension by `next`.
CutResources extend_cut_resources(const CutResources& r, int next, const Cut& cut);

// Reduced-cost decrement trigger for an arc extension: true when the forward
// resource of the extended sequence wraps past 1 (i.e. lambda_q is collected).
bool extension_collects_cut(const CutResources& r, int next, const Cut& cut);

}  // namespace ersp

#endif  // ERSP_CUTS_HPP_
