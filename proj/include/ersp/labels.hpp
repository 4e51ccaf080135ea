#ifndef ERSP_LABELS_HPP_
#define ERSP_LABELS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ersp/charge.hpp"
#include "ersp/cuts.hpp"
#include "ersp/duals.hpp"
#include "ersp/instance.hpp"
#include "ersp/ng.hpp"
#include "ersp/route.hpp"

namespace ersp {

enum class Variant { Hom, Het };
enum class ElemMode { None, Ng, Full };

struct PricingConfig {
    Variant variant = Variant::Hom;
    ElemMode elem = ElemMode::None;
    const NgNeighborhood* ng = nullptr;  // required in Ng mode
    std::vector<Cut> cuts;
    int max_columns = 200;
    double neg_threshold = 1e-6;
    int threads = 1;
    bool remark1_criteria = false;  // pathwise only, valid when all delta == 0
    bool count_buckets = false;     // fill PricingStats::bucket_counts
};

// Shared state for comparisons/extensions.
struct LabelContext {
    const Instance* inst;
    const DualPrices* duals;
    const PricingConfig* cfg;
    std::vector<double> levels;  // sorted distinct charging costs (Het)
    double uniform_delta = 0.0;  // shared unit cost (Hom)
    double eps = 1e-9;

    LabelContext(const Instance& i, const DualPrices& d, const PricingConfig& c)
        : inst(&i), duals(&d), cfg(&c) {
        if (c.variant == Variant::Het) levels = i.delta_levels();
        if (i.n_chargers > 0) uniform_delta = i.delta[i.first_charger()];
    }
    int level_of(int charger) const { return inst->level_of(charger, levels); }
};

// ---------------------------------------------------------------------------
// First level: partial subpaths

struct SubpathLabel {
    int start = 0, end = 0;
    int n_arcs = 0;
    double rcc = 0.0, time = 0.0, batt = 0.0;
    NodeSet served;                      // Full mode
    NgLabels ng;                         // Ng mode
    std::vector<CutResources> cut_res;   // per active cut
    int32_t parent = -1;                 // arena index
    int16_t via = -1;                    // appended node

    bool complete(const Instance& inst) const { return n_arcs >= 1 && !inst.is_task(end); }
};

SubpathLabel seed_subpath_label(int node, const LabelContext& ctx);

// Extension along arc (label.end, next); nullopt when infeasible for the
// configured family (time/battery bounds, elementarity, ng).
std::optional<SubpathLabel> extend_subpath_label(const SubpathLabel& l, int next,
                                                 const LabelContext& ctx);

// a dominates b; both must share (start, end).
bool subpath_dominates(const SubpathLabel& a, const SubpathLabel& b, const LabelContext& ctx);

// ---------------------------------------------------------------------------
// Completed subpaths handed to the second level

struct CompletedSubpath {
    Subpath sp;      // node sequence and t/b/c sums
    double rcc = 0;  // includes in-subpath cut decrements
    NodeSet served;
    NgLabels ng;
    std::vector<CutResources> cut_res;
};

// ---------------------------------------------------------------------------
// Second level: subpath sequences

struct SequenceLabel {
    int start = 0, end = 0;
    int n_subpaths = 0;
    double rcc = 0.0, time = 0.0, charge = 0.0;  // minimal-path fields
    std::vector<double> Z;                       // Het slacks, size D+1
    NodeSet served;
    NodeSet pi;                                  // forward ng-set
    std::vector<int8_t> fwd_num;                 // cut forward numerators
    int32_t parent = -1;
    int32_t via = -1;  // completed-subpath index

    bool complete(const Instance& inst) const { return inst.is_depot(end); }
};

SequenceLabel seed_sequence_label(const CompletedSubpath& s, int index, const LabelContext& ctx);

std::optional<SequenceLabel> extend_sequence_label(const SequenceLabel& l, const CompletedSubpath& s,
                                                   int index, const LabelContext& ctx);

bool sequence_dominates(const SequenceLabel& a, const SequenceLabel& b, const LabelContext& ctx);

// ---------------------------------------------------------------------------
// Path-based benchmark labels (uniform delta). Charging is deferred: deficits
// are charged retroactively at the last visited charger, which realizes the
// minimal plan exactly.

struct PathLabel {
    int start = 0, end = 0;
    int n_arcs = 0;
    double rcc = 0.0, time = 0.0, charge = 0.0;
    double bsince = 0.0;  // battery drained since the last charger visit
    NodeSet served;
    NodeSet pi;
    std::vector<CutResources> cut_res;
    int32_t parent = -1;
    int16_t via = -1;

    bool complete(const Instance& inst) const { return n_arcs >= 1 && inst.is_depot(end); }
};

PathLabel seed_path_label(int depot, const LabelContext& ctx);
std::optional<PathLabel> extend_path_label(const PathLabel& l, int next, const LabelContext& ctx);
bool path_dominates(const PathLabel& a, const PathLabel& b, const LabelContext& ctx);

// Cut-aware rcc slack required for a to dominate b (0 without cuts).
double cut_domination_slack_subpath(const std::vector<CutResources>& a,
                                    const std::vector<CutResources>& b, const LabelContext& ctx);
double cut_domination_slack_forward(const std::vector<int8_t>& fa, const std::vector<int8_t>& fb,
                                    const LabelContext& ctx);

}  // namespace ersp

#endif  // ERSP_LABELS_HPP_
