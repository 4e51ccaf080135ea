#ifndef ERSP_COLGEN_HPP_
#define ERSP_COLGEN_HPP_

#include <string>
#include <vector>

#include "ersp/master.hpp"
#include "ersp/ng.hpp"
#include "ersp/pricing.hpp"

namespace ersp {

enum class ElemPolicy { None, NgStatic, Adaptive, Full };

struct SolverOptions {
    Variant variant = Variant::Hom;
    ElemPolicy policy = ElemPolicy::Adaptive;
    bool cuts = true;
    bool use_pathwise = false;  // benchmark pricing engine (Hom only)
    int threads = 1;
    int max_columns = 200;
    double neg_threshold = 1e-6;
    long max_iterations = 10000;
    double time_limit_s = 3600.0;
    int max_cut_rounds = 50;
    int max_cuts_per_round = 10;
    long bnb_node_limit = 20000;
    bool verbose = false;
};

enum class TermStatus { Converged, IterationLimit, TimeLimit };

struct ColgenResult {
    TermStatus status = TermStatus::Converged;
    double lp_bound = 0.0;
    double dual_bound = 0.0;  // equals lp_bound when converged
    LpSolution lp;
    long iterations = 0;
    long columns_added = 0;
    double pricing_ms = 0.0;
    double total_ms = 0.0;
    PricingStats stats;
};

// Plain column generation on the given master; prices with the supplied
// neighborhood when the policy requires one.
ColgenResult column_generation(const Instance& inst, RmpModel& model, const SolverOptions& opt,
                               const NgNeighborhood* ng, ElemMode elem_mode);

struct AdaptiveResult {
    TermStatus status = TermStatus::Converged;
    double lp_bound = 0.0;
    bool lp_artificial_active = false;
    IntegerSolution ip;
    double gap = -1.0;  // (ip - lp) / ip; negative when undefined
    bool gap_defined = false;
    int ng_expansions = 0;
    int cut_rounds = 0;
    long total_iterations = 0;
    long total_columns = 0;
    double pricing_ms = 0.0;
    double total_ms = 0.0;
    std::vector<double> bound_trajectory;
    NgNeighborhood ng;
    RmpModel model;

    explicit AdaptiveResult(const Instance& inst) : model(inst) {}
};

// Adaptive loop: column generation, ng expansion until the support is
// elementary, then cut separation; finally integrality restoration over the
// pooled columns.
AdaptiveResult adaptive_solve(const Instance& inst, const SolverOptions& opt);

// Expand neighborhoods along the cycles of non-elementary supported paths.
// Returns false (no-op) when every supported path is elementary.
bool expand_ng(NgNeighborhood& ng, const std::vector<const Path*>& support, const Instance& inst);

double compute_gap(double lp_bound, double ip_value);

// Cheap feasible seed columns: direct depot-task-depot tours with a charger
// stop inserted when needed.
std::vector<Path> initial_columns(const Instance& inst);

std::string summary_json(const Instance& inst, const SolverOptions& opt, const AdaptiveResult& res);

}  // namespace ersp

#endif  // ERSP_COLGEN_HPP_
