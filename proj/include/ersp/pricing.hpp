#ifndef ERSP_PRICING_HPP_
#define ERSP_PRICING_HPP_

#include <vector>

#include "ersp/labels.hpp"

namespace ersp {

struct PricedPath {
    Path path;
    double rc = 0.0;
};

struct PricingStats {
    long subpath_labels = 0;
    long sequence_labels = 0;
    long path_labels = 0;
    // per (start,end) bucket label counts, filled when requested
    std::vector<std::pair<std::string, long>> bucket_counts;
};

// Render the bucket counts as a JSON object.
std::string bucket_counts_json(const PricingStats& stats);

// First level: all non-dominated completed subpaths, grouped by start in the
// returned order. Independent per start node; runs in parallel workers when
// config.threads > 1 with identical output.
std::vector<CompletedSubpath> find_nondominated_subpaths(const Instance& inst,
                                                         const DualPrices& duals,
                                                         const PricingConfig& cfg,
                                                         PricingStats* stats = nullptr);

// Second level: minimal paths of the non-dominated complete subpath
// sequences built from the first-level output.
std::vector<PricedPath> find_subpath_sequences(const std::vector<CompletedSubpath>& subpaths,
                                               const Instance& inst, const DualPrices& duals,
                                               const PricingConfig& cfg,
                                               PricingStats* stats = nullptr);

// Bi-level pricing: returns up to cfg.max_columns most negative columns, or
// empty when no column prices below -cfg.neg_threshold.
std::vector<PricedPath> price(const Instance& inst, const DualPrices& duals,
                              const PricingConfig& cfg, PricingStats* stats = nullptr);

// Path-based label-setting benchmark; uniform charging costs only.
std::vector<PricedPath> price_pathwise_benchmark(const Instance& inst, const DualPrices& duals,
                                                 const PricingConfig& cfg,
                                                 PricingStats* stats = nullptr);

// Translate a chain of completed subpaths into a minimal path (optimal
// charging via the rebalancing DP).
Path assemble_path(const std::vector<const CompletedSubpath*>& chain, const Instance& inst);

}  // namespace ersp

#endif  // ERSP_PRICING_HPP_
