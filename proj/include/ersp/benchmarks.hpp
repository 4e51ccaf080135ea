#ifndef ERSP_BENCHMARKS_HPP_
#define ERSP_BENCHMARKS_HPP_

#include <vector>

#include "ersp/colgen.hpp"

namespace ersp {

struct RouteThenChargeResult {
    bool feasible = false;        // every route repaired within horizon
    double cost = 0.0;            // repaired total cost
    double integrated_cost = 0.0; // adaptive_solve IP value on the same instance
    bool integrated_found = false;
    int unrepairable = 0;
    std::vector<Path> routes;
};

// Sequential baseline: routes are optimized with the battery treated as
// unbounded, then charger detours are inserted wherever the charge would go
// negative (charging the minimum of full and the remaining requirement).
RouteThenChargeResult route_then_charge(const Instance& inst, const SolverOptions& opt);

struct HetComparison {
    bool found = false;
    double hom_repriced_charging = 0.0;  // Hom-model schedule at true costs
    double rebalanced_charging = 0.0;    // same routes, charging re-optimized
    double integrated_cost = 0.0;        // full Het solve objective
    double hom_routes_arc_cost = 0.0;
};

// Value of modeling heterogeneous costs: solve a homogeneous twin (mean
// delta), then re-price and re-optimize its schedules at the true costs.
HetComparison compare_het_vs_hom(const Instance& inst, const SolverOptions& opt);

}  // namespace ersp

#endif  // ERSP_BENCHMARKS_HPP_
