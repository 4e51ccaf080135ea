#ifndef ERSP_ROUTE_HPP_
#define ERSP_ROUTE_HPP_

#include <string>
#include <vector>

#include "ersp/bits.hpp"
#include "ersp/cuts.hpp"
#include "ersp/duals.hpp"
#include "ersp/instance.hpp"

namespace ersp {

// Depot-to-depot node sequence plus charging times at its interior charger
// visits (ordered by visit).
struct Path {
    std::vector<int> nodes;
    std::vector<double> charging_times;  // one per interior charger visit

    bool operator==(const Path& o) const {
        return nodes == o.nodes && charging_times == o.charging_times;
    }
};

struct Propagation {
    std::vector<double> times;    // arrival time per node
    std::vector<double> charges;  // arrival charge per node
    bool feasible = true;
    int first_violation = -1;     // node index of first bound violation
};

// Forward recursion for arrival times and charges. Throws if the charging
// time list does not match the interior charger visits.
Propagation propagate_time_charge(const std::vector<int>& nodes,
                                  const std::vector<double>& charging_times,
                                  const Instance& inst);

double path_cost(const Path& path, const Instance& inst);

double reduced_cost(const Path& path, const Instance& inst, const DualPrices& duals,
                    const std::vector<Cut>& cuts = {});

// Serve counts per task index.
std::vector<int> serve_counts(const std::vector<int>& nodes, const Instance& inst);
NodeSet visited_tasks(const std::vector<int>& nodes, const Instance& inst);
bool is_elementary(const std::vector<int>& nodes, const Instance& inst);

// Charger/depot-to-charger/depot segment through tasks; no charging state.
struct Subpath {
    std::vector<int> nodes;
    double time = 0.0;  // t^s
    double batt = 0.0;  // b^s
    double cost = 0.0;  // c^s

    int start() const { return nodes.front(); }
    int end() const { return nodes.back(); }
};

Subpath make_subpath(const std::vector<int>& nodes, const Instance& inst);

// Reduced cost contribution of a partial subpath node sequence (no cut
// terms). Single node at a depot contributes -kappa; at a charger, 0.
double subpath_rcc(const std::vector<int>& nodes, const Instance& inst, const DualPrices& duals);

// rcc including the cut decrements collected inside the node sequence.
double subpath_rcc_with_cuts(const std::vector<int>& nodes, const Instance& inst,
                             const DualPrices& duals, const std::vector<Cut>& cuts);

// Incremental rcc delta for appending `next` to a partial subpath.
double rcc_arc_delta(int end, int next, const Instance& inst, const DualPrices& duals);

// Split a path's node sequence at depots/chargers into subpath node
// sequences; also reports the per-subpath battery drains.
std::vector<std::vector<int>> split_into_subpaths(const std::vector<int>& nodes, const Instance& inst);

std::string path_to_json(const Path& path, const Instance& inst, double cost, double rc);

}  // namespace ersp

#endif  // ERSP_ROUTE_HPP_
