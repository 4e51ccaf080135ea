#ifndef ERSP_CHARGE_HPP_
#define ERSP_CHARGE_HPP_

#include <optional>
#include <vector>

namespace ersp {

// Charging times at the m-1 interior chargers of a subpath sequence with
// charge requirements b_1..b_m. The cumulative-charge window
//   sum_{j<=i+1} b_j - B <= sum_{j<=i} tau_j <= sum_{j<=i} b_j
// holds at every prefix of a feasible plan.
struct ChargePlan {
    std::vector<double> tau;
    double cost = 0.0;
    double end_time_charging = 0.0;  // total charging time == sum tau
    double end_charge = 0.0;
    bool feasible = true;
    int infeasible_index = -1;  // subpath j with b_j > B, when infeasible
};

// Divide-and-conquer optimal plan: greedily fills the cheapest station
// (ties to the largest index), then recurses left and right. Iterative with
// an explicit stack. Total charge equals max(sum b - B, 0).
ChargePlan find_charge_sequence(const std::vector<double>& b, const std::vector<double>& delta,
                                double B);

// Exact LP ground truth for the same problem (test oracle).
ChargePlan charge_lp_oracle(const std::vector<double>& b, const std::vector<double>& delta, double B);

// Piecewise-linear rebalanced cost of adding tau units of charge at a level-f
// station given slacks Z_1..Z_{f-1} at the cheaper levels. `levels` holds
// delta_1 < ... < delta_D; f is 1-based.
double charging_cost_g(double tau, const std::vector<double>& Z, const std::vector<double>& levels,
                       int f);

// Label state of the homogeneous closed-form recursion.
struct HomLabel {
    double rcc = 0.0;
    double end_time = 0.0;
    double end_charge = 0.0;
};

struct SubpathStats {
    double rcc = 0.0;
    double time = 0.0;
    double batt = 0.0;
};

// Closed-form extension for uniform unit cost delta; returns nullopt when the
// subpath needs more than a full battery.
std::optional<HomLabel> extend_hom(const HomLabel& label, const SubpathStats& s, double delta,
                                   double B, double T);

// Full rebalancing state for heterogeneous costs: charging plan, cheapest
// index, per-level last indices and slacks. Mirrors the dynamic-programming
// update; equals from-scratch recomputation after every extension.
struct RebalanceState {
    std::vector<double> b;      // charge requirements so far
    std::vector<double> delta;  // interior charger unit costs
    std::vector<double> tau;    // current plan
    int ell = 0;                // cheapest interior index (1-based, 0 if none)
    std::vector<int> omega;     // per level d=1..D, last index charged at level d (0 if none)
    std::vector<double> Z;      // slacks, Z[0] = 0, Z[1..D]
    double rcc = 0.0;
    double end_time = 0.0;
    double end_charge = 0.0;
    bool feasible = true;
};

RebalanceState seed_rebalance(const SubpathStats& first, double start_rcc, double B);

// Extend by subpath s joined at a charger with unit cost delta_f (level f,
// 1-based within `levels`). O(D) updates of tau/omega/Z plus the g-cost
// reduced-cost increment.
void extend_het(RebalanceState& st, const SubpathStats& s, int f, const std::vector<double>& levels,
                double B, double T);

// From-scratch state for a full sequence; oracle for extend_het.
RebalanceState rebalance_from_scratch(const std::vector<double>& b, const std::vector<double>& delta,
                                      const std::vector<double>& levels, double B);

// Slim Z-update shared with pricing labels (no tau vector). `cap_term` is
// min(sum of previous charge requirements, B - b_next); with end charge e it
// equals B - max(e, b_next). Returns the new slack vector Z'[0..D] and the
// cost increment g for charge `tau_extra`.
struct ZUpdate {
    std::vector<double> Z;
    double g = 0.0;
};
ZUpdate update_slacks(const std::vector<double>& Z, double tau_extra, double cap_term, int f,
                      const std::vector<double>& levels);

}  // namespace ersp

#endif  // ERSP_CHARGE_HPP_
