#include "ersp/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ersp/charge.hpp"

namespace ersp {

namespace {

Instance unbounded_battery_twin(const Instance& inst) {
    Instance relaxed = inst;
    double min_t = 0.0, max_b = 0.0;
    for (int i = 0; i < inst.n(); ++i)
        for (int j = 0; j < inst.n(); ++j) {
            if (i == j) continue;
            if (min_t == 0.0 || inst.t(i, j) < min_t) min_t = inst.t(i, j);
            max_b = std::max(max_b, inst.b(i, j));
        }
    const double max_arcs = min_t > 0 ? inst.T / min_t : 1.0;
    relaxed.B = max_b * (max_arcs + 1.0) + inst.B;
    return relaxed;
}

// Repair one route on the real instance: whenever the charge would go
// negative, insert a detour to a charger at the latest earlier position where
// one is still reachable. Charging amount: full battery or the remaining
// requirement, whichever is smaller.
bool repair_route(const std::vector<int>& nodes, const Instance& inst, Path* out) {
    std::vector<int> seq = nodes;
    std::vector<double> tau_at(seq.size(), 0.0);  // charge added when leaving index k

    auto charge_at = [&](size_t upto) {  // arrival charge at seq[upto]
        double c = inst.B;
        for (size_t k = 1; k <= upto; ++k) {
            if (inst.is_charger(seq[k - 1]) && k - 1 > 0) c = std::min(c + tau_at[k - 1], inst.B);
            c -= inst.b(seq[k - 1], seq[k]);
        }
        return c;
    };
    auto first_failure = [&]() -> int {
        double c = inst.B;
        for (size_t k = 1; k < seq.size(); ++k) {
            if (inst.is_charger(seq[k - 1]) && k - 1 > 0) c = std::min(c + tau_at[k - 1], inst.B);
            c -= inst.b(seq[k - 1], seq[k]);
            if (c < -1e-12) return static_cast<int>(k);
        }
        return -1;
    };

    const size_t max_insertions = 3 * nodes.size() + 4;
    while (true) {
        if (seq.size() > nodes.size() + max_insertions) return false;
        const int fail = first_failure();
        if (fail < 0) break;
        // latest insertion point whose charge still reaches some charger
        bool inserted = false;
        for (int j = fail - 1; j >= 0 && !inserted; --j) {
            if (inst.is_charger(seq[j])) {
                // top up an existing stop instead of inserting another
                const double arrival = charge_at(j);
                double remaining = 0.0;
                for (size_t k2 = j; k2 + 1 < seq.size(); ++k2)
                    remaining += inst.b(seq[k2], seq[k2 + 1]);
                const double want = std::min(inst.B - arrival, std::max(0.0, remaining - arrival));
                if (want > tau_at[j] + 1e-12) {
                    tau_at[j] = want;
                    inserted = true;
                }
                break;
            }
            const double cj = charge_at(j);
            int best = -1;
            double best_detour = 0.0;
            for (int r = inst.first_charger(); r < inst.n(); ++r) {
                if (r == seq[j] || inst.b(seq[j], r) > cj + 1e-12) continue;
                const double detour = inst.c(seq[j], r) + inst.c(r, seq[j + 1]) - inst.c(seq[j], seq[j + 1]);
                if (best < 0 || detour < best_detour) {
                    best = r;
                    best_detour = detour;
                }
            }
            if (best < 0) continue;
            const double at_r = cj - inst.b(seq[j], best);
            double remaining = inst.b(best, seq[j + 1]);
            for (size_t k2 = j + 1; k2 + 1 < seq.size(); ++k2)
                remaining += inst.b(seq[k2], seq[k2 + 1]);
            const double tau = std::min(inst.B - at_r, std::max(0.0, remaining - at_r));
            seq.insert(seq.begin() + j + 1, best);
            tau_at.insert(tau_at.begin() + j + 1, tau);
            inserted = true;
        }
        if (!inserted) return false;
    }

    out->nodes = seq;
    out->charging_times.clear();
    for (size_t k = 1; k + 1 < seq.size(); ++k)
        if (inst.is_charger(seq[k])) out->charging_times.push_back(tau_at[k]);
    const Propagation pr = propagate_time_charge(out->nodes, out->charging_times, inst);
    return pr.feasible;
}

}  // namespace

RouteThenChargeResult route_then_charge(const Instance& inst, const SolverOptions& opt) {
    RouteThenChargeResult res;

    const Instance relaxed = unbounded_battery_twin(inst);
    const AdaptiveResult stage1 = adaptive_solve(relaxed, opt);
    if (!stage1.ip.found || stage1.ip.artificial_active) return res;

    res.feasible = true;
    for (size_t j = 0; j < stage1.model.columns().size(); ++j) {
        const long count = std::lround(stage1.ip.z[j]);
        if (count <= 0) continue;
        Path repaired;
        if (!repair_route(stage1.model.columns()[j].path.nodes, inst, &repaired)) {
            res.unrepairable += static_cast<int>(count);
            res.feasible = false;
            continue;
        }
        res.cost += count * path_cost(repaired, inst);
        for (long c = 0; c < count; ++c) res.routes.push_back(repaired);
    }

    const AdaptiveResult integrated = adaptive_solve(inst, opt);
    res.integrated_found = integrated.ip.found && !integrated.ip.artificial_active;
    res.integrated_cost = integrated.ip.objective;
    return res;
}

HetComparison compare_het_vs_hom(const Instance& inst, const SolverOptions& opt) {
    HetComparison res;
    Instance hom = inst;
    double mean = 0.0;
    for (int r = inst.first_charger(); r < inst.n(); ++r) mean += inst.delta[r];
    mean /= std::max(1, inst.n_chargers);
    for (int r = inst.first_charger(); r < inst.n(); ++r) hom.delta[r] = mean;

    SolverOptions hom_opt = opt;
    hom_opt.variant = Variant::Hom;
    const AdaptiveResult hom_res = adaptive_solve(hom, hom_opt);
    if (!hom_res.ip.found || hom_res.ip.artificial_active) return res;

    res.found = true;
    for (size_t j = 0; j < hom_res.model.columns().size(); ++j) {
        const long count = std::lround(hom_res.ip.z[j]);
        if (count <= 0) continue;
        const Path& p = hom_res.model.columns()[j].path;

        // re-price the Hom schedule at the true heterogeneous costs
        double repriced = 0.0;
        size_t tau_idx = 0;
        for (size_t k = 1; k + 1 < p.nodes.size(); ++k)
            if (inst.is_charger(p.nodes[k])) repriced += inst.delta[p.nodes[k]] * p.charging_times[tau_idx++];

        // re-optimize charging on the same route
        std::vector<double> b, delta_true;
        for (const auto& seg : split_into_subpaths(p.nodes, inst)) {
            if (!b.empty()) delta_true.push_back(inst.delta[seg.front()]);
            b.push_back(make_subpath(seg, inst).batt);
        }
        const ChargePlan plan = find_charge_sequence(b, delta_true, inst.B);

        res.hom_repriced_charging += count * repriced;
        res.rebalanced_charging += count * plan.cost;
        double arcs = 0.0;
        for (size_t k = 0; k + 1 < p.nodes.size(); ++k) arcs += inst.c(p.nodes[k], p.nodes[k + 1]);
        res.hom_routes_arc_cost += count * arcs;
    }

    SolverOptions het_opt = opt;
    het_opt.variant = Variant::Het;
    const AdaptiveResult het_res = adaptive_solve(inst, het_opt);
    if (het_res.ip.found && !het_res.ip.artificial_active) res.integrated_cost = het_res.ip.objective;
    return res;
}

}  // namespace ersp
