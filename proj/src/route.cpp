#include "ersp/route.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace ersp {

Propagation propagate_time_charge(const std::vector<int>& nodes,
                                  const std::vector<double>& charging_times,
                                  const Instance& inst) {
    if (nodes.empty()) throw std::invalid_argument("empty node sequence");
    if (!inst.is_depot(nodes.front())) throw std::invalid_argument("path must start at a depot");

    // count interior charger visits
    size_t n_charger_visits = 0;
    for (size_t k = 1; k + 1 < nodes.size(); ++k)
        if (inst.is_charger(nodes[k])) ++n_charger_visits;
    if (charging_times.size() != n_charger_visits)
        throw std::invalid_argument("charging times must match interior charger visits");

    Propagation out;
    out.times.resize(nodes.size());
    out.charges.resize(nodes.size());
    out.times[0] = 0.0;
    out.charges[0] = inst.B;

    size_t tau_idx = 0;
    const double eps = 1e-9;
    for (size_t k = 1; k < nodes.size(); ++k) {
        const int prev = nodes[k - 1], cur = nodes[k];
        double tau = 0.0;
        if (inst.is_charger(prev) && k - 1 > 0) tau = charging_times[tau_idx++];
        out.times[k] = out.times[k - 1] + tau + inst.t(prev, cur);
        const double level = inst.is_charger(prev) ? std::min(out.charges[k - 1] + tau, inst.B)
                                                   : out.charges[k - 1];
        out.charges[k] = level - inst.b(prev, cur);
        if (out.feasible &&
            (out.times[k] > inst.T + eps || out.charges[k] < -eps || out.charges[k] > inst.B + eps)) {
            out.feasible = false;
            out.first_violation = static_cast<int>(k);
        }
    }
    return out;
}

double path_cost(const Path& path, const Instance& inst) {
    double cost = 0.0;
    size_t tau_idx = 0;
    for (size_t k = 0; k + 1 < path.nodes.size(); ++k) {
        cost += inst.c(path.nodes[k], path.nodes[k + 1]);
        if (k > 0 && inst.is_charger(path.nodes[k]))
            cost += inst.delta[path.nodes[k]] * path.charging_times[tau_idx++];
    }
    return cost;
}

double reduced_cost(const Path& path, const Instance& inst, const DualPrices& duals,
                    const std::vector<Cut>& cuts) {
    double rc = path_cost(path, inst);
    rc -= duals.kappa[path.nodes.front()];
    rc -= duals.mu[path.nodes.back()];
    for (int v : path.nodes)
        if (inst.is_task(v)) rc -= duals.nu[inst.task_index(v)];
    for (const Cut& cut : cuts)
        rc -= duals.lambda_of(cut.id) * lmsri_coefficient(path.nodes, cut);
    return rc;
}

std::vector<int> serve_counts(const std::vector<int>& nodes, const Instance& inst) {
    std::vector<int> gamma(inst.n_tasks, 0);
    for (int v : nodes)
        if (inst.is_task(v)) gamma[inst.task_index(v)]++;
    return gamma;
}

NodeSet visited_tasks(const std::vector<int>& nodes, const Instance& inst) {
    NodeSet s;
    for (int v : nodes)
        if (inst.is_task(v)) s.set(v);
    return s;
}

bool is_elementary(const std::vector<int>& nodes, const Instance& inst) {
    for (int g : serve_counts(nodes, inst))
        if (g > 1) return false;
    return true;
}

Subpath make_subpath(const std::vector<int>& nodes, const Instance& inst) {
    Subpath s;
    s.nodes = nodes;
    for (size_t k = 0; k + 1 < nodes.size(); ++k) {
        s.time += inst.t(nodes[k], nodes[k + 1]);
        s.batt += inst.b(nodes[k], nodes[k + 1]);
        s.cost += inst.c(nodes[k], nodes[k + 1]);
    }
    return s;
}

double rcc_arc_delta(int end, int next, const Instance& inst, const DualPrices& duals) {
    double d = inst.c(end, next);
    if (inst.is_task(next)) d -= duals.nu[inst.task_index(next)];
    if (inst.is_depot(next)) d -= duals.mu[next];
    return d;
}

double subpath_rcc(const std::vector<int>& nodes, const Instance& inst, const DualPrices& duals) {
    double rcc = inst.is_depot(nodes.front()) ? -duals.kappa[nodes.front()] : 0.0;
    for (size_t k = 0; k + 1 < nodes.size(); ++k)
        rcc += rcc_arc_delta(nodes[k], nodes[k + 1], inst, duals);
    return rcc;
}

double subpath_rcc_with_cuts(const std::vector<int>& nodes, const Instance& inst,
                             const DualPrices& duals, const std::vector<Cut>& cuts) {
    double rcc = subpath_rcc(nodes, inst, duals);
    for (const Cut& cut : cuts) {
        CutResources r;
        for (size_t k = 0; k < nodes.size(); ++k) {
            if (k > 0 && extension_collects_cut(r, nodes[k], cut))
                rcc -= duals.lambda_of(cut.id);
            r = extend_cut_resources(r, nodes[k], cut);
        }
    }
    return rcc;
}

std::vector<std::vector<int>> split_into_subpaths(const std::vector<int>& nodes, const Instance& inst) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int v : nodes) {
        cur.push_back(v);
        if (cur.size() > 1 && !inst.is_task(v)) {
            out.push_back(cur);
            cur = {v};
        }
    }
    return out;
}

std::string path_to_json(const Path& path, const Instance& inst, double cost, double rc) {
    nlohmann::ordered_json j;
    std::vector<std::string> names;
    for (int v : path.nodes) names.push_back(inst.ids[v]);
    j["nodes"] = names;
    nlohmann::ordered_json ch = nlohmann::ordered_json::object();
    size_t tau_idx = 0;
    for (size_t k = 1; k + 1 < path.nodes.size(); ++k)
        if (inst.is_charger(path.nodes[k])) ch[std::to_string(k)] = path.charging_times[tau_idx++];
    j["charging_times"] = std::move(ch);
    j["cost"] = cost;
    j["reduced_cost"] = rc;
    return j.dump();
}

}  // namespace ersp
