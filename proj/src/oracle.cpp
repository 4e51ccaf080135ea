#include "ersp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ersp/charge.hpp"

namespace ersp {

namespace {

struct DfsState {
    const Instance* inst;
    const DualPrices* duals;
    const PricingConfig* cfg;
    const OracleLimits* limits;
    long expansions = 0;
    std::vector<EnumeratedSequence> out;

    std::vector<int> nodes;
    std::vector<int> serve;      // per task index
    std::vector<NodeSet> pi;     // forward ng-set stack (ng mode)
    double time = 0.0;           // travel time so far
    double batt_total = 0.0;     // total battery drained
    double batt_sub = 0.0;       // drained since last depot/charger
    double min_return = 0.0;     // cheapest direct time to any depot
};

double min_depot_time(const Instance& inst, int from) {
    double best = inst.is_depot(from) ? 0.0 : inst.t(from, 0);
    for (int j = 1; j < inst.n_depots; ++j)
        if (from != j) best = std::min(best, inst.t(from, j));
    return best;
}

void record(DfsState& st) {
    if (static_cast<long>(st.out.size()) >= st.limits->max_sequences)
        throw std::runtime_error("oracle enumeration limit exceeded (sequences)");
    EnumeratedSequence es;
    es.path.nodes = st.nodes;
    std::vector<double> b, delta;
    for (const auto& seg : split_into_subpaths(st.nodes, *st.inst)) {
        Subpath sp = make_subpath(seg, *st.inst);
        if (!b.empty()) delta.push_back(st.inst->delta[seg.front()]);
        b.push_back(sp.batt);
    }
    const ChargePlan plan = charge_lp_oracle(b, delta, st.inst->B);
    if (!plan.feasible) return;
    es.path.charging_times = plan.tau;
    es.cost = path_cost(es.path, *st.inst);
    es.rc = reduced_cost(es.path, *st.inst, *st.duals, st.cfg->cuts);
    st.out.push_back(std::move(es));
}

void dfs(DfsState& st) {
    const Instance& inst = *st.inst;
    if (++st.expansions > st.limits->max_expansions)
        throw std::runtime_error("oracle enumeration limit exceeded (expansions)");

    const int cur = st.nodes.back();
    for (int next = 0; next < inst.n(); ++next) {
        if (next == cur) continue;
        const double drain = inst.b(cur, next);
        const double new_sub = st.batt_sub + drain;  // current subpath's drain
        if (new_sub > inst.B + 1e-9) continue;
        const double new_total = st.batt_total + drain;
        const double new_time = st.time + inst.t(cur, next);
        // minimal charging for the prefix plus the cheapest return
        const double lb = new_time + std::max(0.0, new_total - inst.B) +
                          (inst.is_depot(next) ? 0.0 : min_depot_time(inst, next));
        if (lb > inst.T + 1e-9) continue;

        if (inst.is_task(next)) {
            const int ti = inst.task_index(next);
            if (st.cfg->elem == ElemMode::Full && st.serve[ti] >= 1) continue;
        }
        if (st.cfg->elem == ElemMode::Ng && st.pi.back().test(next)) continue;

        st.nodes.push_back(next);
        if (inst.is_task(next)) st.serve[inst.task_index(next)]++;
        if (st.cfg->elem == ElemMode::Ng) {
            NodeSet p = st.pi.back() & st.cfg->ng->N[next];
            p.set(next);
            st.pi.push_back(p);
        }
        const double old_time = st.time, old_total = st.batt_total, old_sub = st.batt_sub;
        st.time = new_time;
        st.batt_total = new_total;
        st.batt_sub = inst.is_task(next) ? new_sub : 0.0;

        // a depot completes a sequence and is never continued
        if (inst.is_depot(next))
            record(st);
        else
            dfs(st);

        st.time = old_time;
        st.batt_total = old_total;
        st.batt_sub = old_sub;
        if (st.cfg->elem == ElemMode::Ng) st.pi.pop_back();
        if (inst.is_task(next)) st.serve[inst.task_index(next)]--;
        st.nodes.pop_back();
    }
}

}  // namespace

std::vector<EnumeratedSequence> enumerate_sequences(const Instance& inst, const DualPrices& duals,
                                                    const PricingConfig& cfg,
                                                    const OracleLimits& limits) {
    if (cfg.elem == ElemMode::Ng && cfg.ng == nullptr)
        throw std::invalid_argument("ng mode requires a neighborhood");
    DfsState st;
    st.inst = &inst;
    st.duals = &duals;
    st.cfg = &cfg;
    st.limits = &limits;
    st.serve.assign(inst.n_tasks, 0);

    for (int d = 0; d < inst.n_depots; ++d) {
        st.nodes = {d};
        st.time = 0.0;
        st.batt_total = 0.0;
        st.batt_sub = 0.0;
        if (cfg.elem == ElemMode::Ng) {
            NodeSet p;
            p.set(d);
            st.pi = {p};
        }
        dfs(st);
    }
    return st.out;
}

ExactTiny solve_exact_tiny(const Instance& inst, const PricingConfig& cfg,
                           const OracleLimits& limits) {
    DualPrices zero;
    zero.kappa.assign(inst.n_depots, 0.0);
    zero.mu.assign(inst.n_depots, 0.0);
    zero.nu.assign(inst.n_tasks, 0.0);
    const auto seqs = enumerate_sequences(inst, zero, cfg, limits);

    RmpModel model(inst);
    std::vector<Path> paths;
    for (const auto& es : seqs) paths.push_back(es.path);
    model.add_columns(paths);

    ExactTiny out;
    out.n_paths = static_cast<long>(model.columns().size());
    const LpSolution lp = model.solve_lp();
    out.lp_bound = lp.objective;
    out.artificial_active = lp.artificial_active;
    const IntegerSolution ip = restore_integrality(model, 200000);
    out.ip_found = ip.found;
    out.ip_value = ip.objective;
    out.artificial_active = out.artificial_active || ip.artificial_active;
    return out;
}

}  // namespace ersp
