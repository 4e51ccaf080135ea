#include "ersp/colgen.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "ersp/separation.hpp"
#include "json.hpp"

namespace ersp {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

PricingConfig pricing_config(const SolverOptions& opt, const RmpModel& model,
                             const NgNeighborhood* ng, ElemMode elem_mode) {
    PricingConfig cfg;
    cfg.variant = opt.variant;
    cfg.elem = elem_mode;
    cfg.ng = ng;
    cfg.cuts = model.cuts();
    cfg.max_columns = opt.max_columns;
    cfg.neg_threshold = opt.neg_threshold;
    cfg.threads = opt.threads;
    return cfg;
}

long total_machines(const Instance& inst) {
    long k = 0;
    for (int v : inst.v_start) k += v;
    return k;
}

}  // namespace

std::vector<Path> initial_columns(const Instance& inst) {
    std::vector<Path> out;
    for (int i = inst.first_task(); i < inst.first_charger(); ++i) {
        Path best;
        double best_cost = 0.0;
        for (int j = 0; j < inst.n_depots; ++j)
            for (int j2 = 0; j2 < inst.n_depots; ++j2) {
                // direct tour
                Path p;
                p.nodes = {j, i, j2};
                auto pr = propagate_time_charge(p.nodes, {}, inst);
                if (!pr.feasible && inst.n_chargers > 0) {
                    const int r = inst.nearest_charger(i);
                    const double need = inst.b(j, i) + inst.b(i, r) + inst.b(r, j2) - inst.B;
                    if (need > 0 && need <= inst.B) {
                        p.nodes = {j, i, r, j2};
                        p.charging_times = {std::min(need, inst.B)};
                        pr = propagate_time_charge(p.nodes, p.charging_times, inst);
                    }
                }
                if (!pr.feasible) continue;
                const double cost = path_cost(p, inst);
                if (best.nodes.empty() || cost < best_cost) {
                    best = p;
                    best_cost = cost;
                }
            }
        if (!best.nodes.empty()) out.push_back(std::move(best));
    }
    return out;
}

ColgenResult column_generation(const Instance& inst, RmpModel& model, const SolverOptions& opt,
                               const NgNeighborhood* ng, ElemMode elem_mode) {
    const auto t0 = std::chrono::steady_clock::now();
    ColgenResult res;

    for (res.iterations = 0; res.iterations < opt.max_iterations; ++res.iterations) {
        if (ms_since(t0) > opt.time_limit_s * 1000.0) {
            res.status = TermStatus::TimeLimit;
            break;
        }
        res.lp = model.solve_lp();
        if (res.lp.status != SolveStatus::Optimal) {
            res.status = TermStatus::IterationLimit;
            break;
        }
        res.lp_bound = res.lp.objective;

        const PricingConfig cfg = pricing_config(opt, model, ng, elem_mode);
        const auto tp = std::chrono::steady_clock::now();
        std::vector<PricedPath> cols;
        if (opt.use_pathwise)
            cols = price_pathwise_benchmark(inst, res.lp.duals, cfg, &res.stats);
        else
            cols = price(inst, res.lp.duals, cfg, &res.stats);
        res.pricing_ms += ms_since(tp);

        if (cols.empty()) {
            res.status = TermStatus::Converged;
            res.dual_bound = res.lp_bound;
            res.total_ms = ms_since(t0);
            if (opt.verbose)
                std::printf("iter %ld bound %.6f converged (%.0f ms)\n", res.iterations,
                            res.lp_bound, res.total_ms);
            return res;
        }
        const double min_rc = cols.front().rc;
        res.dual_bound = res.lp_bound + total_machines(inst) * std::min(0.0, min_rc);

        std::vector<Path> paths;
        for (auto& pp : cols) paths.push_back(std::move(pp.path));
        const int added = model.add_columns(paths);
        res.columns_added += added;
        if (opt.verbose)
            std::printf("iter %ld bound %.6f min_rc %.6f cols +%d labels %ld elapsed %.0f ms\n",
                        res.iterations, res.lp_bound, min_rc, added,
                        res.stats.subpath_labels + res.stats.sequence_labels + res.stats.path_labels,
                        ms_since(t0));
        if (added == 0) {
            // duplicates only: numerical stall; stop rather than loop
            res.status = TermStatus::Converged;
            res.dual_bound = res.lp_bound;
            break;
        }
    }
    if (res.iterations >= opt.max_iterations) res.status = TermStatus::IterationLimit;
    res.total_ms = ms_since(t0);
    return res;
}

bool expand_ng(NgNeighborhood& ng, const std::vector<const Path*>& support, const Instance& inst) {
    bool changed = false;
    for (const Path* p : support) {
        const auto& nodes = p->nodes;
        std::vector<int> last_seen(inst.n(), -1);
        for (int k = 0; k < static_cast<int>(nodes.size()); ++k) {
            const int v = nodes[k];
            if (inst.is_task(v) && last_seen[v] >= 0) {
                for (int l = last_seen[v] + 1; l < k; ++l)
                    if (!ng.N[nodes[l]].test(v)) {
                        ng.N[nodes[l]].set(v);
                        changed = true;
                    }
            }
            last_seen[v] = k;
        }
    }
    return changed;
}

double compute_gap(double lp_bound, double ip_value) { return (ip_value - lp_bound) / ip_value; }

AdaptiveResult adaptive_solve(const Instance& inst, const SolverOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    AdaptiveResult res(inst);

    const int sqrt_n = static_cast<int>(std::ceil(std::sqrt(std::max(1, inst.n_tasks))));
    switch (opt.policy) {
        case ElemPolicy::None:
            res.ng = NgNeighborhood::singletons(inst);
            break;
        case ElemPolicy::NgStatic:
        case ElemPolicy::Adaptive:
            res.ng = NgNeighborhood::nearest_tasks(inst, sqrt_n);
            break;
        case ElemPolicy::Full:
            res.ng = NgNeighborhood::full_elementary(inst);
            break;
    }
    const ElemMode elem_mode = opt.policy == ElemPolicy::None ? ElemMode::None
                               : opt.policy == ElemPolicy::Full ? ElemMode::Full
                                                                : ElemMode::Ng;

    res.model.add_columns(initial_columns(inst));

    while (true) {
        if (ms_since(t0) > opt.time_limit_s * 1000.0) {
            res.status = TermStatus::TimeLimit;
            break;
        }
        SolverOptions inner = opt;
        inner.time_limit_s = opt.time_limit_s - ms_since(t0) / 1000.0;
        const ColgenResult cg = column_generation(inst, res.model, inner, &res.ng, elem_mode);
        res.lp_bound = cg.lp_bound;
        res.lp_artificial_active = cg.lp.artificial_active;
        res.total_iterations += cg.iterations;
        res.total_columns += cg.columns_added;
        res.pricing_ms += cg.pricing_ms;
        res.bound_trajectory.push_back(cg.lp_bound);
        if (cg.status != TermStatus::Converged) {
            res.status = cg.status;
            break;
        }

        const LpSolution& lp = cg.lp;
        std::vector<const Path*> support;
        for (size_t j = 0; j < res.model.columns().size(); ++j)
            if (lp.z[j] > 1e-9) support.push_back(&res.model.columns()[j].path);

        // Step 3: elementarity via ng expansion
        if (opt.policy == ElemPolicy::Adaptive) {
            bool has_nonelem = false;
            for (const Path* p : support)
                if (!is_elementary(p->nodes, inst)) has_nonelem = true;
            if (has_nonelem) {
                // ng-feasible non-elementary support always admits an expansion
                if (!expand_ng(res.ng, support, inst)) break;
                ++res.ng_expansions;
                std::vector<char> keep;
                for (const auto& col : res.model.columns())
                    keep.push_back(ng_feasible_sequence(col.path.nodes, res.ng) ? 1 : 0);
                res.model.filter_columns(keep);
                continue;
            }
        }

        // Step 4: lm-SRI separation
        if (opt.cuts && res.cut_rounds < opt.max_cut_rounds) {
            const auto seps = separate_lmsri(res.model, lp, opt.max_cuts_per_round, 1e-6, opt.threads);
            if (!seps.empty()) {
                for (const auto& sc : seps) res.model.add_cut_row(sc.cut);
                ++res.cut_rounds;
                continue;
            }
        }
        break;  // Step 2 termination
    }

    res.ip = restore_integrality(res.model, opt.bnb_node_limit);
    if (res.ip.found && !res.ip.artificial_active && res.ip.objective > 0) {
        res.gap = compute_gap(res.lp_bound, res.ip.objective);
        res.gap_defined = true;
    }
    res.total_ms = ms_since(t0);
    return res;
}

std::string summary_json(const Instance& inst, const SolverOptions& opt, const AdaptiveResult& res) {
    nlohmann::ordered_json j;
    j["n_tasks"] = inst.n_tasks;
    j["n_chargers"] = inst.n_chargers;
    j["variant"] = opt.variant == Variant::Het ? "het" : "hom";
    switch (opt.policy) {
        case ElemPolicy::None: j["elementarity"] = "none"; break;
        case ElemPolicy::NgStatic: j["elementarity"] = "ng"; break;
        case ElemPolicy::Adaptive: j["elementarity"] = "adaptive"; break;
        case ElemPolicy::Full: j["elementarity"] = "full"; break;
    }
    j["cuts"] = opt.cuts;
    j["pricing"] = opt.use_pathwise ? "pathwise" : "bilevel";
    j["status"] = res.status == TermStatus::Converged ? "converged"
                  : res.status == TermStatus::TimeLimit ? "time-limit"
                                                        : "iteration-limit";
    j["lp_bound"] = res.lp_bound;
    j["ip_value"] = res.ip.found ? res.ip.objective : 0.0;
    j["ip_found"] = res.ip.found;
    j["ip_proven_in_pool"] = res.ip.proven_optimal;
    j["artificial_active"] = res.ip.artificial_active;
    if (res.gap_defined) j["gap"] = res.gap;
    j["iterations"] = res.total_iterations;
    j["ng_expansions"] = res.ng_expansions;
    j["cut_rounds"] = res.cut_rounds;
    j["cuts_added"] = res.model.cuts().size();
    j["columns"] = res.model.columns().size();
    j["pricing_ms"] = res.pricing_ms;
    j["total_ms"] = res.total_ms;
    if (res.ip.found) {
        nlohmann::ordered_json routes = nlohmann::ordered_json::array();
        for (size_t c = 0; c < res.model.columns().size(); ++c) {
            const long count = std::lround(res.ip.z[c]);
            if (count <= 0) continue;
            const Column& col = res.model.columns()[c];
            const double rc = 0.0;
            nlohmann::ordered_json entry =
                nlohmann::ordered_json::parse(path_to_json(col.path, inst, col.cost, rc));
            entry.erase("reduced_cost");
            entry["machines"] = count;
            routes.push_back(std::move(entry));
        }
        j["routes"] = std::move(routes);
    }
    return j.dump(2);
}

}  // namespace ersp
