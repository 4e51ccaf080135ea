// Benchmark: OpenMP first-level pricing vs the serial reference, and
// bi-level vs path-based pricing inside full column generation.

#include <chrono>
#include <cstdio>
#include <vector>

#include "ersp/colgen.hpp"

using namespace ersp;

namespace {

double ms(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

DualPrices perturbed_duals(const Instance& inst, uint64_t seed) {
    SplitMix64 rng(seed);
    DualPrices d;
    d.kappa.assign(inst.n_depots, 0.0);
    d.mu.assign(inst.n_depots, 0.0);
    d.nu.assign(inst.n_tasks, 0.0);
    for (double& v : d.nu) v = rng.uniform(0.2, 1.4);
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    int n_tasks = 14;
    int threads = 4;
    int reps = 3;
    if (argc > 1) n_tasks = std::atoi(argv[1]);
    if (argc > 2) threads = std::atoi(argv[2]);
    if (argc > 3) reps = std::atoi(argv[3]);

    GenParams gp;
    gp.n_tasks = n_tasks;
    gp.area_width = 3;
    gp.area_height = 3;
    gp.T_over_B = 5.0;
    gp.mu_rate = 0.35;
    gp.fleet = n_tasks / 3 + 1;
    gp.seed = 7;
    const Instance inst = generate_instance(gp);
    const DualPrices duals = perturbed_duals(inst, 11);

    std::printf("instance: %d tasks, %d chargers, T/B %.1f, mu %.2f\n", inst.n_tasks,
                inst.n_chargers, gp.T_over_B, gp.mu_rate);

    // first-level kernel: serial vs OpenMP
    PricingConfig cfg;
    cfg.elem = ElemMode::None;
    for (int rep = 0; rep < reps; ++rep) {
        cfg.threads = 1;
        auto t0 = std::chrono::steady_clock::now();
        const auto serial = find_nondominated_subpaths(inst, duals, cfg);
        auto t1 = std::chrono::steady_clock::now();
        cfg.threads = threads;
        const auto parallel = find_nondominated_subpaths(inst, duals, cfg);
        auto t2 = std::chrono::steady_clock::now();

        bool equal = serial.size() == parallel.size();
        for (size_t i = 0; equal && i < serial.size(); ++i)
            equal = serial[i].sp.nodes == parallel[i].sp.nodes;
        std::printf("subpath dp: serial %.1f ms, %d threads %.1f ms, speedup %.2fx, equal=%s (%zu subpaths)\n",
                    ms(t0, t1), threads, ms(t1, t2), ms(t0, t1) / std::max(1e-9, ms(t1, t2)),
                    equal ? "yes" : "NO", serial.size());
    }

    // full column generation: bi-level vs path-based
    SolverOptions opt;
    opt.policy = ElemPolicy::NgStatic;
    opt.cuts = false;
    opt.bnb_node_limit = 0;

    opt.use_pathwise = false;
    const AdaptiveResult bi = adaptive_solve(inst, opt);
    opt.use_pathwise = true;
    const AdaptiveResult pw = adaptive_solve(inst, opt);
    std::printf("colgen: bilevel %.1f ms (bound %.6f), pathwise %.1f ms (bound %.6f), ratio %.2fx\n",
                bi.total_ms, bi.lp_bound, pw.total_ms, pw.lp_bound, pw.total_ms / bi.total_ms);
    return 0;
}
