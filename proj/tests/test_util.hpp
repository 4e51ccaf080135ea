#ifndef ERSP_TEST_UTIL_HPP_
#define ERSP_TEST_UTIL_HPP_

#include <vector>

#include "ersp/duals.hpp"
#include "ersp/instance.hpp"

namespace ersp::test {

// Instance from explicit coordinates (Euclidean metrics). Node order must be
// depots, tasks, chargers.
inline Instance coord_instance(int n_depots, int n_tasks, int n_chargers,
                               const std::vector<std::array<double, 2>>& coords, double B, double T,
                               double mu = 1.0) {
    Instance inst;
    inst.n_depots = n_depots;
    inst.n_tasks = n_tasks;
    inst.n_chargers = n_chargers;
    inst.coords = coords;
    inst.B = B;
    inst.T = T;
    inst.mu_rate = mu;
    for (int i = 0; i < n_depots; ++i) inst.ids.push_back("d" + std::to_string(i));
    for (int i = 0; i < n_tasks; ++i) inst.ids.push_back("t" + std::to_string(i));
    for (int i = 0; i < n_chargers; ++i) inst.ids.push_back("r" + std::to_string(i));
    inst.delta.assign(inst.n(), 0.0);
    for (int i = inst.first_charger(); i < inst.n(); ++i) inst.delta[i] = 1.0;
    inst.v_start.assign(n_depots, 0);
    inst.v_start[0] = 1;
    inst.v_end.assign(n_depots, 0);
    inst.derive_matrices_from_coords();
    return inst;
}

inline DualPrices zero_duals(const Instance& inst) {
    DualPrices d;
    d.kappa.assign(inst.n_depots, 0.0);
    d.mu.assign(inst.n_depots, 0.0);
    d.nu.assign(inst.n_tasks, 0.0);
    return d;
}

inline DualPrices random_duals(const Instance& inst, SplitMix64& rng, int n_cuts = 0) {
    DualPrices d;
    d.kappa.assign(inst.n_depots, 0.0);
    d.mu.assign(inst.n_depots, 0.0);
    d.nu.assign(inst.n_tasks, 0.0);
    for (double& v : d.kappa) v = rng.uniform(-0.5, 0.5);
    for (double& v : d.mu) v = rng.uniform(0.0, 0.4);
    for (double& v : d.nu) v = rng.uniform(-0.2, 1.2);
    for (int q = 0; q < n_cuts; ++q) d.lambda.push_back(-rng.uniform(0.0, 0.6));
    return d;
}

}  // namespace ersp::test

#endif  // ERSP_TEST_UTIL_HPP_
