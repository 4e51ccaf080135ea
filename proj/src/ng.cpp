#include "ersp/ng.hpp"

#include <algorithm>

namespace ersp {

NgNeighborhood NgNeighborhood::singletons(const Instance& inst) {
    NgNeighborhood ng;
    ng.N.resize(inst.n());
    for (int i = 0; i < inst.n(); ++i) ng.N[i].set(i);
    return ng;
}

NgNeighborhood NgNeighborhood::nearest_tasks(const Instance& inst, int k) {
    NgNeighborhood ng = singletons(inst);
    std::vector<int> tasks;
    for (int i = inst.first_task(); i < inst.first_charger(); ++i) tasks.push_back(i);
    for (int i : tasks) {
        std::vector<int> order = tasks;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const double da = a == i ? 0.0 : inst.c(i, a);
            const double db = b == i ? 0.0 : inst.c(i, b);
            if (da != db) return da < db;
            return a < b;
        });
        for (int j = 0; j < std::min<int>(k, order.size()); ++j) ng.N[i].set(order[j]);
    }
    return ng;
}

NgNeighborhood NgNeighborhood::full_elementary(const Instance& inst) {
    NgNeighborhood ng = singletons(inst);
    NodeSet all_tasks;
    for (int i = inst.first_task(); i < inst.first_charger(); ++i) all_tasks.set(i);
    for (int i = 0; i < inst.n(); ++i) ng.N[i] |= all_tasks;
    return ng;
}

long NgNeighborhood::total_size() const {
    long s = 0;
    for (const auto& set : N) s += static_cast<long>(set.count());
    return s;
}

NgLabels ng_labels_of_sequence(const std::vector<int>& nodes, const NgNeighborhood& ng) {
    const int m = static_cast<int>(nodes.size()) - 1;
    NgLabels out;
    // forward: n_r kept if in every later neighborhood
    for (int r = 0; r < m; ++r) {
        bool in_all = true;
        for (int rho = r + 1; rho <= m && in_all; ++rho) in_all = ng.N[nodes[rho]].test(nodes[r]);
        if (in_all) out.pi.set(nodes[r]);
    }
    out.pi.set(nodes[m]);
    // backward: n_r kept if in every earlier neighborhood
    out.pi_inv.set(nodes[0]);
    for (int r = 1; r <= m; ++r) {
        bool in_all = true;
        for (int rho = 0; rho < r && in_all; ++rho) in_all = ng.N[nodes[rho]].test(nodes[r]);
        if (in_all) out.pi_inv.set(nodes[r]);
    }
    out.omega.set();
    for (int r = 0; r <= m; ++r) out.omega &= ng.N[nodes[r]];
    return out;
}

bool ng_feasible_sequence(const std::vector<int>& nodes, const NgNeighborhood& ng) {
    const int m = static_cast<int>(nodes.size());
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
            if (nodes[j] != nodes[k]) continue;
            bool separated = false;
            for (int l = j + 1; l < k && !separated; ++l) separated = !ng.N[nodes[l]].test(nodes[j]);
            if (!separated) return false;
        }
    return true;
}

}  // namespace ersp
