#include "ersp/separation.hpp"

#include <algorithm>
#include <cmath>

namespace ersp {

namespace {

int full_memory_alpha(const std::vector<int>& gamma, const std::vector<int>& triple) {
    int s = 0;
    for (int t : triple) s += gamma[t];
    return s / 2;
}

}  // namespace

NodeSet build_memory(const NodeSet& S, const std::vector<const Path*>& supporting,
                     const Instance& inst) {
    NodeSet memory = S;
    Cut probe;
    probe.S = S;
    bool grew = true;
    while (grew) {
        grew = false;
        probe.memory = memory;
        for (const Path* p : supporting) {
            Cut full;
            full.S = S;
            full.memory.set();
            const int want = lmsri_coefficient(p->nodes, full);
            if (lmsri_coefficient(p->nodes, probe) >= want) continue;
            // widen: absorb everything strictly between consecutive S visits
            int last_s = -1;
            for (size_t k = 0; k < p->nodes.size(); ++k) {
                if (!S.test(p->nodes[k])) continue;
                if (last_s >= 0)
                    for (size_t j = last_s + 1; j < k; ++j)
                        if (!memory.test(p->nodes[j])) {
                            memory.set(p->nodes[j]);
                            grew = true;
                        }
                last_s = static_cast<int>(k);
            }
            probe.memory = memory;
        }
    }
    return memory;
}

std::vector<SeparatedCut> separate_lmsri(const RmpModel& model, const LpSolution& lp, int max_cuts,
                                         double tol, int threads) {
    const Instance& inst = model.instance();
    const auto& columns = model.columns();

    std::vector<int> support;
    for (size_t j = 0; j < columns.size(); ++j)
        if (lp.z[j] > 1e-9) support.push_back(static_cast<int>(j));

    std::vector<NodeSet> existing;
    for (const Cut& cut : model.cuts()) existing.push_back(cut.S);

    struct Candidate {
        std::vector<int> triple;  // task node ids
        double violation;
    };
    const int t0 = inst.first_task(), t1 = inst.first_charger();
    std::vector<std::vector<Candidate>> per_a(std::max(0, t1 - t0));
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads)) if (threads > 1)
    for (int a = t0; a < t1; ++a) {
        for (int b = a + 1; b < t1; ++b)
            for (int c = b + 1; c < t1; ++c) {
                double lhs = 0.0;
                for (int j : support) {
                    const auto& g = columns[j].gamma;
                    const int alpha = (g[inst.task_index(a)] + g[inst.task_index(b)] +
                                       g[inst.task_index(c)]) /
                                      2;
                    lhs += alpha * lp.z[j];
                }
                if (lhs <= 1.0 + tol) continue;
                NodeSet S;
                S.set(a);
                S.set(b);
                S.set(c);
                if (std::find(existing.begin(), existing.end(), S) != existing.end()) continue;
                per_a[a - t0].push_back({{a, b, c}, lhs - 1.0});
            }
    }
    std::vector<Candidate> candidates;
    for (auto& part : per_a)
        for (auto& cand : part) candidates.push_back(std::move(cand));

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        if (x.violation != y.violation) return x.violation > y.violation;
        return x.triple < y.triple;
    });
    if (static_cast<int>(candidates.size()) > max_cuts) candidates.resize(max_cuts);

    std::vector<SeparatedCut> out;
    int next_id = static_cast<int>(model.cuts().size());
    for (const Candidate& cand : candidates) {
        NodeSet S;
        for (int t : cand.triple) S.set(t);
        std::vector<const Path*> supporting;
        for (int j : support) {
            if (full_memory_alpha(columns[j].gamma,
                                  {inst.task_index(cand.triple[0]), inst.task_index(cand.triple[1]),
                                   inst.task_index(cand.triple[2])}) > 0)
                supporting.push_back(&columns[j].path);
        }
        SeparatedCut sc;
        sc.cut.id = next_id++;
        sc.cut.S = S;
        sc.cut.memory = build_memory(S, supporting, inst);
        sc.violation = cand.violation;
        out.push_back(std::move(sc));
    }
    return out;
}

}  // namespace ersp
