#include "ersp/cuts.hpp"

namespace ersp {

int lmsri_coefficient(const std::vector<int>& nodes, const Cut& cut) {
    int alpha = 0;
    int fwd = 0;  // half units
    for (int v : nodes) {
        if (!cut.memory.test(v)) {
            fwd = 0;
            continue;
        }
        if (cut.S.test(v)) {
            fwd += 1;
            if (fwd >= 2) {
                fwd -= 2;
                alpha += 1;
            }
        }
    }
    return alpha;
}

int lmsri_coefficient_algebraic(const std::vector<int>& nodes, const Cut& cut) {
    // Split indices into maximal runs inside memory; floor the half-weight sum
    // of S visits per run.
    int alpha = 0;
    size_t i = 0;
    while (i < nodes.size()) {
        if (!cut.memory.test(nodes[i])) {
            ++i;
            continue;
        }
        int s_visits = 0;
        while (i < nodes.size() && cut.memory.test(nodes[i])) {
            if (cut.S.test(nodes[i])) ++s_visits;
            ++i;
        }
        alpha += s_visits / 2;
    }
    return alpha;
}

CutResources cut_resources(const std::vector<int>& nodes, const Cut& cut) {
    CutResources r;
    for (int v : nodes) r = extend_cut_resources(r, v, cut);
    return r;
}

CutResources extend_cut_resources(const CutResources& r, int next, const Cut& cut) {
    CutResources out = r;
    const bool in_m = cut.memory.test(next);
    const int w = cut.S.test(next) ? 1 : 0;
    out.fwd_num = in_m ? (r.fwd_num + w) % 2 : 0;
    out.bwd_num = (r.bwd_num + (r.all_in_memory ? w : 0)) % 2;
    out.all_in_memory = r.all_in_memory && in_m;
    return out;
}

bool extension_collects_cut(const CutResources& r, int next, const Cut& cut) {
    return cut.memory.test(next) && cut.S.test(next) && r.fwd_num + 1 >= 2;
}

}  // namespace ersp
