#ifndef ERSP_NG_HPP_
#define ERSP_NG_HPP_

#include <vector>

#include "ersp/bits.hpp"
#include "ersp/instance.hpp"

namespace ersp {

// ng-neighborhood: N_i contains i; task neighborhoods hold tasks only,
// depot/charger neighborhoods hold tasks plus the node itself.
struct NgNeighborhood {
    std::vector<NodeSet> N;  // per node

    static NgNeighborhood singletons(const Instance& inst);
    // i in V_T: the k tasks nearest to i by cost (i itself always included);
    // depots/chargers get {i}.
    static NgNeighborhood nearest_tasks(const Instance& inst, int k);
    static NgNeighborhood full_elementary(const Instance& inst);

    bool contains(int i, int j) const { return N[i].test(j); }
    long total_size() const;
};

// Forward set, residue, backward set of a node sequence.
struct NgLabels {
    NodeSet pi;      // nodes that cannot be appended
    NodeSet omega;   // residue: intersection of all neighborhoods so far
    NodeSet pi_inv;  // nodes that cannot precede

    static NgLabels single(int node, const NgNeighborhood& ng) {
        NgLabels l;
        l.pi.set(node);
        l.pi_inv.set(node);
        l.omega = ng.N[node];
        return l;
    }
};

inline bool ng_feasible_arc(const NgLabels& l, int next) { return !l.pi.test(next); }

inline NgLabels update_ng_labels(const NgLabels& l, int next, const NgNeighborhood& ng) {
    NgLabels out;
    out.pi = (l.pi & ng.N[next]);
    out.pi.set(next);
    out.omega = l.omega & ng.N[next];
    out.pi_inv = l.pi_inv;
    if (l.omega.test(next)) out.pi_inv.set(next);
    return out;
}

// Join of a sequence (forward set pi_seq) with a subpath starting at
// `join_node`: feasible iff the overlap is confined to the join charger.
inline bool ng_feasible_join(const NodeSet& pi_seq, const NodeSet& pi_inv_subpath, int join_node) {
    NodeSet overlap = pi_seq & pi_inv_subpath;
    overlap.reset(join_node);
    return overlap.none();
}

inline NodeSet join_forward_set(const NodeSet& pi_seq, const NgLabels& subpath_labels) {
    return subpath_labels.pi | (pi_seq & subpath_labels.omega);
}

// From-scratch evaluation of the definition; test oracle for the updates.
NgLabels ng_labels_of_sequence(const std::vector<int>& nodes, const NgNeighborhood& ng);

// Definitional ng-feasibility of a node sequence (every repeat separated by a
// node whose neighborhood misses it).
bool ng_feasible_sequence(const std::vector<int>& nodes, const NgNeighborhood& ng);

}  // namespace ersp

#endif  // ERSP_NG_HPP_
