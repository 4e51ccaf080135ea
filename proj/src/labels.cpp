#include "ersp/labels.hpp"

#include <algorithm>
#include <cmath>

namespace ersp {

namespace {
inline double pos(double x) { return x > 0.0 ? x : 0.0; }
}  // namespace

// ---------------------------------------------------------------------------
// first level

SubpathLabel seed_subpath_label(int node, const LabelContext& ctx) {
    const Instance& inst = *ctx.inst;
    SubpathLabel l;
    l.start = l.end = node;
    l.rcc = inst.is_depot(node) ? -ctx.duals->kappa[node] : 0.0;
    if (ctx.cfg->elem == ElemMode::Ng) l.ng = NgLabels::single(node, *ctx.cfg->ng);
    for (const Cut& cut : ctx.cfg->cuts) l.cut_res.push_back(cut_resources({node}, cut));
    return l;
}

std::optional<SubpathLabel> extend_subpath_label(const SubpathLabel& l, int next,
                                                 const LabelContext& ctx) {
    const Instance& inst = *ctx.inst;
    if (l.complete(inst)) throw std::logic_error("extension from a completed subpath");
    if (next == l.end) return std::nullopt;

    const double time = l.time + inst.t(l.end, next);
    const double batt = l.batt + inst.b(l.end, next);
    if (time > inst.T + ctx.eps || batt > inst.B + ctx.eps) return std::nullopt;
    if (ctx.cfg->elem == ElemMode::Full && inst.is_task(next) && l.served.test(next))
        return std::nullopt;
    if (ctx.cfg->elem == ElemMode::Ng && !ng_feasible_arc(l.ng, next)) return std::nullopt;

    SubpathLabel out;
    out.start = l.start;
    out.end = next;
    out.n_arcs = l.n_arcs + 1;
    out.time = time;
    out.batt = batt;
    out.rcc = l.rcc + rcc_arc_delta(l.end, next, inst, *ctx.duals);
    out.served = l.served;
    if (inst.is_task(next)) out.served.set(next);
    if (ctx.cfg->elem == ElemMode::Ng) out.ng = update_ng_labels(l.ng, next, *ctx.cfg->ng);
    out.cut_res.resize(l.cut_res.size());
    for (size_t q = 0; q < l.cut_res.size(); ++q) {
        const Cut& cut = ctx.cfg->cuts[q];
        if (extension_collects_cut(l.cut_res[q], next, cut))
            out.rcc -= ctx.duals->lambda_of(cut.id);
        out.cut_res[q] = extend_cut_resources(l.cut_res[q], next, cut);
    }
    return out;
}

double cut_domination_slack_subpath(const std::vector<CutResources>& a,
                                    const std::vector<CutResources>& b, const LabelContext& ctx) {
    double slack = 0.0;
    for (size_t q = 0; q < a.size(); ++q) {
        const double lambda = ctx.duals->lambda_of(ctx.cfg->cuts[q].id);
        if (lambda == 0.0) continue;
        const int fa = a[q].fwd_num, ba = a[q].bwd_num;
        const int fb = b[q].fwd_num, bb = b[q].bwd_num;
        int phi;
        if (!a[q].all_in_memory && !b[q].all_in_memory) {
            phi = (ba > bb ? 1 : 0) + (fa > fb ? 1 : 0);
        } else if (!a[q].all_in_memory && b[q].all_in_memory) {
            phi = 1;
            if (ba > bb && fa > fb && ba > bb + fb) phi += 1;
            if (ba <= bb && fa <= fb && ba <= bb + fb - 2) phi -= 1;
        } else if (a[q].all_in_memory && !b[q].all_in_memory) {
            phi = 1;
            if (ba > bb && fa > fb && ba + fa - 2 > bb) phi += 1;
            if (ba <= bb && fa <= fb && ba + fa <= bb) phi -= 1;
        } else {
            phi = ba > bb ? 1 : 0;
        }
        slack -= lambda * phi;
    }
    return slack;
}

double cut_domination_slack_forward(const std::vector<int8_t>& fa, const std::vector<int8_t>& fb,
                                    const LabelContext& ctx) {
    double slack = 0.0;
    for (size_t q = 0; q < fa.size(); ++q)
        if (fa[q] > fb[q]) slack -= ctx.duals->lambda_of(ctx.cfg->cuts[q].id);
    return slack;
}

bool subpath_dominates(const SubpathLabel& a, const SubpathLabel& b, const LabelContext& ctx) {
    const double eps = ctx.eps;
    if (a.time > b.time + eps || a.batt > b.batt + eps) return false;
    if (ctx.cfg->elem == ElemMode::Full && !is_subset(a.served, b.served)) return false;
    if (ctx.cfg->elem == ElemMode::Ng) {
        if (!is_subset(a.ng.pi, b.ng.pi) || !is_subset(a.ng.omega, b.ng.omega) ||
            !is_subset(a.ng.pi_inv, b.ng.pi_inv))
            return false;
    }
    if (ctx.cfg->cuts.empty()) return a.rcc <= b.rcc + eps;
    return b.rcc - a.rcc >= cut_domination_slack_subpath(a.cut_res, b.cut_res, ctx) - eps;
}

// ---------------------------------------------------------------------------
// second level

SequenceLabel seed_sequence_label(const CompletedSubpath& s, int index, const LabelContext& ctx) {
    const Instance& inst = *ctx.inst;
    SequenceLabel l;
    l.start = s.sp.start();
    l.end = s.sp.end();
    l.n_subpaths = 1;
    l.rcc = s.rcc;
    l.time = s.sp.time;
    l.charge = inst.B - s.sp.batt;
    if (ctx.cfg->variant == Variant::Het) l.Z.assign(ctx.levels.size() + 1, 0.0);
    l.served = s.served;
    l.pi = s.ng.pi;
    for (const CutResources& r : s.cut_res) l.fwd_num.push_back(static_cast<int8_t>(r.fwd_num));
    l.via = index;
    return l;
}

std::optional<SequenceLabel> extend_sequence_label(const SequenceLabel& l, const CompletedSubpath& s,
                                                   int index, const LabelContext& ctx) {
    const Instance& inst = *ctx.inst;
    if (l.complete(inst)) throw std::logic_error("extension from a complete sequence");
    if (s.sp.start() != l.end) throw std::logic_error("sequence/subpath endpoint mismatch");
    if (s.sp.batt > inst.B + ctx.eps) return std::nullopt;

    if (ctx.cfg->elem == ElemMode::Full && (l.served & s.served).any()) return std::nullopt;
    if (ctx.cfg->elem == ElemMode::Ng && !ng_feasible_join(l.pi, s.ng.pi_inv, s.sp.start()))
        return std::nullopt;

    const double tau = pos(s.sp.batt - l.charge);
    const double time = l.time + tau + s.sp.time;
    if (time > inst.T + ctx.eps) return std::nullopt;

    SequenceLabel out;
    out.start = l.start;
    out.end = s.sp.end();
    out.n_subpaths = l.n_subpaths + 1;
    out.time = time;
    out.charge = l.charge + tau - s.sp.batt;
    out.rcc = l.rcc + s.rcc;
    if (ctx.cfg->variant == Variant::Hom) {
        out.rcc += inst.delta[l.end] * tau;
    } else {
        const int f = ctx.level_of(l.end);
        const double cap_term = inst.B - std::max(l.charge, s.sp.batt);
        ZUpdate zu = update_slacks(l.Z, tau, cap_term, f, ctx.levels);
        out.rcc += zu.g;
        out.Z = std::move(zu.Z);
    }
    out.served = l.served | s.served;
    if (ctx.cfg->elem == ElemMode::Ng) out.pi = join_forward_set(l.pi, s.ng);
    out.fwd_num.resize(l.fwd_num.size());
    for (size_t q = 0; q < l.fwd_num.size(); ++q) {
        if (l.fwd_num[q] + s.cut_res[q].bwd_num >= 2)
            out.rcc -= ctx.duals->lambda_of(ctx.cfg->cuts[q].id);
        const int carried = s.cut_res[q].all_in_memory ? l.fwd_num[q] : 0;
        out.fwd_num[q] = static_cast<int8_t>((s.cut_res[q].fwd_num + carried) % 2);
    }
    out.via = index;
    return out;
}

bool sequence_dominates(const SequenceLabel& a, const SequenceLabel& b, const LabelContext& ctx) {
    const Instance& inst = *ctx.inst;
    const double eps = ctx.eps;
    if (a.time > b.time + eps || -a.charge > -b.charge + eps) return false;
    if (ctx.cfg->variant == Variant::Het && inst.is_charger(a.end)) {
        // Z comparisons only up to the end charger's level (Remark scope)
        const int f = ctx.level_of(a.end);
        for (int d = 1; d <= f - 1; ++d)
            if (-a.Z[d] > -b.Z[d] + eps) return false;
    }
    if (ctx.cfg->elem == ElemMode::Full && !is_subset(a.served, b.served)) return false;
    if (ctx.cfg->elem == ElemMode::Ng && !is_subset(a.pi, b.pi)) return false;
    if (ctx.cfg->cuts.empty()) return a.rcc <= b.rcc + eps;
    return b.rcc - a.rcc >= cut_domination_slack_forward(a.fwd_num, b.fwd_num, ctx) - eps;
}

// ---------------------------------------------------------------------------
// path-based benchmark

PathLabel seed_path_label(int depot, const LabelContext& ctx) {
    PathLabel l;
    l.start = l.end = depot;
    l.rcc = -ctx.duals->kappa[depot];
    l.charge = ctx.inst->B;
    if (ctx.cfg->elem == ElemMode::Ng) l.pi.set(depot);
    for (const Cut& cut : ctx.cfg->cuts) l.cut_res.push_back(cut_resources({depot}, cut));
    return l;
}

std::optional<PathLabel> extend_path_label(const PathLabel& l, int next, const LabelContext& ctx) {
    const Instance& inst = *ctx.inst;
    if (next == l.end) return std::nullopt;
    const double drain = inst.b(l.end, next);
    if (l.bsince + drain > inst.B + ctx.eps) return std::nullopt;
    // deficit charged retroactively at the last charger
    const double x = pos(drain - l.charge);
    const double time = l.time + x + inst.t(l.end, next);
    if (time > inst.T + ctx.eps) return std::nullopt;
    if (ctx.cfg->elem == ElemMode::Full && inst.is_task(next) && l.served.test(next))
        return std::nullopt;
    if (ctx.cfg->elem == ElemMode::Ng && l.pi.test(next)) return std::nullopt;

    PathLabel out;
    out.start = l.start;
    out.end = next;
    out.n_arcs = l.n_arcs + 1;
    out.time = time;
    out.charge = l.charge + x - drain;
    out.bsince = inst.is_charger(next) ? 0.0 : l.bsince + drain;
    // retro charge priced at the shared uniform unit cost
    out.rcc = l.rcc + rcc_arc_delta(l.end, next, inst, *ctx.duals) + ctx.uniform_delta * x;
    out.served = l.served;
    if (inst.is_task(next)) out.served.set(next);
    if (ctx.cfg->elem == ElemMode::Ng) {
        out.pi = l.pi & ctx.cfg->ng->N[next];
        out.pi.set(next);
    }
    out.cut_res.resize(l.cut_res.size());
    for (size_t q = 0; q < l.cut_res.size(); ++q) {
        const Cut& cut = ctx.cfg->cuts[q];
        if (extension_collects_cut(l.cut_res[q], next, cut))
            out.rcc -= ctx.duals->lambda_of(cut.id);
        out.cut_res[q] = extend_cut_resources(l.cut_res[q], next, cut);
    }
    return out;
}

bool path_dominates(const PathLabel& a, const PathLabel& b, const LabelContext& ctx) {
    const double eps = ctx.eps;
    if (a.time > b.time + eps) return false;
    if (ctx.cfg->remark1_criteria) {
        if (a.time - a.charge > b.time - b.charge + eps) return false;
    } else {
        if (-a.charge > -b.charge + eps) return false;
    }
    if (a.bsince > b.bsince + eps) return false;
    if (ctx.cfg->elem == ElemMode::Full && !is_subset(a.served, b.served)) return false;
    if (ctx.cfg->elem == ElemMode::Ng && !is_subset(a.pi, b.pi)) return false;
    if (ctx.cfg->cuts.empty()) return a.rcc <= b.rcc + eps;
    std::vector<int8_t> fa, fb;
    for (const auto& r : a.cut_res) fa.push_back(static_cast<int8_t>(r.fwd_num));
    for (const auto& r : b.cut_res) fb.push_back(static_cast<int8_t>(r.fwd_num));
    return b.rcc - a.rcc >= cut_domination_slack_forward(fa, fb, ctx) - eps;
}

}  // namespace ersp
