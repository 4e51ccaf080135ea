#include "ersp/pricing.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace ersp {

namespace {

using HeapEntry = std::tuple<double, long, int>;  // (key, fifo, arena index)
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>>;

enum : uint8_t { kQueued = 0, kSettled = 1, kDead = 2 };

// Alg. 2 for one start node. Buckets are keyed by (end, completeness) so the
// start-node seed never competes with closed loops back to it.
void run_subpath_dp(int start, const LabelContext& ctx,
                    std::vector<CompletedSubpath>& out, long* label_count) {
    const Instance& inst = *ctx.inst;
    const int n = inst.n();

    std::vector<SubpathLabel> arena;
    std::vector<uint8_t> state;
    std::vector<std::vector<int>> buckets(2 * n);
    MinHeap heap;
    long fifo = 0;

    auto try_insert = [&](SubpathLabel&& lab) {
        const int key = 2 * lab.end + (lab.complete(inst) ? 1 : 0);
        auto& bucket = buckets[key];
        for (int idx : bucket)
            if (state[idx] != kDead && subpath_dominates(arena[idx], lab, ctx)) return;
        for (int idx : bucket)
            if (state[idx] == kQueued && subpath_dominates(lab, arena[idx], ctx)) state[idx] = kDead;
        bucket.erase(std::remove_if(bucket.begin(), bucket.end(),
                                    [&](int idx) { return state[idx] == kDead; }),
                     bucket.end());
        const int idx = static_cast<int>(arena.size());
        arena.push_back(std::move(lab));
        state.push_back(kQueued);
        bucket.push_back(idx);
        heap.emplace(arena[idx].time, fifo++, idx);
    };

    try_insert(seed_subpath_label(start, ctx));

    while (!heap.empty()) {
        const auto [key, seq, idx] = heap.top();
        heap.pop();
        if (state[idx] != kQueued) continue;
        state[idx] = kSettled;

        if (arena[idx].complete(inst)) {
            CompletedSubpath cs;
            std::vector<int> nodes;
            for (int cur = idx; cur >= 0; cur = arena[cur].parent)
                nodes.push_back(arena[cur].parent >= 0 ? arena[cur].via : arena[cur].start);
            std::reverse(nodes.begin(), nodes.end());
            cs.sp = make_subpath(nodes, inst);
            cs.rcc = arena[idx].rcc;
            cs.served = visited_tasks(nodes, inst);
            cs.ng = arena[idx].ng;
            cs.cut_res = arena[idx].cut_res;
            out.push_back(std::move(cs));
            continue;
        }
        for (int next = 0; next < n; ++next) {
            if (next == arena[idx].end) continue;
            auto ext = extend_subpath_label(arena[idx], next, ctx);
            if (!ext) continue;
            ext->parent = idx;
            ext->via = static_cast<int16_t>(next);
            try_insert(std::move(*ext));
        }
    }
    if (label_count) *label_count += static_cast<long>(arena.size());
}

}  // namespace

std::vector<CompletedSubpath> find_nondominated_subpaths(const Instance& inst,
                                                         const DualPrices& duals,
                                                         const PricingConfig& cfg,
                                                         PricingStats* stats) {
    LabelContext ctx(inst, duals, cfg);
    std::vector<int> starts;
    for (int i = 0; i < inst.n(); ++i)
        if (!inst.is_task(i)) starts.push_back(i);

    std::vector<std::vector<CompletedSubpath>> per_start(starts.size());
    std::vector<long> counts(starts.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, cfg.threads)) \
    if (cfg.threads > 1)
    for (int si = 0; si < static_cast<int>(starts.size()); ++si)
        run_subpath_dp(starts[si], ctx, per_start[si], &counts[si]);

    std::vector<CompletedSubpath> out;
    for (size_t si = 0; si < starts.size(); ++si)
        for (auto& cs : per_start[si]) out.push_back(std::move(cs));
    if (stats) {
        for (long c : counts) stats->subpath_labels += c;
        if (cfg.count_buckets) {
            std::map<std::pair<int, int>, long> counts_by_bucket;
            for (const auto& cs : out) counts_by_bucket[{cs.sp.start(), cs.sp.end()}]++;
            for (const auto& [key, count] : counts_by_bucket)
                stats->bucket_counts.emplace_back(
                    inst.ids[key.first] + "->" + inst.ids[key.second], count);
        }
    }
    return out;
}

std::string bucket_counts_json(const PricingStats& stats) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [bucket, count] : stats.bucket_counts) j[bucket] = count;
    return j.dump(2);
}

Path assemble_path(const std::vector<const CompletedSubpath*>& chain, const Instance& inst) {
    Path path;
    std::vector<double> b, delta;
    for (size_t k = 0; k < chain.size(); ++k) {
        const auto& nodes = chain[k]->sp.nodes;
        if (k == 0)
            path.nodes = nodes;
        else {
            delta.push_back(inst.delta[nodes.front()]);
            path.nodes.insert(path.nodes.end(), nodes.begin() + 1, nodes.end());
        }
        b.push_back(chain[k]->sp.batt);
    }
    const ChargePlan plan = find_charge_sequence(b, delta, inst.B);
    path.charging_times = plan.tau;
    return path;
}

std::vector<PricedPath> find_subpath_sequences(const std::vector<CompletedSubpath>& subpaths,
                                               const Instance& inst, const DualPrices& duals,
                                               const PricingConfig& cfg, PricingStats* stats) {
    LabelContext ctx(inst, duals, cfg);
    const int n = inst.n();

    std::vector<std::vector<int>> by_start(n);
    for (size_t i = 0; i < subpaths.size(); ++i)
        by_start[subpaths[i].sp.start()].push_back(static_cast<int>(i));

    std::vector<SequenceLabel> arena;
    std::vector<uint8_t> state;
    std::vector<std::vector<int>> buckets(static_cast<size_t>(inst.n_depots) * 2 * n);
    MinHeap heap;
    long fifo = 0;

    auto bucket_key = [&](const SequenceLabel& l) {
        return (static_cast<size_t>(l.start) * n + l.end) * 2 + (l.complete(inst) ? 1 : 0);
    };
    auto try_insert = [&](SequenceLabel&& lab) {
        auto& bucket = buckets[bucket_key(lab)];
        for (int idx : bucket)
            if (state[idx] != kDead && sequence_dominates(arena[idx], lab, ctx)) return;
        for (int idx : bucket)
            if (state[idx] == kQueued && sequence_dominates(lab, arena[idx], ctx)) state[idx] = kDead;
        bucket.erase(std::remove_if(bucket.begin(), bucket.end(),
                                    [&](int idx) { return state[idx] == kDead; }),
                     bucket.end());
        const int idx = static_cast<int>(arena.size());
        arena.push_back(std::move(lab));
        state.push_back(kQueued);
        bucket.push_back(idx);
        heap.emplace(arena[idx].time, fifo++, idx);
    };

    for (int d = 0; d < inst.n_depots; ++d)
        for (int si : by_start[d]) try_insert(seed_sequence_label(subpaths[si], si, ctx));

    std::vector<PricedPath> result;
    while (!heap.empty()) {
        const auto [key, seq, idx] = heap.top();
        heap.pop();
        if (state[idx] != kQueued) continue;
        state[idx] = kSettled;

        if (arena[idx].complete(inst)) {
            std::vector<const CompletedSubpath*> chain;
            for (int cur = idx; cur >= 0; cur = arena[cur].parent)
                chain.push_back(&subpaths[arena[cur].via]);
            std::reverse(chain.begin(), chain.end());
            PricedPath pp;
            pp.path = assemble_path(chain, inst);
            pp.rc = arena[idx].rcc;
            assert(std::abs(reduced_cost(pp.path, inst, duals, cfg.cuts) - pp.rc) < 1e-6);
            result.push_back(std::move(pp));
            continue;
        }
        for (int si : by_start[arena[idx].end]) {
            auto ext = extend_sequence_label(arena[idx], subpaths[si], si, ctx);
            if (!ext) continue;
            ext->parent = idx;
            try_insert(std::move(*ext));
        }
    }
    if (stats) stats->sequence_labels += static_cast<long>(arena.size());
    return result;
}

std::vector<PricedPath> price(const Instance& inst, const DualPrices& duals,
                              const PricingConfig& cfg, PricingStats* stats) {
    const auto subpaths = find_nondominated_subpaths(inst, duals, cfg, stats);
    auto paths = find_subpath_sequences(subpaths, inst, duals, cfg, stats);
    std::vector<PricedPath> out;
    for (auto& pp : paths)
        if (pp.rc < -cfg.neg_threshold) out.push_back(std::move(pp));
    std::sort(out.begin(), out.end(), [](const PricedPath& a, const PricedPath& b) {
        if (a.rc != b.rc) return a.rc < b.rc;
        return a.path.nodes < b.path.nodes;
    });
    if (static_cast<int>(out.size()) > cfg.max_columns) out.resize(cfg.max_columns);
    return out;
}

std::vector<PricedPath> price_pathwise_benchmark(const Instance& inst, const DualPrices& duals,
                                                 const PricingConfig& cfg, PricingStats* stats) {
    if (cfg.variant == Variant::Het)
        throw std::invalid_argument("path-based benchmark supports the Hom variant only");
    for (int r = inst.first_charger(); r < inst.n(); ++r)
        if (std::abs(inst.delta[r] - inst.delta[inst.first_charger()]) > 1e-12)
            throw std::invalid_argument("path-based benchmark requires uniform charging costs");

    LabelContext ctx(inst, duals, cfg);
    const int n = inst.n();

    std::vector<PathLabel> arena;
    std::vector<uint8_t> state;
    std::vector<std::vector<int>> buckets(static_cast<size_t>(inst.n_depots) * 2 * n);
    MinHeap heap;
    long fifo = 0;

    auto bucket_key = [&](const PathLabel& l) {
        return (static_cast<size_t>(l.start) * n + l.end) * 2 + (l.complete(inst) ? 1 : 0);
    };
    auto try_insert = [&](PathLabel&& lab) {
        auto& bucket = buckets[bucket_key(lab)];
        for (int idx : bucket)
            if (state[idx] != kDead && path_dominates(arena[idx], lab, ctx)) return;
        for (int idx : bucket)
            if (state[idx] == kQueued && path_dominates(lab, arena[idx], ctx)) state[idx] = kDead;
        bucket.erase(std::remove_if(bucket.begin(), bucket.end(),
                                    [&](int idx) { return state[idx] == kDead; }),
                     bucket.end());
        const int idx = static_cast<int>(arena.size());
        arena.push_back(std::move(lab));
        state.push_back(kQueued);
        bucket.push_back(idx);
        heap.emplace(arena[idx].time, fifo++, idx);
    };

    for (int d = 0; d < inst.n_depots; ++d) try_insert(seed_path_label(d, ctx));

    std::vector<PricedPath> complete;
    while (!heap.empty()) {
        const auto [key, seq, idx] = heap.top();
        heap.pop();
        if (state[idx] != kQueued) continue;
        state[idx] = kSettled;

        if (arena[idx].complete(inst)) {
            std::vector<int> nodes;
            for (int cur = idx; cur >= 0; cur = arena[cur].parent)
                nodes.push_back(arena[cur].parent >= 0 ? arena[cur].via : arena[cur].start);
            std::reverse(nodes.begin(), nodes.end());
            std::vector<const CompletedSubpath*> chain;
            std::vector<CompletedSubpath> storage;
            storage.reserve(8);
            for (auto& seg : split_into_subpaths(nodes, inst)) {
                CompletedSubpath cs;
                cs.sp = make_subpath(seg, inst);
                storage.push_back(std::move(cs));
            }
            PricedPath pp;
            for (const auto& cs : storage) chain.push_back(&cs);
            pp.path = assemble_path(chain, inst);
            pp.rc = arena[idx].rcc;
            assert(std::abs(reduced_cost(pp.path, inst, duals, cfg.cuts) - pp.rc) < 1e-6);
            complete.push_back(std::move(pp));
            continue;
        }
        for (int next = 0; next < n; ++next) {
            if (next == arena[idx].end) continue;
            auto ext = extend_path_label(arena[idx], next, ctx);
            if (!ext) continue;
            ext->parent = idx;
            ext->via = static_cast<int16_t>(next);
            try_insert(std::move(*ext));
        }
    }
    if (stats) stats->path_labels += static_cast<long>(arena.size());

    std::vector<PricedPath> out;
    for (auto& pp : complete)
        if (pp.rc < -cfg.neg_threshold) out.push_back(std::move(pp));
    std::sort(out.begin(), out.end(), [](const PricedPath& a, const PricedPath& b) {
        if (a.rc != b.rc) return a.rc < b.rc;
        return a.path.nodes < b.path.nodes;
    });
    if (static_cast<int>(out.size()) > cfg.max_columns) out.resize(cfg.max_columns);
    return out;
}

}  // namespace ersp
