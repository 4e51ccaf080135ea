#include "ersp/master.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ersp {

namespace {
constexpr double kIntTol = 1e-6;
constexpr double kActiveTol = 1e-7;
}  // namespace

RmpModel::RmpModel(const Instance& inst) : inst_(&inst) {
    penalty_ = 10.0 * inst.total_arc_cost();
}

Column RmpModel::make_column(const Path& path) const {
    Column col;
    col.path = path;
    col.cost = path_cost(path, *inst_);
    col.start_depot = path.nodes.front();
    col.end_depot = path.nodes.back();
    col.gamma = serve_counts(path.nodes, *inst_);
    for (const Cut& cut : cuts_) col.alpha.push_back(lmsri_coefficient(path.nodes, cut));
    return col;
}

bool RmpModel::duplicate(const Column& col) const {
    for (const Column& c : columns_)
        if (c.path == col.path) return true;
    return false;
}

int RmpModel::add_columns(const std::vector<Path>& paths) {
    int added = 0;
    for (const Path& p : paths) {
        Column col = make_column(p);
        if (duplicate(col)) continue;
        columns_.push_back(std::move(col));
        ++added;
    }
    return added;
}

void RmpModel::add_cut_row(const Cut& cut) {
    cuts_.push_back(cut);
    for (Column& col : columns_) col.alpha.push_back(lmsri_coefficient(col.path.nodes, cut));
}

void RmpModel::filter_columns(const std::vector<char>& keep) {
    std::vector<Column> kept;
    for (size_t i = 0; i < columns_.size(); ++i)
        if (keep[i]) kept.push_back(std::move(columns_[i]));
    columns_ = std::move(kept);
}

DenseLp RmpModel::build_lp() const {
    const Instance& inst = *inst_;
    DenseLp lp;
    for (int j = 0; j < inst.n_depots; ++j) lp.add_row(RowSense::EQ, inst.v_start[j]);
    for (int j = 0; j < inst.n_depots; ++j) lp.add_row(RowSense::GE, inst.v_end[j]);
    for (int i = 0; i < inst.n_tasks; ++i) lp.add_row(RowSense::EQ, 1.0);
    for (size_t q = 0; q < cuts_.size(); ++q) lp.add_row(RowSense::LE, 1.0);

    const int task_base = 2 * inst.n_depots;
    const int cut_base = task_base + inst.n_tasks;
    for (const Column& col : columns_) {
        std::vector<std::pair<int, double>> entries;
        entries.emplace_back(col.start_depot, 1.0);
        entries.emplace_back(inst.n_depots + col.end_depot, 1.0);
        for (int i = 0; i < inst.n_tasks; ++i)
            if (col.gamma[i] > 0) entries.emplace_back(task_base + i, col.gamma[i]);
        for (size_t q = 0; q < cuts_.size(); ++q)
            if (col.alpha[q] != 0) entries.emplace_back(cut_base + static_cast<int>(q), col.alpha[q]);
        lp.add_column(col.cost, entries);
    }
    // artificial penalty columns for start, end and task rows
    for (int j = 0; j < inst.n_depots; ++j) lp.add_column(penalty_, {{j, 1.0}});
    for (int j = 0; j < inst.n_depots; ++j) lp.add_column(penalty_, {{inst.n_depots + j, 1.0}});
    for (int i = 0; i < inst.n_tasks; ++i) lp.add_column(penalty_, {{task_base + i, 1.0}});
    return lp;
}

LpSolution RmpModel::solve_lp(long max_iterations) const {
    const Instance& inst = *inst_;
    const DenseLp lp = build_lp();
    const LpResult res = solve_dense_lp(lp, max_iterations);

    LpSolution sol;
    if (res.status == LpStatus::IterationLimit) {
        sol.status = SolveStatus::IterationLimit;
        return sol;
    }
    if (res.status != LpStatus::Optimal) {
        sol.status = SolveStatus::Infeasible;
        return sol;
    }
    sol.status = SolveStatus::Optimal;
    sol.objective = res.objective;
    sol.z.assign(res.x.begin(), res.x.begin() + columns_.size());
    for (size_t j = columns_.size(); j < res.x.size(); ++j)
        if (res.x[j] > kActiveTol) sol.artificial_active = true;

    const int task_base = 2 * inst.n_depots;
    const int cut_base = task_base + inst.n_tasks;
    sol.duals.kappa.assign(res.duals.begin(), res.duals.begin() + inst.n_depots);
    sol.duals.mu.assign(res.duals.begin() + inst.n_depots, res.duals.begin() + task_base);
    sol.duals.nu.assign(res.duals.begin() + task_base, res.duals.begin() + cut_base);
    sol.duals.lambda.assign(res.duals.begin() + cut_base, res.duals.end());
    return sol;
}

std::string RmpModel::dump() const {
    std::ostringstream os;
    os << "rows: start=" << inst_->n_depots << " end=" << inst_->n_depots << " task=" << inst_->n_tasks
       << " cuts=" << cuts_.size() << "\n";
    for (size_t j = 0; j < columns_.size(); ++j) {
        const Column& col = columns_[j];
        os << "col " << j << " cost=" << col.cost << " nodes=";
        for (int v : col.path.nodes) os << inst_->ids[v] << ' ';
        os << "\n";
    }
    return os.str();
}

namespace {

bool integral(const std::vector<double>& z, int* frac_index) {
    int best = -1;
    double best_dist = kIntTol;
    for (size_t j = 0; j < z.size(); ++j) {
        const double dist = std::abs(z[j] - std::round(z[j]));
        if (dist > best_dist) {
            // most fractional: furthest from the nearest integer
            best_dist = dist;
            best = static_cast<int>(j);
        }
    }
    if (frac_index) *frac_index = best;
    return best < 0;
}

struct Bound {
    int col;
    RowSense sense;
    double value;
};

}  // namespace

struct PoolBnb {
    static IntegerSolution run(const RmpModel& model, long node_limit) {
        IntegerSolution best;
        const size_t n_cols = model.columns().size();

        if (node_limit <= 0) {
            // rounding heuristic only
            const LpSolution lp = model.solve_lp();
            if (lp.status != SolveStatus::Optimal) return best;
            int frac = -1;
            if (integral(lp.z, &frac)) {
                best.found = true;
                best.proven_optimal = true;
                best.artificial_active = lp.artificial_active;
                best.objective = lp.objective;
                best.z = lp.z;
            }
            return best;
        }

        std::vector<std::vector<Bound>> stack{{}};
        long nodes = 0;
        bool exhausted = true;
        while (!stack.empty()) {
            if (nodes >= node_limit) {
                exhausted = false;
                break;
            }
            ++nodes;
            const std::vector<Bound> bounds = std::move(stack.back());
            stack.pop_back();

            DenseLp lp = model.build_lp();
            for (const Bound& b : bounds) {
                const int row = lp.add_row(b.sense, b.value);
                lp.cols[b.col][row] = 1.0;
            }
            const LpResult res = solve_dense_lp(lp);
            if (res.status != LpStatus::Optimal) continue;
            if (best.found && res.objective >= best.objective - 1e-9) continue;

            std::vector<double> z(res.x.begin(), res.x.begin() + n_cols);
            int frac = -1;
            if (integral(z, &frac)) {
                best.found = true;
                best.objective = res.objective;
                best.z = z;
                for (double& v : best.z) v = std::round(v);
                best.artificial_active = false;
                for (size_t j = n_cols; j < res.x.size(); ++j)
                    if (res.x[j] > kActiveTol) best.artificial_active = true;
                continue;
            }
            const double v = z[frac];
            std::vector<Bound> down = bounds, up = bounds;
            down.push_back({frac, RowSense::LE, std::floor(v)});
            up.push_back({frac, RowSense::GE, std::ceil(v)});
            if (v - std::floor(v) >= 0.5) {
                stack.push_back(std::move(down));
                stack.push_back(std::move(up));  // explored first
            } else {
                stack.push_back(std::move(up));
                stack.push_back(std::move(down));
            }
        }
        best.nodes_explored = nodes;
        best.proven_optimal = best.found && exhausted;
        return best;
    }
};

IntegerSolution restore_integrality(const RmpModel& model, long node_limit) {
    return PoolBnb::run(model, node_limit);
}

}  // namespace ersp
