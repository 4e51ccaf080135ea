#include "ersp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ersp {

namespace {
constexpr double kPivotEps = 1e-9;
constexpr double kRcEps = 1e-9;
constexpr int kRefactorEvery = 128;
}  // namespace

int DenseLp::add_row(RowSense s, double b) {
    sense.push_back(s);
    rhs.push_back(b);
    for (auto& col : cols) col.push_back(0.0);
    return n_rows() - 1;
}

int DenseLp::add_column(double cost, const std::vector<std::pair<int, double>>& entries) {
    obj.push_back(cost);
    cols.emplace_back(n_rows(), 0.0);
    for (const auto& [row, v] : entries) cols.back()[row] = v;
    return n_cols() - 1;
}

namespace {

// Internal standard-form solver state. Variables: structural columns first,
// then slacks/surpluses, then artificials.
struct Tableau {
    int m = 0;
    int n_struct = 0;
    int n_total = 0;
    int art_begin = 0;
    std::vector<double> cost;              // phase-2 costs per variable
    std::vector<std::vector<double>> acol;  // column-major constraint matrix
    std::vector<double> rhs;               // >= 0 after normalization
    std::vector<int> flip;                 // +-1 per original row
    std::vector<int> basis;                // variable index per row
    std::vector<std::vector<double>> binv;  // m x m
    std::vector<double> xb;                // basic values

    void refactorize() {
        // invert the basis matrix by Gauss-Jordan with partial pivoting
        std::vector<std::vector<double>> a(m, std::vector<double>(2 * m, 0.0));
        for (int i = 0; i < m; ++i) {
            for (int r = 0; r < m; ++r) a[r][i] = acol[basis[i]][r];
            a[i][m + i] = 1.0;
        }
        for (int col = 0; col < m; ++col) {
            int piv = col;
            for (int r = col + 1; r < m; ++r)
                if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
            if (std::abs(a[piv][col]) < 1e-12) throw std::runtime_error("singular basis in refactorization");
            std::swap(a[col], a[piv]);
            const double inv = 1.0 / a[col][col];
            for (int k = col; k < 2 * m; ++k) a[col][k] *= inv;
            for (int r = 0; r < m; ++r) {
                if (r == col) continue;
                const double f = a[r][col];
                if (f == 0.0) continue;
                for (int k = col; k < 2 * m; ++k) a[r][k] -= f * a[col][k];
            }
        }
        for (int r = 0; r < m; ++r)
            for (int k = 0; k < m; ++k) binv[r][k] = a[r][m + k];
        recompute_xb();
    }

    void recompute_xb() {
        for (int r = 0; r < m; ++r) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += binv[r][k] * rhs[k];
            xb[r] = s;
        }
    }

    std::vector<double> btran(const std::vector<double>& c_b) const {
        std::vector<double> y(m, 0.0);
        for (int k = 0; k < m; ++k) {
            if (c_b[k] == 0.0) continue;
            for (int r = 0; r < m; ++r) y[r] += c_b[k] * binv[k][r];
        }
        return y;
    }

    std::vector<double> ftran(int var) const {
        std::vector<double> d(m, 0.0);
        const auto& a = acol[var];
        for (int r = 0; r < m; ++r) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += binv[r][k] * a[k];
            d[r] = s;
        }
        return d;
    }
};

// One simplex phase. `phase_cost` holds per-variable costs, `can_enter`
// filters candidate entering variables. Returns false on iteration limit.
bool run_phase(Tableau& tb, const std::vector<double>& phase_cost, const std::vector<char>& can_enter,
               long& iterations_left, bool& unbounded) {
    unbounded = false;
    int since_refactor = 0;
    long degenerate_streak = 0;
    while (iterations_left-- > 0) {
        std::vector<double> c_b(tb.m);
        for (int r = 0; r < tb.m; ++r) c_b[r] = phase_cost[tb.basis[r]];
        const std::vector<double> y = tb.btran(c_b);

        // pricing: Dantzig by default, Bland once degeneracy persists
        const bool bland = degenerate_streak > 2L * (tb.m + tb.n_total);
        int entering = -1;
        double best = -kRcEps;
        for (int j = 0; j < tb.n_total; ++j) {
            if (!can_enter[j]) continue;
            double rc = phase_cost[j];
            const auto& a = tb.acol[j];
            for (int r = 0; r < tb.m; ++r) rc -= y[r] * a[r];
            if (rc < -kRcEps) {
                if (bland) {
                    entering = j;
                    break;
                }
                if (rc < best) {
                    best = rc;
                    entering = j;
                }
            }
        }
        if (entering < 0) return true;  // phase optimal

        const std::vector<double> d = tb.ftran(entering);
        int leave_row = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int r = 0; r < tb.m; ++r) {
            if (d[r] > kPivotEps) {
                const double ratio = tb.xb[r] / d[r];
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 &&
                     (leave_row < 0 || tb.basis[r] < tb.basis[leave_row]))) {
                    best_ratio = ratio;
                    leave_row = r;
                }
            }
        }
        if (leave_row < 0) {
            unbounded = true;
            return true;
        }
        if (best_ratio < 1e-12)
            ++degenerate_streak;
        else
            degenerate_streak = 0;

        // pivot: update binv and xb
        const double piv = d[leave_row];
        for (int k = 0; k < tb.m; ++k) tb.binv[leave_row][k] /= piv;
        tb.xb[leave_row] = best_ratio;
        for (int r = 0; r < tb.m; ++r) {
            if (r == leave_row) continue;
            const double f = d[r];
            if (std::abs(f) < 1e-15) continue;
            for (int k = 0; k < tb.m; ++k) tb.binv[r][k] -= f * tb.binv[leave_row][k];
            tb.xb[r] -= f * best_ratio;
            if (tb.xb[r] < 0 && tb.xb[r] > -1e-11) tb.xb[r] = 0.0;
        }
        tb.basis[leave_row] = entering;
        if (++since_refactor >= kRefactorEvery) {
            tb.refactorize();
            since_refactor = 0;
        }
    }
    return false;
}

}  // namespace

LpResult solve_dense_lp(const DenseLp& lp, long max_iterations) {
    const int m = lp.n_rows();
    const int ns = lp.n_cols();

    Tableau tb;
    tb.m = m;
    tb.n_struct = ns;
    tb.flip.assign(m, 1);
    tb.rhs.resize(m);
    std::vector<RowSense> sense = lp.sense;
    for (int r = 0; r < m; ++r) {
        tb.rhs[r] = lp.rhs[r];
        if (tb.rhs[r] < 0) {
            tb.rhs[r] = -tb.rhs[r];
            tb.flip[r] = -1;
            if (sense[r] == RowSense::LE)
                sense[r] = RowSense::GE;
            else if (sense[r] == RowSense::GE)
                sense[r] = RowSense::LE;
        }
    }

    // structural columns
    for (int j = 0; j < ns; ++j) {
        tb.acol.emplace_back(m, 0.0);
        for (int r = 0; r < m; ++r) tb.acol.back()[r] = tb.flip[r] * lp.cols[j][r];
        tb.cost.push_back(lp.obj[j]);
    }
    // slacks / surpluses
    std::vector<int> slack_of(m, -1);
    for (int r = 0; r < m; ++r) {
        if (sense[r] == RowSense::EQ) continue;
        tb.acol.emplace_back(m, 0.0);
        tb.acol.back()[r] = sense[r] == RowSense::LE ? 1.0 : -1.0;
        tb.cost.push_back(0.0);
        slack_of[r] = static_cast<int>(tb.acol.size()) - 1;
    }
    tb.art_begin = static_cast<int>(tb.acol.size());
    // artificials where the slack cannot start basic
    std::vector<int> art_of(m, -1);
    for (int r = 0; r < m; ++r) {
        if (sense[r] == RowSense::LE) continue;
        tb.acol.emplace_back(m, 0.0);
        tb.acol.back()[r] = 1.0;
        tb.cost.push_back(0.0);
        art_of[r] = static_cast<int>(tb.acol.size()) - 1;
    }
    tb.n_total = static_cast<int>(tb.acol.size());

    tb.basis.resize(m);
    for (int r = 0; r < m; ++r) tb.basis[r] = art_of[r] >= 0 ? art_of[r] : slack_of[r];
    tb.binv.assign(m, std::vector<double>(m, 0.0));
    for (int r = 0; r < m; ++r) tb.binv[r][r] = 1.0;
    tb.xb = tb.rhs;

    LpResult res;
    long iters = max_iterations;
    bool unbounded = false;

    const bool need_phase1 = tb.art_begin < tb.n_total;
    if (need_phase1) {
        std::vector<double> c1(tb.n_total, 0.0);
        for (int j = tb.art_begin; j < tb.n_total; ++j) c1[j] = 1.0;
        std::vector<char> can1(tb.n_total, 1);
        if (!run_phase(tb, c1, can1, iters, unbounded)) {
            res.status = LpStatus::IterationLimit;
            return res;
        }
        double infeas = 0.0;
        for (int r = 0; r < m; ++r)
            if (tb.basis[r] >= tb.art_begin) infeas += tb.xb[r];
        if (infeas > 1e-7) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        // drive artificials out of the basis when possible
        for (int r = 0; r < m; ++r) {
            if (tb.basis[r] < tb.art_begin) continue;
            int replacement = -1;
            for (int j = 0; j < tb.art_begin && replacement < 0; ++j) {
                bool in_basis = false;
                for (int rr = 0; rr < m; ++rr) in_basis |= tb.basis[rr] == j;
                if (in_basis) continue;
                const std::vector<double> d = tb.ftran(j);
                if (std::abs(d[r]) > 1e-7) replacement = j;
            }
            if (replacement >= 0) {
                const std::vector<double> d = tb.ftran(replacement);
                const double piv = d[r];
                for (int k = 0; k < m; ++k) tb.binv[r][k] /= piv;
                for (int rr = 0; rr < m; ++rr) {
                    if (rr == r) continue;
                    const double f = d[rr];
                    if (std::abs(f) < 1e-15) continue;
                    for (int k = 0; k < m; ++k) tb.binv[rr][k] -= f * tb.binv[r][k];
                }
                tb.basis[r] = replacement;
                tb.recompute_xb();
            }
        }
    }

    std::vector<char> can2(tb.n_total, 1);
    for (int j = tb.art_begin; j < tb.n_total; ++j) can2[j] = 0;
    if (!run_phase(tb, tb.cost, can2, iters, unbounded)) {
        res.status = LpStatus::IterationLimit;
        return res;
    }
    if (unbounded) {
        res.status = LpStatus::Unbounded;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.x.assign(ns, 0.0);
    for (int r = 0; r < m; ++r)
        if (tb.basis[r] < ns) res.x[tb.basis[r]] = tb.xb[r];
    res.objective = 0.0;
    for (int j = 0; j < ns; ++j) res.objective += lp.obj[j] * res.x[j];

    std::vector<double> c_b(m);
    for (int r = 0; r < m; ++r) c_b[r] = tb.cost[tb.basis[r]];
    const std::vector<double> y = tb.btran(c_b);
    res.duals.resize(m);
    for (int r = 0; r < m; ++r) res.duals[r] = y[r] * tb.flip[r];
    return res;
}

}  // namespace ersp
