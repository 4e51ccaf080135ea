#include "ersp/charge.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "ersp/simplex.hpp"

namespace ersp {

namespace {
inline double pos(double x) { return x > 0.0 ? x : 0.0; }
}  // namespace

ChargePlan find_charge_sequence(const std::vector<double>& b, const std::vector<double>& delta,
                                double B) {
    const int m = static_cast<int>(b.size());
    assert(static_cast<int>(delta.size()) == std::max(0, m - 1));
    ChargePlan plan;
    plan.tau.assign(std::max(0, m - 1), 0.0);

    for (int j = 0; j < m; ++j) {
        if (b[j] > B + 1e-12) {
            plan.feasible = false;
            plan.infeasible_index = j;
            return plan;
        }
    }
    if (m <= 1) {
        plan.end_charge = m == 1 ? B - b[0] : B;
        return plan;
    }

    std::vector<double> prefix(m + 1, 0.0);
    for (int j = 0; j < m; ++j) prefix[j + 1] = prefix[j] + b[j];

    // frames are inclusive requirement ranges [lo, hi]; station i (paper
    // 1-based within the frame) is global tau/delta index lo + i - 1
    std::vector<std::pair<int, int>> stack{{0, m - 1}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const int mm = hi - lo + 1;
        if (mm <= 1) continue;
        const double total = prefix[hi + 1] - prefix[lo];
        if (total <= B) continue;  // all-zero segment

        int ell = 0;  // paper index in 1..mm-1, ties to the largest index
        for (int i = 1; i <= mm - 1; ++i)
            if (ell == 0 || delta[lo + i - 1] <= delta[lo + ell - 1]) ell = i;

        const double pre = prefix[lo + ell] - prefix[lo];
        plan.tau[lo + ell - 1] = std::min(pre, pos(total - B)) - pos(pre - B);
        stack.emplace_back(lo, lo + ell - 1);
        stack.emplace_back(lo + ell, hi);
    }

    for (int i = 0; i < m - 1; ++i) {
        plan.cost += delta[i] * plan.tau[i];
        plan.end_time_charging += plan.tau[i];
    }
    plan.end_charge = pos(B - prefix[m]);
    return plan;
}

ChargePlan charge_lp_oracle(const std::vector<double>& b, const std::vector<double>& delta, double B) {
    const int m = static_cast<int>(b.size());
    ChargePlan plan;
    plan.tau.assign(std::max(0, m - 1), 0.0);
    // the window rows below only bound b_2..b_m; the first requirement must
    // fit the battery outright
    for (int j = 0; j < m; ++j) {
        if (b[j] > B + 1e-12) {
            plan.feasible = false;
            plan.infeasible_index = j;
            return plan;
        }
    }
    if (m <= 1) {
        plan.end_charge = m == 1 ? B - b[0] : B;
        return plan;
    }

    DenseLp lp;
    std::vector<double> prefix(m + 1, 0.0);
    for (int j = 0; j < m; ++j) prefix[j + 1] = prefix[j] + b[j];
    for (int i = 1; i <= m - 1; ++i) {
        lp.add_row(RowSense::LE, prefix[i]);
        lp.add_row(RowSense::GE, prefix[i + 1] - B);
    }
    for (int j = 0; j < m - 1; ++j) {
        std::vector<std::pair<int, double>> entries;
        for (int i = j + 1; i <= m - 1; ++i) {
            entries.emplace_back(2 * (i - 1), 1.0);
            entries.emplace_back(2 * (i - 1) + 1, 1.0);
        }
        lp.add_column(delta[j], entries);
    }

    const LpResult res = solve_dense_lp(lp);
    if (res.status != LpStatus::Optimal) {
        plan.feasible = false;
        for (int j = 0; j < m; ++j)
            if (b[j] > B + 1e-12) {
                plan.infeasible_index = j;
                break;
            }
        return plan;
    }
    plan.tau = res.x;
    plan.cost = res.objective;
    plan.end_time_charging = std::accumulate(plan.tau.begin(), plan.tau.end(), 0.0);
    plan.end_charge = B - prefix[m] + plan.end_time_charging;
    return plan;
}

double charging_cost_g(double tau, const std::vector<double>& Z, const std::vector<double>& levels,
                       int f) {
    double g = 0.0;
    double z_prev = 0.0;
    for (int d = 1; d <= f - 1; ++d) {
        g += levels[d - 1] * std::min(Z[d] - z_prev, pos(tau - z_prev));
        z_prev = Z[d];
    }
    g += levels[f - 1] * pos(tau - z_prev);
    return g;
}

std::optional<HomLabel> extend_hom(const HomLabel& label, const SubpathStats& s, double delta,
                                   double B, double T) {
    if (s.batt > B + 1e-12) return std::nullopt;
    const double tau = pos(s.batt - label.end_charge);
    HomLabel out;
    out.rcc = label.rcc + delta * tau + s.rcc;
    out.end_time = label.end_time + tau + s.time;
    out.end_charge = label.end_charge + tau - s.batt;
    if (out.end_time > T + 1e-9) return std::nullopt;
    return out;
}

ZUpdate update_slacks(const std::vector<double>& Z, double tau_extra, double cap_term, int f,
                      const std::vector<double>& levels) {
    ZUpdate out;
    out.g = charging_cost_g(tau_extra, Z, levels, f);
    const int D = static_cast<int>(Z.size()) - 1;
    int kappa = 0;
    for (int i = 0; i <= f - 1; ++i)
        if (tau_extra >= Z[i]) kappa = i;
    out.Z.assign(D + 1, 0.0);
    for (int d = 1; d <= D; ++d) {
        if (d <= kappa)
            out.Z[d] = 0.0;
        else if (d <= f - 1)
            out.Z[d] = Z[d] - tau_extra;
        else
            out.Z[d] = cap_term;
    }
    return out;
}

RebalanceState seed_rebalance(const SubpathStats& first, double start_rcc, double B) {
    RebalanceState st;
    st.b = {first.batt};
    st.rcc = start_rcc + first.rcc;
    st.end_time = first.time;
    st.end_charge = B - first.batt;
    st.feasible = first.batt <= B + 1e-12;
    return st;
}

void extend_het(RebalanceState& st, const SubpathStats& s, int f, const std::vector<double>& levels,
                double B, double T) {
    const int D = static_cast<int>(levels.size());
    if (st.omega.empty()) st.omega.assign(D + 1, 0);
    if (st.Z.empty()) st.Z.assign(D + 1, 0.0);
    if (s.batt > B + 1e-12) {
        st.feasible = false;
        return;
    }

    const int m = static_cast<int>(st.b.size());  // station joins after subpath m (paper index m)
    const double tau = pos(s.batt - st.end_charge);
    const double sum_b_prev = std::accumulate(st.b.begin(), st.b.end(), 0.0);
    const double cap_term = std::min(sum_b_prev, B - s.batt);

    // tau adjustments at the per-level rebalancing stations
    double z_prev = 0.0;
    for (int d = 1; d <= f - 1; ++d) {
        const int j = st.omega[d];
        const double inc = std::min(st.Z[d] - z_prev, pos(tau - z_prev));
        if (j > 0 && inc > 0.0) st.tau[j - 1] += inc;
        z_prev = st.Z[d];
    }
    const double tau_new_station = pos(tau - z_prev);

    const ZUpdate zu = update_slacks(st.Z, tau, cap_term, f, levels);

    // cheapest index, ties to the largest
    if (st.ell == 0 || levels[f - 1] <= st.delta[st.ell - 1]) st.ell = m;
    for (int d = 1; d <= D; ++d) {
        if (d == f)
            st.omega[d] = m;
        else if (d > f)
            st.omega[d] = 0;
    }
    st.Z = zu.Z;
    st.delta.push_back(levels[f - 1]);
    st.tau.push_back(tau_new_station);
    st.b.push_back(s.batt);
    st.rcc += s.rcc + zu.g;
    st.end_time += tau + s.time;
    st.end_charge = st.end_charge + tau - s.batt;
    if (st.end_time > T + 1e-9) st.feasible = false;
}

RebalanceState rebalance_from_scratch(const std::vector<double>& b, const std::vector<double>& delta,
                                      const std::vector<double>& levels, double B) {
    const int m = static_cast<int>(b.size());
    const int D = static_cast<int>(levels.size());
    RebalanceState st;
    st.b = b;
    st.delta = delta;
    const ChargePlan plan = find_charge_sequence(b, delta, B);
    st.tau = plan.tau;
    st.feasible = plan.feasible;
    st.end_charge = plan.end_charge;
    st.rcc = plan.cost;  // charging component only
    st.omega.assign(D + 1, 0);
    st.Z.assign(D + 1, 0.0);

    if (m >= 2) {
        for (int i = 1; i <= m - 1; ++i)
            if (st.ell == 0 || delta[i - 1] <= delta[st.ell - 1]) st.ell = i;
        int floor_index = st.ell;
        for (int d = 1; d <= D; ++d) {
            int w = 0;
            for (int i = floor_index; i <= m - 1; ++i)
                if (std::abs(delta[i - 1] - levels[d - 1]) < 1e-12) w = i;
            st.omega[d] = w;
            if (w > 0) floor_index = std::max(floor_index, w);
        }
        int max_omega = 0;
        for (int d = 1; d <= D; ++d) {
            max_omega = std::max(max_omega, st.omega[d]);
            double z = 0.0;
            for (int j = 1; j <= max_omega; ++j) z += b[j - 1] - st.tau[j - 1];
            st.Z[d] = z;
        }
    }
    return st;
}

}  // namespace ersp
