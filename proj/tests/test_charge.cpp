#include <cmath>
#include <numeric>

#include "doctest.h"
#include "ersp/charge.hpp"
#include "ersp/bits.hpp"

using namespace ersp;

namespace {

// dyadic rationals keep every +/-/min/max exact in doubles
double dyadic(SplitMix64& rng, double lo, double hi) {
    const double step = 1.0 / 64.0;
    const auto n = static_cast<uint64_t>((hi - lo) / step);
    return lo + step * static_cast<double>(rng.next_below(n + 1));
}

}  // namespace

TEST_CASE("charge sequence: worked examples") {
    SUBCASE("single station forced amount") {
        const auto plan = find_charge_sequence({60, 60}, {1.0}, 100);
        REQUIRE(plan.feasible);
        REQUIRE(plan.tau.size() == 1);
        CHECK(plan.tau[0] == doctest::Approx(20.0));
    }
    SUBCASE("cheap first station takes the load") {
        const auto plan = find_charge_sequence({60, 60, 30}, {1.0, 3.0}, 100);
        REQUIRE(plan.feasible);
        CHECK(plan.tau[0] == doctest::Approx(50.0));
        CHECK(plan.tau[1] == doctest::Approx(0.0));
        CHECK(plan.cost == doctest::Approx(50.0));
    }
    SUBCASE("cheap second station caps the first") {
        const auto plan = find_charge_sequence({60, 60, 30}, {3.0, 1.0}, 100);
        REQUIRE(plan.feasible);
        CHECK(plan.tau[0] == doctest::Approx(20.0));
        CHECK(plan.tau[1] == doctest::Approx(30.0));
        CHECK(plan.cost == doctest::Approx(90.0));
    }
    SUBCASE("no charging needed") {
        const auto plan = find_charge_sequence({30, 30, 30}, {1.0, 1.0}, 100);
        REQUIRE(plan.feasible);
        CHECK(plan.tau == std::vector<double>{0.0, 0.0});
    }
    SUBCASE("oversized requirement reported with its index") {
        const auto plan = find_charge_sequence({30, 130, 30}, {1.0, 1.0}, 100);
        CHECK(!plan.feasible);
        CHECK(plan.infeasible_index == 1);
    }
}

TEST_CASE("charge sequence matches the LP oracle") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 2000; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_below(7));
        const int D = 1 + static_cast<int>(rng.next_below(5));
        std::vector<double> levels(D);
        for (int d = 0; d < D; ++d) levels[d] = 0.25 + 0.5 * d + rng.next_double() * 0.25;
        const double B = 1.0;
        std::vector<double> b(m), delta(m - 1);
        for (double& v : b) v = rng.uniform(0.05, 0.95);
        for (double& v : delta) v = levels[rng.next_below(D)];

        const auto dp = find_charge_sequence(b, delta, B);
        const auto lp = charge_lp_oracle(b, delta, B);
        REQUIRE(dp.feasible == lp.feasible);
        if (!dp.feasible) continue;
        REQUIRE(dp.cost == doctest::Approx(lp.cost).epsilon(1e-9));
        // total-charge law
        const double total = std::accumulate(b.begin(), b.end(), 0.0);
        const double tau_sum = std::accumulate(dp.tau.begin(), dp.tau.end(), 0.0);
        REQUIRE(tau_sum == doctest::Approx(std::max(0.0, total - B)).epsilon(1e-12));
        // plan respects the cumulative window
        double pb = 0.0, pt = 0.0;
        for (int i = 0; i + 1 < m; ++i) {
            pb += b[i];
            pt += dp.tau[i];
            REQUIRE(pt <= pb + 1e-9);
            REQUIRE(pt >= pb + b[i + 1] - B - 1e-9);
            REQUIRE(dp.tau[i] >= -1e-12);
        }
    }
}

TEST_CASE("charging cost g: worked values and slope bound") {
    const std::vector<double> levels = {1.0, 4.0};
    const std::vector<double> Z = {0.0, 10.0};  // Z_0, Z_1
    CHECK(charging_cost_g(0.0, Z, levels, 2) == doctest::Approx(0.0));
    CHECK(charging_cost_g(15.0, Z, levels, 2) == doctest::Approx(1.0 * 10 + 4.0 * 5));
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const double tau = rng.uniform(0.0, 40.0);
        CHECK(charging_cost_g(tau, Z, levels, 2) <= 4.0 * tau + 1e-12);
    }
}

TEST_CASE("homogeneous extension closed form") {
    const double B = 1.0, T = 100.0;
    SUBCASE("full battery never charges") {
        HomLabel l{0.0, 0.0, B};
        const auto out = extend_hom(l, {0.5, 1.0, 0.8}, 2.0, B, T);
        REQUIRE(out);
        CHECK(out->rcc == doctest::Approx(0.5));
        CHECK(out->end_charge == doctest::Approx(0.2));
    }
    SUBCASE("deficit charged exactly") {
        HomLabel l{0.0, 0.0, 0.3};
        const auto out = extend_hom(l, {0.0, 1.0, 0.5}, 2.0, B, T);
        REQUIRE(out);
        CHECK(out->rcc == doctest::Approx(2.0 * 0.2));
        CHECK(out->end_time == doctest::Approx(1.2));
        CHECK(out->end_charge == doctest::Approx(0.0));
    }
    SUBCASE("oversized subpath rejected") {
        HomLabel l{0.0, 0.0, 1.0};
        CHECK(!extend_hom(l, {0.0, 1.0, 1.2}, 2.0, B, T));
    }
    SUBCASE("chain of extensions equals the whole-sequence plan") {
        SplitMix64 rng(3);
        for (int trial = 0; trial < 500; ++trial) {
            const int m = 2 + static_cast<int>(rng.next_below(6));
            std::vector<double> b(m);
            for (double& v : b) v = rng.uniform(0.1, 0.9);
            const double delta = rng.uniform(0.5, 2.0);
            HomLabel l{0.0, 0.0, B - b[0]};
            bool ok = b[0] <= B;
            double time0 = 1.0;
            l.end_time = time0;
            for (int i = 1; i < m && ok; ++i) {
                const auto out = extend_hom(l, {0.0, 1.0, b[i]}, delta, B, T);
                ok = out.has_value();
                if (out) l = *out;
            }
            REQUIRE(ok);
            const auto plan = find_charge_sequence(b, std::vector<double>(m - 1, delta), B);
            REQUIRE(plan.feasible);
            CHECK(l.rcc == doctest::Approx(plan.cost).epsilon(1e-9));
            CHECK(l.end_charge == doctest::Approx(plan.end_charge).epsilon(1e-9));
            CHECK(l.end_time ==
                  doctest::Approx(time0 + (m - 1) + plan.end_time_charging).epsilon(1e-9));
        }
    }
}

TEST_CASE("heterogeneous rebalance: uniform costs reduce to the closed form") {
    const double B = 1.0, T = 1000.0;
    const std::vector<double> levels = {1.5};
    SplitMix64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_below(5));
        std::vector<double> b(m);
        for (double& v : b) v = rng.uniform(0.1, 0.9);

        RebalanceState st = seed_rebalance({0.0, 1.0, b[0]}, 0.0, B);
        HomLabel hl{0.0, 1.0, B - b[0]};
        st.end_time = 1.0;
        for (int i = 1; i < m; ++i) {
            extend_het(st, {0.0, 1.0, b[i]}, 1, levels, B, T);
            const auto out = extend_hom(hl, {0.0, 1.0, b[i]}, levels[0], B, T);
            REQUIRE(out);
            hl = *out;
        }
        REQUIRE(st.feasible);
        CHECK(st.rcc == doctest::Approx(hl.rcc).epsilon(1e-9));
        CHECK(st.end_time == doctest::Approx(hl.end_time).epsilon(1e-9));
        CHECK(st.end_charge == doctest::Approx(hl.end_charge).epsilon(1e-9));
    }
}

TEST_CASE("heterogeneous rebalance: incremental equals from-scratch") {
    SplitMix64 rng(29);
    const double B = 1.0, T = 1e9;
    for (int trial = 0; trial < 1500; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_below(7));
        const int D = 1 + static_cast<int>(rng.next_below(5));
        std::vector<double> levels(D);
        for (int d = 0; d < D; ++d) levels[d] = 0.5 + d;
        std::vector<double> b(m);
        for (double& v : b) v = dyadic(rng, 1.0 / 64.0, 1.0);
        std::vector<int> f(m - 1);
        std::vector<double> delta(m - 1);
        for (int i = 0; i < m - 1; ++i) {
            f[i] = 1 + static_cast<int>(rng.next_below(D));
            delta[i] = levels[f[i] - 1];
        }

        RebalanceState inc = seed_rebalance({0.0, 1.0, b[0]}, 0.0, B);
        for (int i = 1; i < m; ++i) {
            extend_het(inc, {0.0, 1.0, b[i]}, f[i - 1], levels, B, T);
            REQUIRE(inc.feasible);

            const std::vector<double> b_pref(b.begin(), b.begin() + i + 1);
            const std::vector<double> d_pref(delta.begin(), delta.begin() + i);
            const RebalanceState scratch = rebalance_from_scratch(b_pref, d_pref, levels, B);

            // exact plan equality (dyadic arithmetic)
            REQUIRE(inc.tau.size() == scratch.tau.size());
            for (size_t k = 0; k < inc.tau.size(); ++k) REQUIRE(inc.tau[k] == scratch.tau[k]);
            REQUIRE(inc.ell == scratch.ell);
            for (int d = 1; d <= D; ++d) {
                REQUIRE(inc.omega[d] == scratch.omega[d]);
                REQUIRE(inc.Z[d] == doctest::Approx(scratch.Z[d]).epsilon(1e-12));
            }
            // cost: charging part of the incremental rcc
            double inc_charge_cost = 0.0;
            for (size_t k = 0; k < inc.tau.size(); ++k) inc_charge_cost += inc.delta[k] * inc.tau[k];
            const auto lp = charge_lp_oracle(b_pref, d_pref, B);
            REQUIRE(lp.feasible);
            REQUIRE(inc_charge_cost == doctest::Approx(lp.cost).epsilon(1e-9));
            REQUIRE(inc.rcc == doctest::Approx(inc_charge_cost).epsilon(1e-9));
        }
    }
}

TEST_CASE("slack monotonicity lowers the charging cost") {
    // Lemma claim: componentwise larger slacks never cost more
    SplitMix64 rng(37);
    for (int trial = 0; trial < 2000; ++trial) {
        const int D = 2 + static_cast<int>(rng.next_below(4));
        std::vector<double> levels(D);
        for (int d = 0; d < D; ++d) levels[d] = 0.5 + d;
        const int f = 1 + static_cast<int>(rng.next_below(D));
        std::vector<double> z1(D + 1, 0.0), z2(D + 1, 0.0);
        double acc1 = 0.0, acc2 = 0.0;
        for (int d = 1; d <= D; ++d) {
            acc2 += rng.uniform(0.0, 0.3);
            acc1 = acc2 + rng.uniform(0.0, 0.3);
            z2[d] = acc2;
            z1[d] = std::max(z1[d - 1], acc1);
            z2[d] = std::max(z2[d - 1], z2[d]);
        }
        const double tau = rng.uniform(0.0, 2.0);
        CHECK(charging_cost_g(tau, z1, levels, f) <= charging_cost_g(tau, z2, levels, f) + 1e-9);
    }
}
