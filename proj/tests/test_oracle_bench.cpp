#include <algorithm>
#include <set>

#include "doctest.h"
#include "ersp/benchmarks.hpp"
#include "ersp/oracle.hpp"
#include "test_util.hpp"

using namespace ersp;
using namespace ersp::test;

TEST_CASE("enumeration matches the hand count on a line instance") {
    // d0 --1-- t --2-- r --1-- d1 on a line, battery effectively unbounded,
    // horizon 4.5 time units
    Instance inst = coord_instance(2, 1, 1, {{0, 0}, {4, 0}, {1, 0}, {3, 0}}, 10.0, 4.5, 0.01);
    const DualPrices d = zero_duals(inst);
    PricingConfig cfg;
    const auto seqs = enumerate_sequences(inst, d, cfg);

    std::set<std::vector<int>> got;
    for (const auto& es : seqs) got.insert(es.path.nodes);
    const std::set<std::vector<int>> want = {
        {0, 1},          {1, 0},          {0, 2, 0},    {0, 2, 1},    {1, 2, 0},
        {0, 3, 1},       {1, 3, 0},       {1, 3, 1},    {0, 2, 3, 1}, {1, 3, 2, 0},
    };
    CHECK(got == want);
    // no charging pays when the battery never binds
    for (const auto& es : seqs)
        for (double tau : es.path.charging_times) CHECK(tau == doctest::Approx(0.0));
}

TEST_CASE("chargerless instances enumerate single-subpath sequences") {
    Instance inst = coord_instance(2, 2, 0, {{0, 0}, {3, 0}, {1, 0}, {2, 0}}, 10.0, 8.0, 0.1);
    const DualPrices d = zero_duals(inst);
    PricingConfig cfg;
    for (const auto& es : enumerate_sequences(inst, d, cfg)) {
        CHECK(split_into_subpaths(es.path.nodes, inst).size() == 1);
        CHECK(es.path.charging_times.empty());
    }
}

TEST_CASE("enumeration guards its limits") {
    GenParams p;
    p.n_tasks = 5;
    p.area_width = 2;
    p.area_height = 2;
    p.T_over_B = 4.0;
    p.mu_rate = 0.5;
    p.seed = 5;
    const Instance inst = generate_instance(p);
    const DualPrices d = zero_duals(inst);
    PricingConfig cfg;
    OracleLimits limits;
    limits.max_sequences = 3;
    CHECK_THROWS_WITH_AS(enumerate_sequences(inst, d, cfg, limits),
                         doctest::Contains("enumeration limit"), std::runtime_error);
}

TEST_CASE("route-then-charge equals the integrated solve when charging is moot") {
    // battery never binds: stage 1 and the integrated problem coincide
    GenParams p;
    p.n_tasks = 4;
    p.area_width = 2;
    p.area_height = 2;
    p.T_over_B = 4.0;
    p.mu_rate = 0.05;
    p.fleet = 4;
    p.seed = 21;
    const Instance inst = generate_instance(p);
    SolverOptions opt;
    opt.policy = ElemPolicy::Adaptive;
    opt.cuts = false;
    opt.time_limit_s = 120.0;
    const RouteThenChargeResult rtc = route_then_charge(inst, opt);
    REQUIRE(rtc.feasible);
    REQUIRE(rtc.integrated_found);
    CHECK(rtc.cost == doctest::Approx(rtc.integrated_cost).epsilon(1e-6));
    for (const auto& r : rtc.routes) CHECK(r.charging_times.empty());
}

TEST_CASE("adaptive run with an elementary optimum performs no expansions") {
    // two far-apart tasks: singleton routes are optimal and elementary
    Instance inst = coord_instance(2, 2, 0, {{0, 0}, {10, 0}, {1, 0}, {9, 0}}, 10.0, 30.0, 0.1);
    inst.v_start = {1, 1};
    SolverOptions opt;
    opt.policy = ElemPolicy::Adaptive;
    opt.cuts = false;
    const AdaptiveResult res = adaptive_solve(inst, opt);
    REQUIRE(res.status == TermStatus::Converged);
    CHECK(res.ng_expansions == 0);
    CHECK(res.gap_defined);
    CHECK(res.gap == doctest::Approx(0.0).epsilon(1e-9));
}
