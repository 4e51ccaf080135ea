#include <cmath>

#include "doctest.h"
#include "ersp/separation.hpp"
#include "test_util.hpp"

using namespace ersp;
using namespace ersp::test;

namespace {

Path checked_path(const Instance& inst, std::vector<int> nodes) {
    Path p;
    p.nodes = std::move(nodes);
    REQUIRE(propagate_time_charge(p.nodes, {}, inst).feasible);
    return p;
}

// Three clustered tasks between two depots. The three pair-columns are forced
// to one half each by the task equalities, a classic half-integral basis.
struct FractionalFixture {
    Instance inst;
    RmpModel model;

    FractionalFixture()
        : inst(make_inst()), model(inst) {
        std::vector<Path> pool;
        pool.push_back(checked_path(inst, {0, 2, 3, 1}));  // t0 t1
        pool.push_back(checked_path(inst, {1, 3, 4, 0}));  // t1 t2
        pool.push_back(checked_path(inst, {0, 2, 4, 1}));  // t0 t2
        pool.push_back(checked_path(inst, {0, 1}));
        pool.push_back(checked_path(inst, {1, 0}));
        model.add_columns(pool);
    }

    static Instance make_inst() {
        Instance inst = coord_instance(
            2, 3, 0, {{0, 0}, {10, 0}, {4.8, 3.0}, {5.2, 3.0}, {5.0, 3.3}}, 4.2, 60.0, 0.3);
        inst.v_start = {1, 1};
        return inst;
    }
};

}  // namespace

TEST_CASE("separation finds the half-integral triple and builds minimal memory") {
    FractionalFixture fx;
    const LpSolution lp = fx.model.solve_lp();
    REQUIRE(lp.status == SolveStatus::Optimal);
    REQUIRE(!lp.artificial_active);
    for (int j = 0; j < 3; ++j) CHECK(lp.z[j] == doctest::Approx(0.5));

    const auto cuts = separate_lmsri(fx.model, lp);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].violation == doctest::Approx(0.5));
    NodeSet want;
    want.set(2);
    want.set(3);
    want.set(4);
    CHECK(cuts[0].cut.S == want);
    // supporting paths visit their S members consecutively
    CHECK(cuts[0].cut.memory == want);

    SUBCASE("adding the cut raises the bound strictly") {
        const double before = lp.objective;
        fx.model.add_cut_row(cuts[0].cut);
        const LpSolution after = fx.model.solve_lp();
        REQUIRE(after.status == SolveStatus::Optimal);
        CHECK(after.objective >= before + 1e-7);
    }
    SUBCASE("integer combinations in the pool satisfy the cut") {
        fx.model.add_cut_row(cuts[0].cut);
        fx.model.add_columns({checked_path(fx.inst, {0, 2, 3, 4, 1})});
        const IntegerSolution ip = restore_integrality(fx.model);
        REQUIRE(ip.found);
        REQUIRE(!ip.artificial_active);
        double lhs = 0.0;
        for (size_t j = 0; j < fx.model.columns().size(); ++j)
            lhs += fx.model.columns()[j].alpha[0] * ip.z[j];
        CHECK(lhs <= 1.0 + 1e-9);
    }
    SUBCASE("existing S never reproposed") {
        fx.model.add_cut_row(cuts[0].cut);
        const LpSolution again = fx.model.solve_lp();
        REQUIRE(again.status == SolveStatus::Optimal);
        for (const auto& sc : separate_lmsri(fx.model, again)) CHECK(sc.cut.S != cuts[0].cut.S);
    }
}

TEST_CASE("no violation from disjoint-unit solutions") {
    Instance inst = coord_instance(1, 3, 0, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 100.0, 100.0, 0.1);
    inst.v_start = {3};
    RmpModel model(inst);
    std::vector<Path> pool;
    for (int t = 1; t <= 3; ++t) {
        Path p;
        p.nodes = {0, t, 0};
        pool.push_back(p);
    }
    model.add_columns(pool);
    const LpSolution lp = model.solve_lp();
    REQUIRE(lp.status == SolveStatus::Optimal);
    CHECK(separate_lmsri(model, lp).empty());
}

TEST_CASE("memory widens through stranger nodes only when the count would drop") {
    const Instance inst =
        coord_instance(1, 4, 0, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}, 100.0, 100.0, 0.1);
    NodeSet S;
    S.set(1);
    S.set(2);
    S.set(3);

    Path through;
    through.nodes = {0, 1, 2, 3, 0};  // S visits are consecutive
    CHECK(build_memory(S, {&through}, inst) == S);

    Path gap;
    gap.nodes = {0, 1, 0, 3, 0};  // depot sits between two S visits
    const NodeSet mem = build_memory(S, {&gap}, inst);
    CHECK(mem.test(0));
    Cut cut;
    cut.S = S;
    cut.memory = mem;
    CHECK(lmsri_coefficient(gap.nodes, cut) == 1);

    Path disjoint;
    disjoint.nodes = {0, 4, 0};  // avoids S entirely
    CHECK(build_memory(S, {&disjoint}, inst) == S);
}
