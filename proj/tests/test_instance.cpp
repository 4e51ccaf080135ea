#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "ersp/instance.hpp"

using namespace ersp;

TEST_CASE("generator rejects bad parameters") {
    GenParams p;
    p.n_tasks = 0;
    CHECK_THROWS_WITH_AS(generate_instance(p), "n_tasks >= 1", std::invalid_argument);

    p.n_tasks = 3;
    p.area_width = 0;
    CHECK_THROWS_AS(generate_instance(p), std::invalid_argument);

    p.area_width = 2;
    p.area_height = 2;
    p.n_charge_levels = 2;  // only one interior lattice point
    CHECK_THROWS_AS(generate_instance(p), std::invalid_argument);
}

TEST_CASE("generator layout and homogeneous levels") {
    GenParams p;
    p.n_tasks = 5;
    p.area_width = 3;
    p.area_height = 2;
    p.seed = 9;
    const Instance inst = generate_instance(p);

    CHECK(inst.n_depots == 4);
    CHECK(inst.n_tasks == 5);
    CHECK(inst.n_chargers == 2);  // (3-1)*(2-1)
    CHECK(inst.T == doctest::Approx(p.T_over_B * inst.B));
    // D = 1: all delta equal
    for (int r = inst.first_charger(); r < inst.n(); ++r)
        CHECK(inst.delta[r] == doctest::Approx(inst.delta[inst.first_charger()]));
    // depots at corners
    CHECK(inst.coords[0][0] == 0.0);
    CHECK(inst.coords[3][0] == 3.0);
    CHECK(inst.coords[3][1] == 2.0);
    // v_start spread, total >= 1
    int total = 0;
    for (int v : inst.v_start) total += v;
    CHECK(total >= 1);
}

TEST_CASE("generation is deterministic and serialization round-trips byte-identically") {
    GenParams p;
    p.n_tasks = 7;
    p.area_width = 3;
    p.area_height = 3;
    p.n_charge_levels = 2;
    p.seed = 42;
    const Instance a = generate_instance(p);
    const Instance b = generate_instance(p);
    CHECK(instance_to_json(a) == instance_to_json(b));

    const Instance c = instance_from_json(instance_to_json(a));
    CHECK(instances_equal(a, c));
    CHECK(instance_to_json(a) == instance_to_json(c));
}

TEST_CASE("validation accepts generated instances and names violations") {
    GenParams p;
    p.n_tasks = 4;
    p.seed = 3;
    Instance inst = generate_instance(p);
    CHECK(validate_instance(inst).empty());

    SUBCASE("triangle violation names the triple") {
        Instance bad = inst;
        bad.explicit_matrices = true;
        // stretch one arc way beyond the detour
        bad.time_m[0 * bad.n() + 1] = 100.0;
        const auto violations = validate_instance(bad);
        REQUIRE(!violations.empty());
        bool found = false;
        for (const auto& v : violations)
            if (v.find("time triangle violation (d0,") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("zero delta flagged") {
        Instance bad = inst;
        bad.delta[bad.first_charger()] = 0.0;
        const auto violations = validate_instance(bad);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].find("delta(r0) not positive") != std::string::npos);
    }
}

TEST_CASE("file io errors carry field context") {
    CHECK_THROWS_WITH_AS(instance_from_json("{ not json"),
                         doctest::Contains("instance parse error"), std::runtime_error);

    const char* missing_b = R"({
        "depots": ["d0"], "tasks": ["t0"], "chargers": [],
        "coords": {"d0": [0,0], "t0": [1,0]},
        "T": 4.0, "delta": {}, "v_start": {"d0": 1}
    })";
    CHECK_THROWS_WITH_AS(instance_from_json(missing_b), doctest::Contains("\"B\""),
                         std::runtime_error);

    const char* bad_coord = R"({
        "depots": ["d0"], "tasks": ["t0"], "chargers": [],
        "coords": {"d0": [0,0], "t0": ["x",0]},
        "B": 1.0, "T": 4.0, "delta": {}, "v_start": {"d0": 1}
    })";
    CHECK_THROWS_AS(instance_from_json(bad_coord), std::runtime_error);
}

TEST_CASE("save/load through a file") {
    GenParams p;
    p.n_tasks = 3;
    p.seed = 5;
    const Instance inst = generate_instance(p);
    const auto path = std::filesystem::temp_directory_path() / "ersp_test_instance.json";
    save_instance(inst, path.string());
    const Instance back = load_instance(path.string());
    CHECK(instances_equal(inst, back));
    std::filesystem::remove(path);
}

TEST_CASE("explicit matrices override Euclidean derivation") {
    const char* text = R"({
        "depots": ["d0"], "tasks": ["t0"], "chargers": [],
        "B": 10.0, "T": 100.0, "delta": {}, "v_start": {"d0": 1},
        "time": {"d0": {"t0": 2.0}, "t0": {"d0": 3.0}},
        "cost": {"d0": {"t0": 5.0}, "t0": {"d0": 6.0}},
        "battery_use": {"d0": {"t0": 1.0}, "t0": {"d0": 1.5}}
    })";
    const Instance inst = instance_from_json(text);
    CHECK(inst.t(0, 1) == 2.0);
    CHECK(inst.c(1, 0) == 6.0);
    CHECK(inst.b(1, 0) == 1.5);
    const Instance back = instance_from_json(instance_to_json(inst));
    CHECK(instances_equal(inst, back));
}
