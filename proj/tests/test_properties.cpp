#include "doctest.h"
#include "property_harness.hpp"

using namespace ersp;
using namespace ersp::test;

// Quick randomized passes over every criteria family; the acceptance suite
// repeats these at full trial counts.

namespace {
void expect_clean(const PropertyReport& rep) {
    CHECK(rep.p1_failures == 0);
    CHECK(rep.p2i_failures == 0);
    CHECK(rep.p2ii_failures == 0);
    CHECK(rep.trials() > 0);
}
}  // namespace

TEST_CASE("base subpath criteria propagate (Hom)") {
    expect_clean(run_property_suite(Variant::Hom, ElemMode::None, false, 2000, 1));
}

TEST_CASE("elementary criteria propagate (Hom)") {
    expect_clean(run_property_suite(Variant::Hom, ElemMode::Full, false, 2000, 2));
}

TEST_CASE("heterogeneous sequence criteria propagate") {
    expect_clean(run_property_suite(Variant::Het, ElemMode::None, false, 2000, 3));
}

TEST_CASE("ng criteria propagate (Hom)") {
    expect_clean(run_property_suite(Variant::Hom, ElemMode::Ng, false, 2000, 4));
}

TEST_CASE("ng plus cut criteria propagate (Hom)") {
    expect_clean(run_property_suite(Variant::Hom, ElemMode::Ng, true, 2000, 5));
}

TEST_CASE("heterogeneous ng criteria propagate") {
    expect_clean(run_property_suite(Variant::Het, ElemMode::Ng, false, 2000, 6));
}

TEST_CASE("heterogeneous ng plus cut criteria propagate") {
    expect_clean(run_property_suite(Variant::Het, ElemMode::Ng, true, 2000, 7));
}
