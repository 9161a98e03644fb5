#include "doctest.h"

#include <algorithm>

#include "altradix/cylinders.hpp"
#include "testutil.hpp"

using namespace altradix;

namespace {

RationalNumber rat(long long p, long long q) { return rat_from_parts(p, q); }

SignSet evens() { return SignSet({}, {false, true}); }

} // namespace

TEST_CASE("cylinders: ternary rank-one intervals") {
    const SystemDescriptor sys = SAdicSystem(3, evens());
    CHECK(interval(Cylinder(sys, {0})) == ClosedInterval(rat(-1, 4), rat(1, 12)));
    CHECK(interval(Cylinder(sys, {1})) == ClosedInterval(rat(1, 12), rat(5, 12)));
    CHECK(interval(Cylinder(sys, {})) == range_bounds(sys));
}

TEST_CASE("cylinders: length is the closed-form weight") {
    const SystemDescriptor t3 = SAdicSystem(3, evens());
    CHECK(length(Cylinder(t3, {1, 2})) == rat(1, 9));
    CHECK(length(Cylinder(t3, {0, 0})) == rat(1, 9));
    CHECK(length(Cylinder(t3, {})) == range_bounds(t3).width());

    const SystemDescriptor c23 = CantorSystem({}, {2, 3}, SignSet{});
    CHECK(length(Cylinder(c23, {1, 2})) == rat(1, 6));
    CHECK(length(Cylinder(c23, {0})) == rat(1, 2));
}

TEST_CASE("cylinders: children enumerate the next alphabet and tile the parent") {
    const SystemDescriptor t3 = SAdicSystem(3, evens());
    const auto kids = children(Cylinder(t3, {}));
    REQUIRE(kids.size() == 3);
    for (const Cylinder& kid : kids) CHECK(length(kid) == rat(1, 3));

    const SystemDescriptor c23 = CantorSystem({}, {2, 3}, SignSet{});
    CHECK(children(Cylinder(c23, {1})).size() == 3); // next base is 3
    CHECK(children(Cylinder(c23, {})).size() == 2);

    std::mt19937_64 rng(601);
    for (int t = 0; t < 30; ++t) {
        const SystemDescriptor sys = t % 2 == 0
                                         ? SystemDescriptor(testutil::random_sadic(rng))
                                         : SystemDescriptor(testutil::random_cantor(rng));
        std::vector<long long> base;
        std::uniform_int_distribution<int> rank_dist(0, 4);
        const int rank = rank_dist(rng);
        for (int n = 1; n <= rank; ++n) {
            std::uniform_int_distribution<long long> digit(0, alphabet_size(sys, n) - 1);
            base.push_back(digit(rng));
        }
        const Cylinder parent(sys, base);
        const ClosedInterval box = interval(parent);
        std::vector<ClosedInterval> kid_boxes;
        for (const Cylinder& kid : children(parent)) {
            const ClosedInterval kb = interval(kid);
            CHECK(box.lo <= kb.lo);
            CHECK(kb.hi <= box.hi);
            kid_boxes.push_back(kb);
        }
        std::sort(kid_boxes.begin(), kid_boxes.end(),
                  [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; });
        CHECK(kid_boxes.front().lo == box.lo);
        CHECK(kid_boxes.back().hi == box.hi);
        for (std::size_t i = 0; i + 1 < kid_boxes.size(); ++i) {
            CHECK(kid_boxes[i].hi == kid_boxes[i + 1].lo);
        }
    }
}

TEST_CASE("cylinders: adjacency orientation flips on minus positions") {
    const SystemDescriptor t3 = SAdicSystem(3, evens());
    // position 1 is a plus position: right endpoint meets the next base
    CHECK(adjacency_check(Cylinder(t3, {0})));
    CHECK(interval(Cylinder(t3, {0})).hi == interval(Cylinder(t3, {1})).lo);
    CHECK(interval(Cylinder(t3, {0})).hi == rat(1, 12));
    // position 2 is a minus position: the infimum meets the next base's supremum
    CHECK(adjacency_check(Cylinder(t3, {0, 0})));
    CHECK(interval(Cylinder(t3, {0, 0})).lo == interval(Cylinder(t3, {0, 1})).hi);

    const SystemDescriptor dec = SAdicSystem(10, SignSet{});
    CHECK(adjacency_check(Cylinder(dec, {3})));
    CHECK(interval(Cylinder(dec, {3})).hi == rat(2, 5));
}

TEST_CASE("cylinders: adjacency needs a non-maximal last digit") {
    const SystemDescriptor t3 = SAdicSystem(3, evens());
    CHECK_THROWS_AS(adjacency_check(Cylinder(t3, {2})), validation_error);
    CHECK_THROWS_AS(adjacency_check(Cylinder(t3, {})), validation_error);
}

TEST_CASE("cylinders: construction validates digits and family") {
    const SystemDescriptor t3 = SAdicSystem(3, evens());
    CHECK_THROWS_AS(Cylinder(t3, {3}), validation_error);
    CHECK_THROWS_AS(Cylinder(t3, {0, -1}), validation_error);
    Column half;
    half.q = {rat(1, 2), rat(1, 2)};
    const SystemDescriptor q = QTildeSystem({}, {half}, SignSet{});
    CHECK_THROWS_AS(Cylinder(q, {}), validation_error);
    CHECK_THROWS_AS(refine_to_point(q, parse_digits("(1)"), 3), validation_error);
}

TEST_CASE("cylinders: refinement walks down to the value") {
    const SystemDescriptor t3 = SAdicSystem(3, evens());
    const auto steps = refine_to_point(t3, parse_digits("(1)"), 3);
    REQUIRE(steps.size() == 3);
    CHECK(steps[0].width() == rat(1, 3));
    CHECK(steps[1].width() == rat(1, 9));
    CHECK(steps[2].width() == rat(1, 27));
    for (const ClosedInterval& box : steps) CHECK(box.contains(rat(1, 4)));

    const SystemDescriptor c23 = CantorSystem({}, {2, 3}, SignSet{});
    const RationalNumber v = eval(c23, parse_digits("(1 2)"));
    const auto steps2 = refine_to_point(c23, parse_digits("(1 2)"), 2);
    REQUIRE(steps2.size() == 2);
    CHECK(steps2[0].width() == rat(1, 2));
    CHECK(steps2[1].width() == rat(1, 6));
    for (const ClosedInterval& box : steps2) CHECK(box.contains(v));

    CHECK(refine_to_point(t3, parse_digits("(1)"), 0).empty());
}

TEST_CASE("cylinders: deep nesting keeps the value inside") {
    std::mt19937_64 rng(602);
    for (int t = 0; t < 12; ++t) {
        const SystemDescriptor sys = t % 2 == 0
                                         ? SystemDescriptor(testutil::random_sadic(rng))
                                         : SystemDescriptor(testutil::random_cantor(rng));
        const DigitSequence seq = testutil::random_sequence_for(sys, rng);
        const RationalNumber x = eval(sys, seq);
        const auto steps = refine_to_point(sys, seq, 25);
        for (std::size_t i = 0; i < steps.size(); ++i) {
            CHECK(steps[i].contains(x));
            if (i > 0) {
                CHECK(steps[i - 1].lo <= steps[i].lo);
                CHECK(steps[i].hi <= steps[i - 1].hi);
            }
        }
    }
}
