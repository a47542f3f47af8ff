#include <stdexcept>
#include <array>
#include <cmath>

#include "doctest.h"
#include "vanetsl/attackers.hpp"

using namespace vanetsl;

namespace {
const Rect kWorld{{0.0, 0.0}, {4000.0, 4000.0}};
}

TEST_CASE("fixed offset is deterministic and rng-independent") {
    Rng rng_a(1);
    Rng rng_b(2);
    const Strategy s = FixedOffset{{300.0, 300.0}};
    CHECK(apply(s, Vec2{0.0, 0.0}, rng_a) == Vec2{300.0, 300.0});
    CHECK(apply(s, Vec2{0.0, 0.0}, rng_b) == Vec2{300.0, 300.0});

    const Strategy small = FixedOffset{{50.0, 50.0}};
    Rng rng_c(3);
    CHECK(apply(small, Vec2{10.0, 10.0}, rng_c) == Vec2{60.0, 60.0});

    // Same seed with and without an interleaved apply: the stream is untouched.
    Rng used(7);
    Rng fresh(7);
    (void)apply(s, Vec2{1.0, 2.0}, used);
    CHECK(used.raw() == fresh.raw());
}

TEST_CASE("random offset draws stay inside the square") {
    Rng rng(11);
    const double w = 300.0;
    const Strategy s = RandomOffset{w};
    const Vec2 origin{1000.0, 2000.0};
    for (int i = 0; i < 10000; ++i) {
        const Vec2 p = apply(s, origin, rng);
        CHECK(p.x >= origin.x - w);
        CHECK(p.x <= origin.x + w);
        CHECK(p.y >= origin.y - w);
        CHECK(p.y <= origin.y + w);
    }
}

TEST_CASE("random position draws are uniform over the area") {
    // 10x10 binning, 1e5 draws, chi-square threshold at significance 0.01
    // with 99 degrees of freedom (frozen from an independent table).
    constexpr double kChiSquare99 = 134.64161685578915;
    Rng rng(2024);
    const Strategy s = RandomPosition{kWorld};
    std::array<std::array<int, 10>, 10> bins{};
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const Vec2 p = apply(s, Vec2{0.0, 0.0}, rng);
        CHECK(kWorld.contains(p));
        const int bx = std::min(9, static_cast<int>(p.x / 400.0));
        const int by = std::min(9, static_cast<int>(p.y / 400.0));
        ++bins[static_cast<std::size_t>(bx)][static_cast<std::size_t>(by)];
    }
    const double expected = draws / 100.0;
    double statistic = 0.0;
    for (const auto& row : bins) {
        for (int count : row) {
            const double diff = count - expected;
            statistic += diff * diff / expected;
        }
    }
    CHECK(statistic < kChiSquare99);
}

TEST_CASE("apply never mutates the true position") {
    Rng rng(5);
    const Vec2 original{123.0, 456.0};
    Vec2 copy = original;
    (void)apply(RandomOffset{50.0}, copy, rng);
    (void)apply(RandomPosition{kWorld}, copy, rng);
    (void)apply(FixedOffset{{1.0, 1.0}}, copy, rng);
    CHECK(copy == original);
}

TEST_CASE("strategy parsing") {
    const Strategy fixed = parse_strategy("fixed:300,300", kWorld);
    CHECK(std::holds_alternative<FixedOffset>(fixed));
    CHECK(std::get<FixedOffset>(fixed).offset == Vec2{300.0, 300.0});
    CHECK(strategy_name(fixed) == "fixed:300,300");

    const Strategy rp = parse_strategy("random_position", kWorld);
    CHECK(std::holds_alternative<RandomPosition>(rp));
    CHECK(std::get<RandomPosition>(rp).area.max == kWorld.max);
    CHECK(strategy_name(rp) == "random_position");

    const Strategy ro = parse_strategy("random_offset:150", kWorld);
    CHECK(std::holds_alternative<RandomOffset>(ro));
    CHECK(std::get<RandomOffset>(ro).half_width == 150.0);
    CHECK(strategy_name(ro) == "random_offset:150");

    CHECK_THROWS_AS(parse_strategy("teleport", kWorld), std::invalid_argument);
    CHECK_THROWS_AS(parse_strategy("fixed:300", kWorld), std::invalid_argument);
    CHECK_THROWS_AS(parse_strategy("fixed:a,b", kWorld), std::invalid_argument);
    CHECK_THROWS_AS(parse_strategy("random_offset:-5", kWorld), std::invalid_argument);
}
