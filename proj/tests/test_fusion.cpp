#include <stdexcept>
#include <array>
#include <cmath>

#include "doctest.h"
#include "vanetsl/detectors.hpp"
#include "vanetsl/fusion.hpp"
#include "vanetsl/rng.hpp"

using namespace vanetsl;

TEST_CASE("merge: identity and hand example") {
    const std::array<Opinion, 2> vacuous_pair = {vacuous(), vacuous()};
    CHECK(merge(vacuous_pair) == vacuous());

    const Opinion x = make_opinion(0.4, 0.1, 0.5);
    const std::array<Opinion, 2> with_vacuous = {x, vacuous()};
    CHECK(merge(with_vacuous) == x);

    const std::array<Opinion, 2> hand = {make_opinion(0.5, 0.0, 0.5),
                                         make_opinion(0.0, 0.5, 0.5)};
    const Opinion fused = merge(hand);
    CHECK(std::abs(fused.belief - 1.0 / 3.0) <= 1e-12);
    CHECK(std::abs(fused.disbelief - 1.0 / 3.0) <= 1e-12);
    CHECK(std::abs(fused.uncertainty - 1.0 / 3.0) <= 1e-12);

    CHECK_THROWS_AS(merge({}), std::invalid_argument);
}

TEST_CASE("classify: ties stay benign") {
    CHECK(classify(vacuous(), 0.5) == Classification::Benign);
    CHECK(classify(Opinion{0.0, 1.0, 0.0, 0.5}, 0.5) == Classification::Malicious);
    // E = 0.3 + 0.2 * 0.5 = 0.4
    CHECK(classify(make_opinion(0.3, 0.5, 0.2), 0.5) == Classification::Malicious);
    CHECK_THROWS_AS(classify(vacuous(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(classify(vacuous(), 1.0), std::invalid_argument);
}

TEST_CASE("classify is monotone in the expectation") {
    Rng rng(99);
    for (int i = 0; i < 2000; ++i) {
        const double u = rng.uniform();
        const double b1 = rng.uniform() * (1.0 - u);
        const double b2 = rng.uniform() * (1.0 - u);
        const Opinion lower = make_opinion(std::min(b1, b2), 1.0 - u - std::min(b1, b2), u);
        const Opinion higher = make_opinion(std::max(b1, b2), 1.0 - u - std::max(b1, b2), u);
        if (classify(lower) == Classification::Benign) {
            CHECK(classify(higher) == Classification::Benign);
        }
    }
}

TEST_CASE("classify_binary") {
    CHECK(classify_binary(true) == Classification::Malicious);
    CHECK(classify_binary(false) == Classification::Benign);

    // Boundary beacon at exactly the threshold is accepted end to end.
    const Evidence ev{1, Vec2{400.0, 0.0}, Vec2{0.0, 0.0}, nullptr, 0.0};
    CHECK(classify_binary(art_binary(ev, 400.0)) == Classification::Benign);
}

TEST_CASE("assess wires detectors into a verdict") {
    const Opinion eart = make_opinion(0.2, 0.0, 0.8);
    const Opinion exchange = make_opinion(0.0, 0.6, 0.4);
    const Verdict v = assess(true, eart, exchange, 0.5);

    CHECK(v.art_flag);
    CHECK(v.classification[kArt] == Classification::Malicious);
    CHECK(v.eart == eart);
    CHECK(v.exchange == exchange);
    CHECK(v.merged == fuse(eart, exchange));
    CHECK(v.merged_expectation == expectation(v.merged));
    CHECK(v.merged.uncertainty <=
          std::min(eart.uncertainty, exchange.uncertainty) + 1e-12);
    CHECK(v.classification[kEart] == classify(eart));
    CHECK(v.classification[kExchange] == classify(exchange));
    CHECK(v.classification[kMerged] == classify(v.merged));
}

TEST_CASE("assess: vacuous exchange leaves the eART classification untouched") {
    Rng rng(123);
    for (int i = 0; i < 2000; ++i) {
        const double delta = rng.uniform(0.0, 900.0);
        const Evidence ev{1, Vec2{delta, 0.0}, Vec2{0.0, 0.0}, nullptr, 0.0};
        const EartConfig config{400.0, rng.uniform(20.0, 200.0)};
        const Opinion eart = eart_opinion(ev, config);
        const Verdict v = assess(art_binary(ev, config.threshold_theta), eart,
                                 vacuous(), 0.5);
        CHECK(v.merged == eart);
        CHECK(v.classification[kMerged] == v.classification[kEart]);
    }
}
