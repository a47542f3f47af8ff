#include <stdexcept>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "vanetsl/detectors.hpp"
#include "vanetsl/rng.hpp"

using namespace vanetsl;

namespace {

// Frozen with an independent high-precision calculator.
constexpr double kExpMinus8 = 0.00033546262790251184;
constexpr double kExpMinus1 = 0.36787944117144233;
constexpr double kExpMinusHalf = 0.60653065971263342;
constexpr double kExpMinus2 = 0.13533528323661270;
constexpr double kExpMinus4p5 = 0.011108996538242306;

Evidence evidence_at_distance(double delta) {
    return Evidence{1, Vec2{delta, 0.0}, Vec2{0.0, 0.0}, nullptr, 0.0};
}

}  // namespace

TEST_CASE("eART: uncertainty is exactly 1 at the threshold") {
    const Opinion op = eart_opinion(evidence_at_distance(400.0), EartConfig{400.0, 100.0});
    CHECK(op.uncertainty == 1.0);
    CHECK(op.belief == 0.0);
    CHECK(op.disbelief == 0.0);
    CHECK(op.base_rate == 0.5);
}

TEST_CASE("eART: near and far evaluations against frozen values") {
    const EartConfig config{400.0, 100.0};

    const Opinion near = eart_opinion(evidence_at_distance(0.0), config);
    CHECK(std::abs(near.belief - (1.0 - kExpMinus8)) <= 1e-12);
    CHECK(near.disbelief == 0.0);
    CHECK(std::abs(near.uncertainty - kExpMinus8) <= 1e-12);

    const Opinion far = eart_opinion(evidence_at_distance(800.0), config);
    CHECK(far.belief == 0.0);
    CHECK(std::abs(far.disbelief - (1.0 - kExpMinus8)) <= 1e-12);
    CHECK(std::abs(far.uncertainty - kExpMinus8) <= 1e-12);
}

TEST_CASE("eART: uncertainty at theta +- k sigma is exp(-k^2/2)") {
    const EartConfig config{400.0, 100.0};
    const double expected[] = {kExpMinusHalf, kExpMinus2, kExpMinus4p5};
    for (int k = 1; k <= 3; ++k) {
        const Opinion below =
            eart_opinion(evidence_at_distance(400.0 - k * 100.0), config);
        const Opinion above =
            eart_opinion(evidence_at_distance(400.0 + k * 100.0), config);
        CHECK(std::abs(below.uncertainty - expected[k - 1]) <= 1e-12);
        CHECK(std::abs(above.uncertainty - expected[k - 1]) <= 1e-12);
        CHECK(below.disbelief == 0.0);
        CHECK(above.belief == 0.0);
    }
}

TEST_CASE("eART: validity, monotonicity and branch structure") {
    Rng rng(42);
    const EartConfig config{400.0, 100.0};
    double previous_uncertainty = 1.0;
    for (int i = 0; i <= 100; ++i) {
        const double delta = 400.0 + i * 10.0;
        const Opinion op = eart_opinion(evidence_at_distance(delta), config);
        CHECK(validate(op));
        if (i > 0) CHECK(op.uncertainty < previous_uncertainty);
        previous_uncertainty = op.uncertainty;
        CHECK((delta > 400.0 ? op.disbelief > 0.0 : op.disbelief == 0.0));
    }
    for (int i = 0; i < 1000; ++i) {
        const double theta = rng.uniform(50.0, 1000.0);
        const double sigma = rng.uniform(1.0, 400.0);
        const double delta = rng.uniform(0.0, 2000.0);
        const Opinion op = eart_opinion(evidence_at_distance(delta), EartConfig{theta, sigma});
        CHECK(validate(op));
        CHECK((op.belief > 0.0) == (delta <= theta && delta != theta));
        CHECK((op.disbelief > 0.0) == (delta > theta));
    }
}

TEST_CASE("eART: rejects bad inputs") {
    CHECK_THROWS_AS(eart_opinion(evidence_at_distance(100.0), EartConfig{400.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(eart_opinion(evidence_at_distance(100.0), EartConfig{-1.0, 100.0}),
                    std::invalid_argument);
    Evidence bad = evidence_at_distance(100.0);
    bad.claimed_position.x = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(eart_opinion(bad, EartConfig{400.0, 100.0}), std::domain_error);
}

TEST_CASE("binary ART boundary convention") {
    CHECK_FALSE(art_binary(evidence_at_distance(100.0), 400.0));
    CHECK_FALSE(art_binary(evidence_at_distance(400.0), 400.0));
    CHECK(art_binary(evidence_at_distance(401.0), 400.0));
    CHECK_THROWS_AS(art_binary(evidence_at_distance(100.0), 0.0), std::invalid_argument);
}

TEST_CASE("binary ART agrees with the eART branch split") {
    Rng rng(43);
    const EartConfig config{400.0, 100.0};
    for (int i = 0; i < 2000; ++i) {
        const double delta = rng.uniform(0.0, 800.0);
        const Evidence ev = evidence_at_distance(delta);
        const Opinion op = eart_opinion(ev, config);
        CHECK(art_binary(ev, config.threshold_theta) == (op.disbelief > 0.0));
    }
}

TEST_CASE("exchange samples: counting rules") {
    const ExchangeConfig config;
    NeighborTable table;
    Evidence ev{7, Vec2{0.0, 0.0}, Vec2{10.0, 0.0}, &table, 5.0};

    SUBCASE("empty table") {
        const auto s = exchange_samples(ev, config);
        CHECK(s.benign == 0);
        CHECK(s.total == 0);
    }

    SUBCASE("one in-range neighbor listing the sender") {
        table[2] = NeighborEntry{Vec2{100.0, 0.0}, 4.5, {5, 7, 9}};
        const auto s = exchange_samples(ev, config);
        CHECK(s.benign == 1);
        CHECK(s.total == 1);
    }

    SUBCASE("out-of-range neighbors are skipped") {
        table[2] = NeighborEntry{Vec2{100.0, 0.0}, 4.5, {5, 7, 9}};
        table[3] = NeighborEntry{Vec2{0.0, 200.0}, 4.5, {5}};
        table[4] = NeighborEntry{Vec2{450.0, 0.0}, 4.5, {7}};  // in the gap zone
        const auto s = exchange_samples(ev, config);
        CHECK(s.benign == 1);
        CHECK(s.total == 2);
    }

    SUBCASE("the boundary distance still counts") {
        table[2] = NeighborEntry{Vec2{350.0, 0.0}, 4.5, {7}};
        const auto s = exchange_samples(ev, config);
        CHECK(s.total == 1);
        CHECK(s.benign == 1);
    }

    SUBCASE("the sender's own entry is never a sample") {
        table[7] = NeighborEntry{Vec2{1.0, 0.0}, 4.5, {2, 7}};
        const auto s = exchange_samples(ev, config);
        CHECK(s.total == 0);
    }

    SUBCASE("a lister beyond any radio reach is a contradiction sample") {
        table[2] = NeighborEntry{Vec2{100.0, 0.0}, 4.5, {7}};
        table[4] = NeighborEntry{Vec2{9000.0, 0.0}, 4.5, {7}};
        const auto s = exchange_samples(ev, config);
        CHECK(s.benign == 1);
        CHECK(s.total == 2);
    }

    SUBCASE("a silent distant neighbor proves nothing") {
        table[4] = NeighborEntry{Vec2{9000.0, 0.0}, 4.5, {5, 9}};
        const auto s = exchange_samples(ev, config);
        CHECK(s.benign == 0);
        CHECK(s.total == 0);
    }

    SUBCASE("contradiction channel can be disabled") {
        ExchangeConfig presence_only = config;
        presence_only.contradiction_radius = 0.0;
        table[2] = NeighborEntry{Vec2{100.0, 0.0}, 4.5, {7}};
        table[4] = NeighborEntry{Vec2{9000.0, 0.0}, 4.5, {7}};
        const auto s = exchange_samples(ev, presence_only);
        CHECK(s.benign == 1);
        CHECK(s.total == 1);
    }
}

TEST_CASE("exchange opinion: no samples means total uncertainty") {
    const Opinion op = exchange_opinion(0, 0, ExchangeConfig{});
    CHECK(op == Opinion{0.0, 0.0, 1.0, 0.5});
}

TEST_CASE("exchange opinion: frozen evaluations") {
    const ExchangeConfig config;

    const Opinion all_benign = exchange_opinion(10, 10, config);
    CHECK(std::abs(all_benign.belief - (1.0 - kExpMinus1)) <= 1e-12);
    CHECK(all_benign.disbelief == 0.0);
    CHECK(std::abs(all_benign.uncertainty - kExpMinus1) <= 1e-12);

    const Opinion none_benign = exchange_opinion(0, 10, config);
    CHECK(none_benign.belief == 0.0);
    CHECK(std::abs(none_benign.disbelief - (1.0 - kExpMinus1)) <= 1e-12);
    CHECK(std::abs(none_benign.uncertainty - kExpMinus1) <= 1e-12);
}

TEST_CASE("exchange opinion: uncertainty is exp(-n/decay), decreasing in n") {
    const ExchangeConfig config;
    double previous = 2.0;
    for (int n = 0; n <= 50; ++n) {
        const Opinion op = exchange_opinion(n / 2, n, config);
        CHECK(op.uncertainty == std::exp(-n / 10.0));
        CHECK(op.uncertainty < previous);
        previous = op.uncertainty;
        CHECK(validate(op));
    }
}

TEST_CASE("exchange opinion: balanced samples give expectation 1/2") {
    const ExchangeConfig config;
    for (int half = 1; half <= 20; ++half) {
        const Opinion op = exchange_opinion(half, 2 * half, config);
        CHECK(expectation(op) == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("exchange opinion: rejects impossible sample counts") {
    CHECK_THROWS_AS(exchange_opinion(5, 3, ExchangeConfig{}), std::domain_error);
    CHECK_THROWS_AS(exchange_opinion(-1, 3, ExchangeConfig{}), std::domain_error);
}
