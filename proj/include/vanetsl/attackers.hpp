#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "vanetsl/geometry.hpp"
#include "vanetsl/rng.hpp"

namespace vanetsl {

// Position-falsification strategies. FixedOffset shifts the true position
// by a constant vector; RandomPosition claims a uniform point anywhere in
// the configured area; RandomOffset claims a uniform point in a square of
// the given half-width around the true position.
struct FixedOffset {
    Vec2 offset;
    bool operator==(const FixedOffset&) const = default;
};

struct RandomPosition {
    Rect area;
    bool operator==(const RandomPosition&) const = default;
};

struct RandomOffset {
    double half_width = 300.0;
    bool operator==(const RandomOffset&) const = default;
};

using Strategy = std::variant<FixedOffset, RandomPosition, RandomOffset>;

// Produces the claimed position for one beacon. FixedOffset never touches
// the rng; the random strategies draw x then y.
Vec2 apply(const Strategy& strategy, const Vec2& true_position, Rng& rng);

// Config syntax: "fixed:dx,dy" | "random_position" | "random_offset:w".
// RandomPosition draws from the supplied world area. Throws
// std::invalid_argument on malformed text.
Strategy parse_strategy(std::string_view text, const Rect& world);

// Inverse of parse_strategy, used for CSV parameter columns.
std::string strategy_name(const Strategy& strategy);

}  // namespace vanetsl
