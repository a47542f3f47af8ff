#include "vanetsl/attackers.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace vanetsl {

namespace {

double parse_number(std::string_view text, std::string_view what) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("bad " + std::string(what) + " in strategy: '" +
                                    std::string(text) + "'");
    }
    return value;
}

}  // namespace

Vec2 apply(const Strategy& strategy, const Vec2& true_position, Rng& rng) {
    return std::visit(
        [&](const auto& s) -> Vec2 {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FixedOffset>) {
                return true_position + s.offset;
            } else if constexpr (std::is_same_v<T, RandomPosition>) {
                const double x = rng.uniform(s.area.min.x, s.area.max.x);
                const double y = rng.uniform(s.area.min.y, s.area.max.y);
                return {x, y};
            } else {
                const double x = rng.uniform(-s.half_width, s.half_width);
                const double y = rng.uniform(-s.half_width, s.half_width);
                return true_position + Vec2{x, y};
            }
        },
        strategy);
}

Strategy parse_strategy(std::string_view text, const Rect& world) {
    if (text == "random_position") {
        return RandomPosition{world};
    }
    if (text.starts_with("fixed:")) {
        const auto args = text.substr(6);
        const auto comma = args.find(',');
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("fixed strategy needs 'fixed:dx,dy'");
        }
        return FixedOffset{{parse_number(args.substr(0, comma), "dx"),
                            parse_number(args.substr(comma + 1), "dy")}};
    }
    if (text.starts_with("random_offset:")) {
        const double w = parse_number(text.substr(14), "half width");
        if (w <= 0.0) {
            throw std::invalid_argument("random_offset half width must be positive");
        }
        return RandomOffset{w};
    }
    throw std::invalid_argument("unknown strategy '" + std::string(text) + "'");
}

std::string strategy_name(const Strategy& strategy) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            char buf[64];
            if constexpr (std::is_same_v<T, FixedOffset>) {
                std::snprintf(buf, sizeof buf, "fixed:%g,%g", s.offset.x, s.offset.y);
                return buf;
            } else if constexpr (std::is_same_v<T, RandomPosition>) {
                return "random_position";
            } else {
                std::snprintf(buf, sizeof buf, "random_offset:%g", s.half_width);
                return buf;
            }
        },
        strategy);
}

}  // namespace vanetsl
