#include "vanetsl/opinion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace vanetsl {

namespace {

constexpr double kConstructionTolerance = 1e-6;

bool in_unit_range(double v, double tol) { return v >= -tol && v <= 1.0 + tol; }

}  // namespace

bool validate(const Opinion& op, double tol) {
    if (!std::isfinite(op.belief) || !std::isfinite(op.disbelief) ||
        !std::isfinite(op.uncertainty) || !std::isfinite(op.base_rate)) {
        return false;
    }
    if (!in_unit_range(op.belief, tol) || !in_unit_range(op.disbelief, tol) ||
        !in_unit_range(op.uncertainty, tol) || !in_unit_range(op.base_rate, tol)) {
        return false;
    }
    const double sum = op.belief + op.disbelief + op.uncertainty;
    return std::abs(sum - 1.0) <= tol;
}

Opinion make_opinion(double belief, double disbelief, double uncertainty,
                     double base_rate) {
    if (!std::isfinite(belief) || !std::isfinite(disbelief) ||
        !std::isfinite(uncertainty) || !std::isfinite(base_rate)) {
        throw std::invalid_argument("opinion components must be finite");
    }
    if (base_rate < 0.0 || base_rate > 1.0) {
        throw std::invalid_argument("base rate outside [0, 1]");
    }
    if (!in_unit_range(belief, kConstructionTolerance) ||
        !in_unit_range(disbelief, kConstructionTolerance) ||
        !in_unit_range(uncertainty, kConstructionTolerance)) {
        throw std::invalid_argument("opinion mass component outside [0, 1]");
    }
    belief = std::clamp(belief, 0.0, 1.0);
    disbelief = std::clamp(disbelief, 0.0, 1.0);
    uncertainty = std::clamp(uncertainty, 0.0, 1.0);

    const double sum = belief + disbelief + uncertainty;
    if (std::abs(sum - 1.0) > kConstructionTolerance) {
        throw std::invalid_argument("opinion mass does not sum to 1");
    }
    return Opinion{belief / sum, disbelief / sum, uncertainty / sum, base_rate};
}

Opinion vacuous(double base_rate) {
    if (!(base_rate >= 0.0 && base_rate <= 1.0)) {
        throw std::invalid_argument("base rate outside [0, 1]");
    }
    return Opinion{0.0, 0.0, 1.0, base_rate};
}

double expectation(const Opinion& op) {
    if (!validate(op)) {
        throw std::domain_error("expectation of an invalid opinion");
    }
    return op.belief + op.uncertainty * op.base_rate;
}

Opinion fuse(const Opinion& a, const Opinion& b) {
    if (!validate(a) || !validate(b)) {
        throw std::domain_error("fuse requires valid opinions");
    }
    if (std::abs(a.base_rate - b.base_rate) > kOpinionTolerance) {
        throw std::domain_error("fuse requires equal base rates");
    }

    // The vacuous opinion is the identity element; returning the other
    // operand verbatim keeps identity exact at the bit level.
    if (a.uncertainty == 1.0) return b;
    if (b.uncertainty == 1.0) return a;

    const double k = a.uncertainty + b.uncertainty - a.uncertainty * b.uncertainty;
    if (k <= 0.0) {
        // Both dogmatic: limit treatment, componentwise average.
        return make_opinion(0.5 * (a.belief + b.belief),
                            0.5 * (a.disbelief + b.disbelief),
                            0.5 * (a.uncertainty + b.uncertainty), a.base_rate);
    }
    return make_opinion((a.belief * b.uncertainty + b.belief * a.uncertainty) / k,
                        (a.disbelief * b.uncertainty + b.disbelief * a.uncertainty) / k,
                        (a.uncertainty * b.uncertainty) / k, a.base_rate);
}

Opinion fuse_all(std::span<const Opinion> ops) {
    if (ops.empty()) return vacuous(0.5);
    Opinion acc = ops.front();
    for (std::size_t i = 1; i < ops.size(); ++i) {
        acc = fuse(acc, ops[i]);
    }
    return acc;
}

std::string opinion_csv(const Opinion& op) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g", op.belief, op.disbelief,
                  op.uncertainty, op.base_rate);
    return buf;
}

}  // namespace vanetsl
