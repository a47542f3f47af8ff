#include "vanetsl/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vanetsl {

bool NeighborEntry::lists(VehicleId id) const {
    return std::binary_search(neighbor_ids.begin(), neighbor_ids.end(), id);
}

double claimed_distance(const Evidence& evidence) {
    return distance(evidence.receiver_position, evidence.claimed_position);
}

Opinion eart_opinion(const Evidence& evidence, const EartConfig& config) {
    if (config.sigma <= 0.0 || config.threshold_theta <= 0.0) {
        throw std::invalid_argument("eART threshold and sigma must be positive");
    }
    const double delta = claimed_distance(evidence);
    if (!std::isfinite(delta)) {
        throw std::domain_error("non-finite position in eART evidence");
    }
    const double diff = delta - config.threshold_theta;
    const double g = std::exp(-(diff * diff) / (2.0 * config.sigma * config.sigma));
    // Constructed directly so the uncertainty keeps the exact exp() value;
    // the mass sums to 1 up to one rounding of 1 - g.
    if (delta <= config.threshold_theta) {
        return Opinion{1.0 - g, 0.0, g, 0.5};
    }
    return Opinion{0.0, 1.0 - g, g, 0.5};
}

bool art_binary(const Evidence& evidence, double threshold) {
    if (threshold <= 0.0) {
        throw std::invalid_argument("ART threshold must be positive");
    }
    return claimed_distance(evidence) > threshold;
}

ExchangeSamples exchange_samples(const Evidence& evidence,
                                 const ExchangeConfig& config) {
    ExchangeSamples samples;
    if (evidence.neighbor_table == nullptr) return samples;
    for (const auto& [id, entry] : *evidence.neighbor_table) {
        if (id == evidence.sender_id) continue;
        const double gap = distance(entry.claimed_position, evidence.claimed_position);
        if (gap <= config.distance_threshold) {
            ++samples.total;
            if (entry.lists(evidence.sender_id)) ++samples.benign;
        } else if (config.contradiction_radius > 0.0 &&
                   gap > config.contradiction_radius &&
                   entry.lists(evidence.sender_id)) {
            ++samples.total;
        }
    }
    return samples;
}

Opinion exchange_opinion(int benign, int total, const ExchangeConfig& config) {
    if (benign < 0 || total < 0 || benign > total) {
        throw std::domain_error("exchange samples require 0 <= benign <= total");
    }
    if (total == 0) return vacuous(0.5);
    const double u = std::exp(-static_cast<double>(total) / config.decay_constant);
    const double certainty = 1.0 - u;
    const double ratio = static_cast<double>(benign) / static_cast<double>(total);
    // The uncertainty must stay the exact exp() value, so belief takes one
    // rounded product and disbelief the exact remainder of the certainty.
    const double belief = ratio * certainty;
    return Opinion{belief, certainty - belief, u, 0.5};
}

}  // namespace vanetsl
