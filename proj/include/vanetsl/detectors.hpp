#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "vanetsl/geometry.hpp"
#include "vanetsl/opinion.hpp"

namespace vanetsl {

using VehicleId = std::uint32_t;

struct EartConfig {
    double threshold_theta = 400.0;  // meters
    double sigma = 100.0;            // meters
};

struct ExchangeConfig {
    double distance_threshold = 350.0;  // meters
    double decay_constant = 10.0;
    double table_ttl = 3.0;  // seconds
    // A neighbor stored farther than this from a beacon's claimed position
    // cannot have heard the sender there (set it to the radio's maximum
    // range); if such a neighbor lists the sender anyway, that is counted
    // as a disbelief sample. <= 0 disables the channel.
    double contradiction_radius = 500.0;  // meters
};

// One neighbor-table row: what the neighbor last claimed about itself and
// whom it reported hearing.
struct NeighborEntry {
    Vec2 claimed_position;
    double timestamp = 0.0;
    std::vector<VehicleId> neighbor_ids;  // sorted ascending

    bool lists(VehicleId id) const;
    bool operator==(const NeighborEntry&) const = default;
};

// Keyed by neighbor id; ordered so iteration is deterministic.
using NeighborTable = std::map<VehicleId, NeighborEntry>;

// Everything a detector may look at for one received beacon. The table
// pointer refers to the receiver's table as it stood before this beacon was
// applied, already pruned of entries older than the table TTL; it must stay
// untouched while detection runs.
struct Evidence {
    VehicleId sender_id = 0;
    Vec2 claimed_position;
    Vec2 receiver_position;
    const NeighborTable* neighbor_table = nullptr;
    double now = 0.0;  // seconds
};

// Distance between the receiver and the position the sender claims.
double claimed_distance(const Evidence& evidence);

// Range-plausibility opinion. With g = exp(-(delta-theta)^2 / (2 sigma^2)):
// delta <= theta yields (1-g, 0, g), otherwise (0, 1-g, g); base rate 1/2.
// Uncertainty peaks at exactly 1 when delta equals the threshold.
Opinion eart_opinion(const Evidence& evidence, const EartConfig& config);

// Original binary acceptance-range check: flag iff the claimed position is
// strictly farther than the threshold.
bool art_binary(const Evidence& evidence, double threshold);

struct ExchangeSamples {
    int benign = 0;  // neighbors that list the sender
    int total = 0;   // neighbors close enough to the claimed position to judge
};

// Counts samples from the neighbor table. Two kinds of evidence feed in:
// every neighbor (other than the sender itself) whose last claimed position
// lies within the distance threshold of the beacon's claimed position is
// expected to list the sender (listed -> benign sample, missing ->
// non-benign sample); and a neighbor beyond the contradiction radius that
// lists the sender anyway contributes a non-benign sample, since no radio
// reaches that far. Absence of a distant neighbor's listing proves nothing
// and is never counted.
ExchangeSamples exchange_samples(const Evidence& evidence,
                                 const ExchangeConfig& config);

// Opinion from exchange samples. Uncertainty is exp(-n / decay_constant);
// the remaining mass splits belief : disbelief as benign : (n - benign).
// No samples means total uncertainty.
Opinion exchange_opinion(int benign, int total, const ExchangeConfig& config);

}  // namespace vanetsl
