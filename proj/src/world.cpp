#include "vanetsl/world.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vanetsl {

namespace {

constexpr double kTimeEps = 1e-9;

// Preset populations chosen so the three labels give clearly ordered mean
// vehicle counts on the default 4 km grid while the heaviest runs stay
// desk-scale.
struct DensityPreset {
    int initial_vehicles;
    double arrival_rate;
};

DensityPreset preset_for(Density d) {
    switch (d) {
        case Density::Low: return {60, 0.15};
        case Density::Medium: return {120, 0.30};
        case Density::High: return {240, 0.60};
    }
    throw std::logic_error("unreachable density");
}

}  // namespace

double RadioModel::reception_probability(double dist) const {
    if (!(dist >= 0.0) || !std::isfinite(dist)) {
        throw std::domain_error("reception distance must be non-negative");
    }
    if (dist <= r_full) return 1.0;
    if (dist >= r_cut) return 0.0;
    const double mid = 0.5 * (r_full + r_cut);
    const double scale = (r_cut - r_full) / (2.0 * falloff) * std::numbers::sqrt2;
    const auto tail = [&](double x) { return 0.5 * std::erfc((x - mid) / scale); };
    const double hi = tail(r_full);
    const double lo = tail(r_cut);
    return (tail(dist) - lo) / (hi - lo);
}

double ScenarioConfig::resolved_arrival_rate() const {
    return arrival_rate >= 0.0 ? arrival_rate : preset_for(density).arrival_rate;
}

int ScenarioConfig::resolved_initial_vehicles() const {
    return initial_vehicles >= 0 ? initial_vehicles
                                 : preset_for(density).initial_vehicles;
}

World::World(const ScenarioConfig& config) : config_(config), rng_(config.seed) {
    if (config_.duration <= 0.0 || config_.time_step <= 0.0) {
        throw std::invalid_argument("duration and time step must be positive");
    }
    if (!(config_.radio.r_full > 0.0 && config_.radio.r_full < config_.radio.r_cut)) {
        throw std::invalid_argument("radio model requires 0 < r_full < r_cut");
    }
    if (config_.grid_spacing <= 0.0 || config_.world_size < config_.grid_spacing) {
        throw std::invalid_argument("world must span at least one grid cell");
    }
    ticks_per_beacon_ =
        std::llround(1.0 / (config_.beacon_rate * config_.time_step));
    if (ticks_per_beacon_ < 1) {
        throw std::invalid_argument("beacon interval must be at least one tick");
    }
    const int initial = config_.resolved_initial_vehicles();
    vehicles_.reserve(static_cast<std::size_t>(initial) * 2);
    for (int i = 0; i < initial; ++i) spawn_vehicle();
}

VehicleId World::add_vehicle(VehicleState vehicle) {
    if (!config_.bounds().contains(vehicle.true_position)) {
        throw std::invalid_argument("vehicle outside world bounds");
    }
    if (vehicle.velocity.x != 0.0 && vehicle.velocity.y != 0.0) {
        throw std::invalid_argument("vehicle velocity must be axis-aligned");
    }
    vehicle.id = next_id_++;
    ++total_spawned_;
    if (vehicle.is_attacker) ++attackers_spawned_;
    vehicles_.push_back(std::move(vehicle));
    return vehicles_.back().id;
}

void World::spawn_vehicle() {
    const double size = config_.world_size;
    const auto lines = static_cast<std::int64_t>(size / config_.grid_spacing) + 1;

    const bool horizontal = rng_.bernoulli(0.5);
    const double line_coord =
        static_cast<double>(rng_.uniform_int(0, lines - 1)) * config_.grid_spacing;
    const double offset = rng_.uniform() * size;
    const double heading = rng_.bernoulli(0.5) ? 1.0 : -1.0;
    const double speed = rng_.uniform(config_.speed_min, config_.speed_max);
    const bool attacker = rng_.bernoulli(config_.attacker_probability);
    const auto phase = rng_.uniform_int(0, ticks_per_beacon_ - 1);

    VehicleState v;
    v.id = next_id_++;
    v.true_position = horizontal ? Vec2{offset, line_coord} : Vec2{line_coord, offset};
    v.velocity = horizontal ? Vec2{heading * speed, 0.0} : Vec2{0.0, heading * speed};
    v.is_attacker = attacker;
    if (attacker) v.strategy = config_.strategy;
    v.next_beacon_tick = tick_ + phase;
    vehicles_.push_back(std::move(v));

    ++total_spawned_;
    if (attacker) ++attackers_spawned_;
}

void World::turn_at_intersection(VehicleState& vehicle) {
    const double speed = std::abs(vehicle.velocity.x) + std::abs(vehicle.velocity.y);
    const Vec2 dirs[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
    const Vec2 reverse{vehicle.velocity.x < 0.0   ? 1.0
                       : vehicle.velocity.x > 0.0 ? -1.0
                                                  : 0.0,
                       vehicle.velocity.y < 0.0   ? 1.0
                       : vehicle.velocity.y > 0.0 ? -1.0
                                                  : 0.0};
    Vec2 options[3];
    int count = 0;
    for (const Vec2& d : dirs) {
        if (d == reverse) continue;
        options[count++] = d;
    }
    const Vec2 pick = options[rng_.uniform_int(0, 2)];
    vehicle.velocity = pick * speed;
}

void World::move_vehicle(VehicleState& vehicle) {
    const double spacing = config_.grid_spacing;
    double remaining =
        (std::abs(vehicle.velocity.x) + std::abs(vehicle.velocity.y)) *
        config_.time_step;

    // Advance segment by segment; a turn decision is due at every grid node
    // crossed. Vehicles that head past a border node simply leave the world
    // and are culled after the move phase.
    while (remaining > 0.0) {
        const bool along_x = vehicle.velocity.x != 0.0;
        double& coord = along_x ? vehicle.true_position.x : vehicle.true_position.y;
        const double dir = (along_x ? vehicle.velocity.x : vehicle.velocity.y) > 0.0
                               ? 1.0
                               : -1.0;
        double node;
        if (dir > 0.0) {
            node = spacing * (std::floor(coord / spacing + 1e-9) + 1.0);
        } else {
            node = spacing * (std::ceil(coord / spacing - 1e-9) - 1.0);
        }
        const double to_node = std::abs(node - coord);
        if (to_node > remaining) {
            coord += dir * remaining;
            return;
        }
        coord = node;
        remaining -= to_node;
        if (node < 0.0 || node > config_.world_size) return;  // departed
        turn_at_intersection(vehicle);
    }
}

void World::prune_table(NeighborTable& table) const {
    const double cutoff = now() - config_.exchange.table_ttl - kTimeEps;
    for (auto it = table.begin(); it != table.end();) {
        if (it->second.timestamp < cutoff) {
            it = table.erase(it);
        } else {
            ++it;
        }
    }
}

Beacon World::build_beacon(VehicleState& sender) {
    prune_table(sender.table);
    Beacon beacon;
    beacon.sender_id = sender.id;
    beacon.timestamp = now();
    beacon.claimed_position =
        sender.strategy ? apply(*sender.strategy, sender.true_position, rng_)
                        : sender.true_position;
    beacon.neighbor_ids.reserve(sender.table.size());
    for (const auto& [id, entry] : sender.table) beacon.neighbor_ids.push_back(id);
    sender.next_beacon_tick += ticks_per_beacon_;
    return beacon;
}

void World::deliver(const Beacon& beacon, std::size_t sender_index) {
    const VehicleState& sender = vehicles_[sender_index];
    for (std::size_t i = 0; i < vehicles_.size(); ++i) {
        if (i == sender_index) continue;
        VehicleState& receiver = vehicles_[i];
        const double dist = distance(receiver.true_position, sender.true_position);
        const double p = config_.radio.reception_probability(dist);
        const bool received = p >= 1.0 || (p > 0.0 && rng_.bernoulli(p));
        if (!received) continue;

        prune_table(receiver.table);
        const Evidence evidence{beacon.sender_id, beacon.claimed_position,
                                receiver.true_position, &receiver.table, now()};

        const bool art = art_binary(evidence, config_.eart.threshold_theta);
        const Opinion eart = eart_opinion(evidence, config_.eart);
        const ExchangeSamples samples = exchange_samples(evidence, config_.exchange);
        const Opinion exchange =
            exchange_opinion(samples.benign, samples.total, config_.exchange);
        const Verdict verdict =
            assess(art, eart, exchange, config_.decision_threshold);

        if (observer_) {
            observer_(VerdictRecord{now(), beacon.sender_id, receiver.id, dist,
                                    claimed_distance(evidence), sender.is_attacker,
                                    verdict});
        }

        // Store what was claimed, attacker lies included; detection already
        // ran on the pre-update snapshot. With the exchange disabled, tables
        // stay empty and every exchange opinion is vacuous.
        if (config_.exchange_enabled) {
            receiver.table[beacon.sender_id] =
                NeighborEntry{beacon.claimed_position, beacon.timestamp,
                              beacon.neighbor_ids};
        }
    }
}

void World::step() {
    ++tick_;

    for (VehicleState& v : vehicles_) move_vehicle(v);
    std::erase_if(vehicles_, [&](const VehicleState& v) {
        return !config_.bounds().contains(v.true_position);
    });

    const int arrivals =
        rng_.poisson(config_.resolved_arrival_rate() * config_.time_step);
    for (int i = 0; i < arrivals; ++i) spawn_vehicle();

    // Emit first so every beacon in this tick is built from pre-tick tables,
    // then deliver in sender order.
    std::vector<std::pair<std::size_t, Beacon>> due;
    for (std::size_t i = 0; i < vehicles_.size(); ++i) {
        if (vehicles_[i].next_beacon_tick <= tick_) {
            due.emplace_back(i, build_beacon(vehicles_[i]));
        }
    }
    for (const auto& [sender_index, beacon] : due) deliver(beacon, sender_index);
}

void World::run() {
    const auto ticks = std::llround(config_.duration / config_.time_step);
    for (std::int64_t i = 0; i < ticks; ++i) step();
}

double World::realized_attacker_fraction() const {
    if (total_spawned_ == 0) return 0.0;
    return static_cast<double>(attackers_spawned_) /
           static_cast<double>(total_spawned_);
}

}  // namespace vanetsl
