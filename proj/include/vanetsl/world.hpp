#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vanetsl/attackers.hpp"
#include "vanetsl/detectors.hpp"
#include "vanetsl/fusion.hpp"
#include "vanetsl/geometry.hpp"
#include "vanetsl/rng.hpp"

namespace vanetsl {

enum class Density { Low, Medium, High };

// Distance-based reception curve: certain reception up to r_full, no
// reception beyond r_cut, and a complementary Gaussian tail in between,
// normalized so the curve is continuous and hits 1/2 at the midpoint.
// falloff is the number of standard deviations between the midpoint and
// each boundary.
struct RadioModel {
    double r_full = 300.0;  // meters
    double r_cut = 500.0;   // meters
    double falloff = 3.0;

    double reception_probability(double dist) const;
};

struct ScenarioConfig {
    double world_size = 4000.0;    // square side, meters
    double grid_spacing = 500.0;   // meters between parallel roads
    Density density = Density::Medium;
    double arrival_rate = -1.0;    // vehicles/second; negative: density preset
    int initial_vehicles = -1;     // negative: density preset
    double attacker_probability = 0.1;
    Strategy strategy = FixedOffset{{300.0, 300.0}};
    double duration = 360.0;       // seconds
    double time_step = 0.1;        // seconds
    double beacon_rate = 1.0;      // Hz
    double speed_min = 8.0;        // m/s
    double speed_max = 14.0;       // m/s
    RadioModel radio;
    EartConfig eart;               // threshold_theta doubles as the ART threshold
    ExchangeConfig exchange;
    double decision_threshold = 0.5;
    bool exchange_enabled = true;
    bool strict_paper = false;
    std::uint64_t seed = 1;

    double resolved_arrival_rate() const;
    int resolved_initial_vehicles() const;
    Rect bounds() const { return {{0.0, 0.0}, {world_size, world_size}}; }
};

struct VehicleState {
    VehicleId id = 0;
    Vec2 true_position;
    Vec2 velocity;  // axis-aligned: vehicles travel on grid roads
    bool is_attacker = false;
    std::optional<Strategy> strategy;
    std::int64_t next_beacon_tick = 0;
    NeighborTable table;

    bool operator==(const VehicleState&) const = default;
};

struct Beacon {
    VehicleId sender_id = 0;
    Vec2 claimed_position;
    double timestamp = 0.0;
    std::vector<VehicleId> neighbor_ids;  // fresh table keys, never the sender
};

// One received beacon, fully judged: detector outcomes plus ground truth.
struct VerdictRecord {
    double time = 0.0;
    VehicleId sender_id = 0;
    VehicleId receiver_id = 0;
    double true_distance = 0.0;
    double claimed_distance = 0.0;
    bool sender_is_attacker = false;
    Verdict verdict;
};

using VerdictObserver = std::function<void(const VerdictRecord&)>;

// Discrete-time beaconing world. Per tick: vehicles advance along the road
// grid (turning uniformly at random at intersections, departing when they
// leave the bounds), Poisson arrivals spawn, due beacons are built from the
// senders' pre-tick tables, and each beacon is delivered independently to
// every receiver the radio model reaches. Detection always runs on the
// receiver's table as it stood before the beacon; the claimed data is
// stored afterwards, lies included. Everything is driven by one seeded rng
// in a fixed order, so a config replays bit-identically.
class World {
public:
    explicit World(const ScenarioConfig& config);

    void set_observer(VerdictObserver observer) { observer_ = std::move(observer); }

    // Places a vehicle explicitly (position on a grid road, axis-aligned
    // velocity); the id is assigned by the world. Useful for small
    // hand-built scenes.
    VehicleId add_vehicle(VehicleState vehicle);

    void step();
    void run();  // duration / time_step ticks

    std::int64_t tick() const { return tick_; }
    double now() const { return static_cast<double>(tick_) * config_.time_step; }
    const std::vector<VehicleState>& vehicles() const { return vehicles_; }
    const ScenarioConfig& config() const { return config_; }
    std::uint32_t total_spawned() const { return total_spawned_; }
    std::uint32_t attackers_spawned() const { return attackers_spawned_; }
    double realized_attacker_fraction() const;

private:
    void spawn_vehicle();
    void move_vehicle(VehicleState& vehicle);
    void turn_at_intersection(VehicleState& vehicle);
    void prune_table(NeighborTable& table) const;
    Beacon build_beacon(VehicleState& sender);
    void deliver(const Beacon& beacon, std::size_t sender_index);

    ScenarioConfig config_;
    Rng rng_;
    std::vector<VehicleState> vehicles_;
    std::int64_t tick_ = 0;
    std::int64_t ticks_per_beacon_ = 10;
    VehicleId next_id_ = 1;
    std::uint32_t total_spawned_ = 0;
    std::uint32_t attackers_spawned_ = 0;
    VerdictObserver observer_;
};

}  // namespace vanetsl
