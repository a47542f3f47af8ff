#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "vanetsl/fusion.hpp"
#include "vanetsl/world.hpp"

namespace vanetsl {

// Per-message confusion counts for one detector.
struct DetectorCounts {
    std::uint64_t received_benign = 0;
    std::uint64_t received_malicious = 0;
    std::uint64_t flagged_of_benign = 0;     // false positives
    std::uint64_t flagged_of_malicious = 0;  // true positives

    bool operator==(const DetectorCounts&) const = default;
};

// Counts for all four detector labels, indexed by DetectorIndex.
struct ConfusionCounts {
    std::array<DetectorCounts, 4> per_detector;

    DetectorCounts& operator[](DetectorIndex d) { return per_detector[d]; }
    const DetectorCounts& operator[](DetectorIndex d) const {
        return per_detector[d];
    }
    bool operator==(const ConfusionCounts&) const = default;
};

// Folds verdict records into counts as they arrive.
void accumulate(ConfusionCounts& counts, const VerdictRecord& record);

// flagged benign / received benign; 0 for an empty denominator.
double fp_rate(const DetectorCounts& counts);

// unflagged malicious / received malicious; 0 for an empty denominator.
double fn_rate(const DetectorCounts& counts);

// 1 - fn_rate, undefined (blank in CSV) when no malicious message arrived.
std::optional<double> tp_rate(const DetectorCounts& counts);

struct RunResult {
    std::string param_name = "none";
    std::string param_value = "-";
    std::uint64_t seed = 0;
    std::uint32_t total_spawned = 0;
    std::uint32_t attackers_spawned = 0;
    double realized_attacker_fraction = 0.0;
    ConfusionCounts counts;
};

// One parameter point summarized over its repetitions. Rates are averages
// of the per-run rates weighted by the relevant denominator counts (benign
// messages for FP, malicious for TP/FN), which equals the pooled ratio.
struct AggregateResult {
    std::string param_name;
    std::string param_value;
    std::size_t runs = 0;
    double mean_realized_attacker_fraction = 0.0;
    struct PerDetector {
        std::uint64_t received_benign = 0;
        std::uint64_t received_malicious = 0;
        double fp = 0.0;
        double fn = 0.0;
        std::optional<double> tp;
    };
    std::array<PerDetector, 4> per_detector;
};

// Requires at least one run; all runs must share the parameter point.
AggregateResult aggregate(std::span<const RunResult> results);

}  // namespace vanetsl
