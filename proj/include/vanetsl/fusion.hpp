#pragma once

#include <array>
#include <span>
#include <string_view>

#include "vanetsl/opinion.hpp"

namespace vanetsl {

enum class Classification { Benign, Malicious };

// Detector labels as they appear in CSV output, in fixed column order.
inline constexpr std::array<std::string_view, 4> kDetectorLabels = {
    "ART", "eART", "Exchange", "Merged"};

enum DetectorIndex { kArt = 0, kEart = 1, kExchange = 2, kMerged = 3 };

// Cumulative fusion of the per-beacon detector opinions, in the fixed
// order they were produced. Requires at least one opinion.
Opinion merge(std::span<const Opinion> opinions);

// Accuse iff the projected probability falls strictly below the decision
// threshold; ties stay benign, so the vacuous opinion never accuses.
Classification classify(const Opinion& op, double decision_threshold = 0.5);

Classification classify_binary(bool flagged);

// Per-received-beacon outcome of all detectors plus the fused result.
struct Verdict {
    bool art_flag = false;
    Opinion eart;
    Opinion exchange;
    Opinion merged;
    double eart_expectation = 0.5;
    double exchange_expectation = 0.5;
    double merged_expectation = 0.5;
    std::array<Classification, 4> classification = {
        Classification::Benign, Classification::Benign, Classification::Benign,
        Classification::Benign};

    bool flagged(DetectorIndex d) const {
        return classification[d] == Classification::Malicious;
    }
};

// Builds the verdict: merges [eART, Exchange] and classifies every detector
// against the common decision threshold.
Verdict assess(bool art_flag, const Opinion& eart, const Opinion& exchange,
               double decision_threshold = 0.5);

}  // namespace vanetsl
