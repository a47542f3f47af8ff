#include "vanetsl/metrics.hpp"

#include <stdexcept>

namespace vanetsl {

void accumulate(ConfusionCounts& counts, const VerdictRecord& record) {
    for (int d = 0; d < 4; ++d) {
        DetectorCounts& c = counts.per_detector[static_cast<std::size_t>(d)];
        const bool flagged = record.verdict.flagged(static_cast<DetectorIndex>(d));
        if (record.sender_is_attacker) {
            ++c.received_malicious;
            if (flagged) ++c.flagged_of_malicious;
        } else {
            ++c.received_benign;
            if (flagged) ++c.flagged_of_benign;
        }
    }
}

double fp_rate(const DetectorCounts& counts) {
    if (counts.received_benign == 0) return 0.0;
    return static_cast<double>(counts.flagged_of_benign) /
           static_cast<double>(counts.received_benign);
}

double fn_rate(const DetectorCounts& counts) {
    if (counts.received_malicious == 0) return 0.0;
    return static_cast<double>(counts.received_malicious -
                               counts.flagged_of_malicious) /
           static_cast<double>(counts.received_malicious);
}

std::optional<double> tp_rate(const DetectorCounts& counts) {
    if (counts.received_malicious == 0) return std::nullopt;
    return 1.0 - fn_rate(counts);
}

AggregateResult aggregate(std::span<const RunResult> results) {
    if (results.empty()) {
        throw std::invalid_argument("aggregate requires at least one run");
    }
    AggregateResult agg;
    agg.param_name = results.front().param_name;
    agg.param_value = results.front().param_value;
    agg.runs = results.size();

    double fraction_sum = 0.0;
    std::array<double, 4> fp_weighted{};
    std::array<double, 4> fn_weighted{};
    std::array<std::uint64_t, 4> benign_total{};
    std::array<std::uint64_t, 4> malicious_total{};

    for (const RunResult& run : results) {
        if (run.param_name != agg.param_name || run.param_value != agg.param_value) {
            throw std::invalid_argument("aggregate runs span parameter points");
        }
        fraction_sum += run.realized_attacker_fraction;
        for (std::size_t d = 0; d < 4; ++d) {
            const DetectorCounts& c = run.counts.per_detector[d];
            fp_weighted[d] += fp_rate(c) * static_cast<double>(c.received_benign);
            fn_weighted[d] += fn_rate(c) * static_cast<double>(c.received_malicious);
            benign_total[d] += c.received_benign;
            malicious_total[d] += c.received_malicious;
        }
    }

    agg.mean_realized_attacker_fraction =
        fraction_sum / static_cast<double>(results.size());
    for (std::size_t d = 0; d < 4; ++d) {
        auto& out = agg.per_detector[d];
        out.received_benign = benign_total[d];
        out.received_malicious = malicious_total[d];
        out.fp = benign_total[d] == 0
                     ? 0.0
                     : fp_weighted[d] / static_cast<double>(benign_total[d]);
        out.fn = malicious_total[d] == 0
                     ? 0.0
                     : fn_weighted[d] / static_cast<double>(malicious_total[d]);
        if (malicious_total[d] > 0) out.tp = 1.0 - out.fn;
    }
    return agg;
}

}  // namespace vanetsl
