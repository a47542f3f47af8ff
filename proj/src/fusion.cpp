#include "vanetsl/fusion.hpp"

#include <stdexcept>

namespace vanetsl {

Opinion merge(std::span<const Opinion> opinions) {
    if (opinions.empty()) {
        throw std::invalid_argument("merge requires at least one opinion");
    }
    return fuse_all(opinions);
}

Classification classify(const Opinion& op, double decision_threshold) {
    if (!(decision_threshold > 0.0 && decision_threshold < 1.0)) {
        throw std::invalid_argument("decision threshold must be in (0, 1)");
    }
    return expectation(op) < decision_threshold ? Classification::Malicious
                                                : Classification::Benign;
}

Classification classify_binary(bool flagged) {
    return flagged ? Classification::Malicious : Classification::Benign;
}

Verdict assess(bool art_flag, const Opinion& eart, const Opinion& exchange,
               double decision_threshold) {
    Verdict v;
    v.art_flag = art_flag;
    v.eart = eart;
    v.exchange = exchange;
    const Opinion both[] = {eart, exchange};
    v.merged = merge(both);
    v.eart_expectation = expectation(eart);
    v.exchange_expectation = expectation(exchange);
    v.merged_expectation = expectation(v.merged);
    v.classification[kArt] = classify_binary(art_flag);
    v.classification[kEart] = classify(eart, decision_threshold);
    v.classification[kExchange] = classify(exchange, decision_threshold);
    v.classification[kMerged] = classify(v.merged, decision_threshold);
    return v;
}

}  // namespace vanetsl
