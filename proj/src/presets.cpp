#include "vanetsl/presets.hpp"

namespace vanetsl {

namespace {

const std::vector<std::string> kFractionValues = {"0.01", "0.1", "0.2", "0.3"};

SweepSpec make(const std::string& name, SweepParam param,
               std::vector<std::string> values, int repetitions,
               ScenarioConfig base) {
    SweepSpec spec;
    spec.name = name;
    spec.param = param;
    spec.values = std::move(values);
    spec.repetitions = repetitions;
    spec.base = base;
    return spec;
}

// Calibration sweeps: low density, a fixed (300,300) attacker, detector
// parameter varied one at a time, 5 repetitions per point.
std::vector<SweepSpec> fig_parameters(ScenarioConfig base, int reps) {
    base.density = Density::Low;
    base.strategy = FixedOffset{{300.0, 300.0}};
    if (reps < 1) reps = 5;
    return {
        make("fig_parameters_art_threshold", SweepParam::ArtThreshold,
             {"250", "300", "350", "400", "450", "500"}, reps, base),
        make("fig_parameters_exchange_threshold", SweepParam::ExchangeThreshold,
             {"200", "250", "300", "350", "400", "450"}, reps, base),
        make("fig_parameters_sigma", SweepParam::Sigma,
             {"25", "50", "75", "100", "125", "150"}, reps, base),
    };
}

// Random-position attackers at low and high density, attacker fraction on
// the x axis, one run per point.
std::vector<SweepSpec> fig_random(ScenarioConfig base, int reps) {
    base.strategy = RandomPosition{base.bounds()};
    if (reps < 1) reps = 1;
    ScenarioConfig low = base;
    low.density = Density::Low;
    ScenarioConfig high = base;
    high.density = Density::High;
    return {
        make("fig_random_low", SweepParam::AttackerProbability, kFractionValues,
             reps, low),
        make("fig_random_high", SweepParam::AttackerProbability, kFractionValues,
             reps, high),
    };
}

// Random-offset attackers at the two square sizes the fixed strategy uses
// as extremes.
std::vector<SweepSpec> fig_random_offset(ScenarioConfig base, int reps) {
    if (reps < 1) reps = 1;
    ScenarioConfig wide = base;
    wide.strategy = RandomOffset{300.0};
    ScenarioConfig narrow = base;
    narrow.strategy = RandomOffset{50.0};
    return {
        make("fig_random_offset_300", SweepParam::AttackerProbability,
             kFractionValues, reps, wide),
        make("fig_random_offset_50", SweepParam::AttackerProbability,
             kFractionValues, reps, narrow),
    };
}

// Fixed-offset attackers, easy (300,300) and hard (50,50) extremes.
std::vector<SweepSpec> fig_fixed_offset(ScenarioConfig base, int reps) {
    if (reps < 1) reps = 1;
    ScenarioConfig easy = base;
    easy.strategy = FixedOffset{{300.0, 300.0}};
    ScenarioConfig hard = base;
    hard.strategy = FixedOffset{{50.0, 50.0}};
    return {
        make("fig_fixed_offset_300", SweepParam::AttackerProbability,
             kFractionValues, reps, easy),
        make("fig_fixed_offset_50", SweepParam::AttackerProbability,
             kFractionValues, reps, hard),
    };
}

}  // namespace

std::vector<SweepSpec> preset_sweeps(const std::string& name,
                                     const ScenarioConfig& base,
                                     int repetitions_override) {
    if (name == "fig_parameters") return fig_parameters(base, repetitions_override);
    if (name == "fig_random") return fig_random(base, repetitions_override);
    if (name == "fig_random_offset") {
        return fig_random_offset(base, repetitions_override);
    }
    if (name == "fig_fixed_offset") {
        return fig_fixed_offset(base, repetitions_override);
    }
    throw ConfigError("unknown sweep preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    return {"fig_parameters", "fig_random", "fig_random_offset",
            "fig_fixed_offset"};
}

}  // namespace vanetsl
