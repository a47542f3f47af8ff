#pragma once

#include <string>
#include <vector>

#include "vanetsl/sweep.hpp"

namespace vanetsl {

// Named sweep presets, one per evaluation figure. A preset may expand to
// several sweeps (e.g. the parameter-calibration figure sweeps three
// different knobs); each produces its own pair of CSV files. The preset
// inherits the supplied base scenario and overrides only what the figure
// pins down.
std::vector<SweepSpec> preset_sweeps(const std::string& name,
                                     const ScenarioConfig& base,
                                     int repetitions_override = -1);

std::vector<std::string> preset_names();

}  // namespace vanetsl
