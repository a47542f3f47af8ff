#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "vanetsl/config.hpp"
#include "vanetsl/metrics.hpp"
#include "vanetsl/world.hpp"

namespace vanetsl {

enum class SweepParam {
    None,
    ArtThreshold,
    ExchangeThreshold,
    Sigma,
    AttackerProbability,
    Density,
    Strategy,
};

SweepParam sweep_param_from_name(const std::string& name);
std::string sweep_param_name(SweepParam param);

// Overrides one scenario field with a swept value (text form, as it will
// appear in the param_value CSV column). Throws ConfigError on bad values.
void apply_param(ScenarioConfig& config, SweepParam param, const std::string& value);

// One sweep: a base scenario, a swept parameter with its value list, and a
// repetition count per value. Seeds are base.seed + run index, where runs
// enumerate value-major, repetition-minor.
struct SweepSpec {
    std::string name = "run";
    SweepParam param = SweepParam::None;
    std::vector<std::string> values = {"-"};
    int repetitions = 1;
    ScenarioConfig base;
};

struct SweepOutput {
    std::vector<RunResult> raw;               // ordered by (value index, seed)
    std::vector<AggregateResult> aggregates;  // one per value
};

struct SweepOptions {
    int jobs = 1;
    std::string eventlog_dir;  // empty: no event logs
};

// CSV observer for --emit-eventlog and for the metrics recount oracle:
// one line per reception.
class EventLogWriter {
public:
    explicit EventLogWriter(const std::string& path);

    void operator()(const VerdictRecord& record);

    static std::string header();

private:
    std::ofstream out_;
};

// Runs one scenario to completion and folds the verdicts into counts.
// The observer, when given, sees every verdict record as well.
RunResult run_single(const ScenarioConfig& config, std::uint64_t seed,
                     const std::string& param_name = "none",
                     const std::string& param_value = "-",
                     const VerdictObserver& observer = {});

// Executes every run of the sweep (optionally on several threads) and
// aggregates per parameter value. Output order does not depend on jobs.
SweepOutput execute_sweep(const SweepSpec& spec, const SweepOptions& options = {});

// Exact CSV column layouts.
std::string raw_csv_header();
std::string aggregate_csv_header();
std::string raw_csv_row(const RunResult& run);
std::string aggregate_csv_row(const AggregateResult& agg);

// execute_sweep plus `<name>_raw.csv` / `<name>_aggregate.csv` under
// out_dir. Throws std::ios_base::failure on I/O errors.
SweepOutput run_sweep(const SweepSpec& spec, const std::string& out_dir,
                      const SweepOptions& options = {});

// Builds the SweepSpec a parsed config describes (a degenerate single-point
// sweep when no sweep_param was given).
SweepSpec sweep_from_config(const ParsedConfig& parsed, const std::string& name);

}  // namespace vanetsl
