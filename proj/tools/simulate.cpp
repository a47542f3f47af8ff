#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vanetsl/config.hpp"
#include "vanetsl/presets.hpp"
#include "vanetsl/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Discrete-time VANET beaconing simulator with subjective-logic "
        "position verification"};

    std::string config_path;
    std::string sweep_name;
    std::string out_dir = "out";
    int jobs = 1;
    std::int64_t seed_override = -1;
    bool emit_eventlog = false;

    app.add_option("--config", config_path,
                   "Scenario config file (key=value lines; every key can also "
                   "be set via VANETSL_<KEY> environment variables)");
    app.add_option("--sweep", sweep_name,
                   "Named sweep preset: fig_parameters, fig_random, "
                   "fig_random_offset, fig_fixed_offset");
    app.add_option("--out", out_dir, "Output directory for CSV files");
    app.add_option("--jobs", jobs, "Concurrent runs")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed_override, "Override the base seed");
    app.add_flag("--emit-eventlog", emit_eventlog,
                 "Write one CSV line per received beacon, per run");

    CLI11_PARSE(app, argc, argv);

    try {
        vanetsl::ParsedConfig parsed = vanetsl::load_config(config_path);
        if (seed_override >= 0) {
            parsed.scenario.seed = static_cast<std::uint64_t>(seed_override);
        }

        std::vector<vanetsl::SweepSpec> sweeps;
        if (!sweep_name.empty()) {
            sweeps = vanetsl::preset_sweeps(sweep_name, parsed.scenario);
        } else {
            sweeps.push_back(vanetsl::sweep_from_config(
                parsed, parsed.sweep ? "sweep_" + parsed.sweep->param : "run"));
        }

        vanetsl::SweepOptions options;
        options.jobs = jobs;
        if (emit_eventlog) options.eventlog_dir = out_dir;

        for (const vanetsl::SweepSpec& spec : sweeps) {
            vanetsl::run_sweep(spec, out_dir, options);
            std::printf("%s: %zu values x %d repetitions -> %s/%s_{raw,aggregate}.csv\n",
                        spec.name.c_str(), spec.values.size(), spec.repetitions,
                        out_dir.c_str(), spec.name.c_str());
        }
        return 0;
    } catch (const vanetsl::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
