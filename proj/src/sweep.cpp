#include "vanetsl/sweep.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <span>
#include <thread>

namespace vanetsl {

namespace {

double parse_value(const std::string& value, const std::string& what) {
    double out = 0.0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("bad " + what + " sweep value '" + value + "'");
    }
    return out;
}

std::string format_rate(double rate) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", rate);
    return buf;
}

std::string format_rate(const std::optional<double>& rate) {
    return rate ? format_rate(*rate) : std::string{};
}

std::string sanitize(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    }
    return out;
}

}  // namespace

SweepParam sweep_param_from_name(const std::string& name) {
    if (name == "art_threshold") return SweepParam::ArtThreshold;
    if (name == "exchange_threshold") return SweepParam::ExchangeThreshold;
    if (name == "sigma") return SweepParam::Sigma;
    if (name == "attacker_probability") return SweepParam::AttackerProbability;
    if (name == "density") return SweepParam::Density;
    if (name == "strategy") return SweepParam::Strategy;
    if (name == "none") return SweepParam::None;
    throw ConfigError("unknown sweep parameter '" + name + "'");
}

std::string sweep_param_name(SweepParam param) {
    switch (param) {
        case SweepParam::None: return "none";
        case SweepParam::ArtThreshold: return "art_threshold";
        case SweepParam::ExchangeThreshold: return "exchange_threshold";
        case SweepParam::Sigma: return "sigma";
        case SweepParam::AttackerProbability: return "attacker_probability";
        case SweepParam::Density: return "density";
        case SweepParam::Strategy: return "strategy";
    }
    throw std::logic_error("unreachable sweep param");
}

void apply_param(ScenarioConfig& config, SweepParam param,
                 const std::string& value) {
    switch (param) {
        case SweepParam::None:
            return;
        case SweepParam::ArtThreshold: {
            const double v = parse_value(value, "art_threshold");
            if (v <= 0.0) throw ConfigError("art_threshold must be > 0");
            config.eart.threshold_theta = v;
            return;
        }
        case SweepParam::ExchangeThreshold: {
            const double v = parse_value(value, "exchange_threshold");
            if (v <= 0.0) throw ConfigError("exchange_threshold must be > 0");
            config.exchange.distance_threshold = v;
            return;
        }
        case SweepParam::Sigma: {
            const double v = parse_value(value, "sigma");
            if (v <= 0.0) throw ConfigError("sigma must be > 0");
            config.eart.sigma = v;
            return;
        }
        case SweepParam::AttackerProbability: {
            const double v = parse_value(value, "attacker_probability");
            if (v < 0.0 || v > 1.0) {
                throw ConfigError("attacker_probability outside [0, 1]");
            }
            config.attacker_probability = v;
            return;
        }
        case SweepParam::Density: {
            if (value == "low") {
                config.density = Density::Low;
            } else if (value == "medium") {
                config.density = Density::Medium;
            } else if (value == "high") {
                config.density = Density::High;
            } else {
                throw ConfigError("density sweep value must be low, medium or high");
            }
            return;
        }
        case SweepParam::Strategy:
            config.strategy = parse_strategy(value, config.bounds());
            return;
    }
}

EventLogWriter::EventLogWriter(const std::string& path) : out_(path) {
    if (!out_) {
        throw std::ios_base::failure("cannot open event log '" + path + "'");
    }
    out_ << header() << '\n';
}

std::string EventLogWriter::header() {
    return "time,sender,receiver,true_dist,claimed_dist,is_attacker,art,"
           "eart_E,exch_E,merged_E,flagged_art,flagged_eart,flagged_exchange,"
           "flagged_merged";
}

void EventLogWriter::operator()(const VerdictRecord& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%.1f,%u,%u,%.3f,%.3f,%d,%d,%.6f,%.6f,%.6f,%d,%d,%d,%d",
                  r.time, r.sender_id, r.receiver_id, r.true_distance,
                  r.claimed_distance, r.sender_is_attacker ? 1 : 0,
                  r.verdict.art_flag ? 1 : 0, r.verdict.eart_expectation,
                  r.verdict.exchange_expectation, r.verdict.merged_expectation,
                  r.verdict.flagged(kArt) ? 1 : 0, r.verdict.flagged(kEart) ? 1 : 0,
                  r.verdict.flagged(kExchange) ? 1 : 0,
                  r.verdict.flagged(kMerged) ? 1 : 0);
    out_ << buf << '\n';
}

RunResult run_single(const ScenarioConfig& config, std::uint64_t seed,
                     const std::string& param_name, const std::string& param_value,
                     const VerdictObserver& observer) {
    ScenarioConfig run_config = config;
    run_config.seed = seed;

    RunResult result;
    result.param_name = param_name;
    result.param_value = param_value;
    result.seed = seed;

    World world(run_config);
    world.set_observer([&](const VerdictRecord& record) {
        accumulate(result.counts, record);
        if (observer) observer(record);
    });
    world.run();

    result.total_spawned = world.total_spawned();
    result.attackers_spawned = world.attackers_spawned();
    result.realized_attacker_fraction = world.realized_attacker_fraction();
    return result;
}

SweepOutput execute_sweep(const SweepSpec& spec, const SweepOptions& options) {
    if (spec.values.empty()) throw ConfigError("sweep has no values");
    if (spec.repetitions < 1) throw ConfigError("sweep repetitions must be >= 1");

    const std::string param_name = sweep_param_name(spec.param);
    struct Task {
        std::string value;
        std::uint64_t seed;
        ScenarioConfig config;
    };
    std::vector<Task> tasks;
    tasks.reserve(spec.values.size() * static_cast<std::size_t>(spec.repetitions));
    std::uint64_t run_index = 0;
    for (const std::string& value : spec.values) {
        ScenarioConfig config = spec.base;
        apply_param(config, spec.param, value);
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            tasks.push_back(Task{value, spec.base.seed + run_index, config});
            ++run_index;
        }
    }

    std::vector<RunResult> raw(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mutex;

    const auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || failed.load()) break;
            const Task& task = tasks[i];
            try {
                std::optional<EventLogWriter> log;
                if (!options.eventlog_dir.empty()) {
                    log.emplace(options.eventlog_dir + "/" + spec.name + "_" +
                                sanitize(task.value) + "_seed" +
                                std::to_string(task.seed) + "_events.csv");
                }
                raw[i] = run_single(
                    task.config, task.seed, param_name, task.value,
                    log ? VerdictObserver(std::ref(*log)) : VerdictObserver{});
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed.store(true);
                if (error_message.empty()) error_message = e.what();
            }
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failed.load()) throw std::runtime_error(error_message);

    SweepOutput output;
    output.raw = std::move(raw);
    for (std::size_t v = 0; v < spec.values.size(); ++v) {
        const auto begin = static_cast<std::ptrdiff_t>(v * spec.repetitions);
        output.aggregates.push_back(
            aggregate(std::span<const RunResult>(output.raw)
                          .subspan(static_cast<std::size_t>(begin),
                                   static_cast<std::size_t>(spec.repetitions))));
    }
    return output;
}

std::string raw_csv_header() {
    return "detector,param_name,param_value,seed,realized_attacker_fraction,"
           "received_benign,received_malicious,fp_rate,tp_rate,fn_rate";
}

std::string aggregate_csv_header() {
    return "detector,param_name,param_value,realized_attacker_fraction,"
           "received_benign,received_malicious,fp_rate,tp_rate,fn_rate,runs,"
           "weighted";
}

std::string raw_csv_row(const RunResult& run) {
    std::string rows;
    for (std::size_t d = 0; d < kDetectorLabels.size(); ++d) {
        const DetectorCounts& c = run.counts.per_detector[d];
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s,%s,%s,%llu,%s,%llu,%llu,%s,%s,%s",
                      std::string(kDetectorLabels[d]).c_str(),
                      run.param_name.c_str(), run.param_value.c_str(),
                      static_cast<unsigned long long>(run.seed),
                      format_rate(run.realized_attacker_fraction).c_str(),
                      static_cast<unsigned long long>(c.received_benign),
                      static_cast<unsigned long long>(c.received_malicious),
                      format_rate(fp_rate(c)).c_str(),
                      format_rate(tp_rate(c)).c_str(),
                      format_rate(fn_rate(c)).c_str());
        rows += buf;
        rows += '\n';
    }
    return rows;
}

std::string aggregate_csv_row(const AggregateResult& agg) {
    std::string rows;
    for (std::size_t d = 0; d < kDetectorLabels.size(); ++d) {
        const auto& c = agg.per_detector[d];
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s,%s,%s,%s,%llu,%llu,%s,%s,%s,%zu,true",
                      std::string(kDetectorLabels[d]).c_str(),
                      agg.param_name.c_str(), agg.param_value.c_str(),
                      format_rate(agg.mean_realized_attacker_fraction).c_str(),
                      static_cast<unsigned long long>(c.received_benign),
                      static_cast<unsigned long long>(c.received_malicious),
                      format_rate(c.fp).c_str(), format_rate(c.tp).c_str(),
                      format_rate(c.fn).c_str(), agg.runs);
        rows += buf;
        rows += '\n';
    }
    return rows;
}

SweepOutput run_sweep(const SweepSpec& spec, const std::string& out_dir,
                      const SweepOptions& options) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::ios_base::failure("cannot create output directory '" + out_dir +
                                     "': " + ec.message());
    }
    SweepOptions run_options = options;
    if (!options.eventlog_dir.empty()) {
        std::filesystem::create_directories(options.eventlog_dir, ec);
        if (ec) {
            throw std::ios_base::failure("cannot create event log directory '" +
                                         options.eventlog_dir + "': " + ec.message());
        }
    }
    SweepOutput output = execute_sweep(spec, run_options);

    const std::string raw_path = out_dir + "/" + spec.name + "_raw.csv";
    std::ofstream raw(raw_path);
    if (!raw) throw std::ios_base::failure("cannot write '" + raw_path + "'");
    raw << raw_csv_header() << '\n';
    for (const RunResult& run : output.raw) raw << raw_csv_row(run);

    const std::string agg_path = out_dir + "/" + spec.name + "_aggregate.csv";
    std::ofstream agg(agg_path);
    if (!agg) throw std::ios_base::failure("cannot write '" + agg_path + "'");
    agg << aggregate_csv_header() << '\n';
    for (const AggregateResult& a : output.aggregates) agg << aggregate_csv_row(a);

    return output;
}

SweepSpec sweep_from_config(const ParsedConfig& parsed, const std::string& name) {
    SweepSpec spec;
    spec.name = name;
    spec.base = parsed.scenario;
    spec.repetitions = parsed.repetitions;
    if (parsed.sweep) {
        spec.param = sweep_param_from_name(parsed.sweep->param);
        spec.values = parsed.sweep->values;
        // Fail fast on unusable values before any run starts.
        for (const std::string& value : spec.values) {
            ScenarioConfig probe = spec.base;
            apply_param(probe, spec.param, value);
        }
    }
    return spec;
}

}  // namespace vanetsl
