#include "vanetsl/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace vanetsl {

namespace {

std::string trim(std::string_view s) {
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    while (first < last && std::isspace(static_cast<unsigned char>(*first))) ++first;
    while (last > first && std::isspace(static_cast<unsigned char>(last[-1]))) --last;
    return std::string(first, last);
}

[[noreturn]] void fail(const std::string& where, const std::string& message) {
    throw ConfigError(where + ": " + message);
}

double parse_double(const std::string& where, const std::string& value) {
    double out = 0.0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end || !std::isfinite(out)) {
        fail(where, "expected a number, got '" + value + "'");
    }
    return out;
}

std::int64_t parse_int(const std::string& where, const std::string& value) {
    std::int64_t out = 0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        fail(where, "expected an integer, got '" + value + "'");
    }
    return out;
}

bool parse_bool(const std::string& where, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no" || value == "off") {
        return false;
    }
    fail(where, "expected a boolean, got '" + value + "'");
}

Density parse_density(const std::string& where, const std::string& value) {
    if (value == "low") return Density::Low;
    if (value == "medium") return Density::Medium;
    if (value == "high") return Density::High;
    fail(where, "density must be low, medium or high, got '" + value + "'");
}

std::vector<std::string> split_csv(const std::string& value) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) parts.push_back(trim(item));
    return parts;
}

const std::vector<std::string> kSweepableParams = {
    "art_threshold",        "exchange_threshold", "sigma",
    "attacker_probability", "density",            "strategy"};

constexpr double kPaperAttackerProbabilities[] = {0.01, 0.1, 0.2, 0.3};

bool in_paper_set(double p) {
    return std::any_of(std::begin(kPaperAttackerProbabilities),
                       std::end(kPaperAttackerProbabilities),
                       [&](double v) { return std::abs(p - v) <= 1e-12; });
}

// Parse state: remembers where each key was set so cross-field checks can
// still point at a line.
struct ParseState {
    ParsedConfig result;
    std::string strategy_text;
    std::string strategy_where;
    std::string sweep_values_raw;
    std::map<std::string, std::string> where_set;

    void remember(const std::string& key, const std::string& where) {
        where_set[key] = where;
    }
    std::string where_of(const std::string& key) const {
        const auto it = where_set.find(key);
        return it == where_set.end() ? "config" : it->second;
    }
};

using KeyHandler =
    std::function<void(ParseState&, const std::string& where, const std::string&)>;

const std::map<std::string, KeyHandler>& handlers() {
    static const std::map<std::string, KeyHandler> table = {
        {"world_size",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.world_size = parse_double(w, v);
         }},
        {"grid_spacing",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.grid_spacing = parse_double(w, v);
         }},
        {"density",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.density = parse_density(w, v);
         }},
        {"arrival_rate",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.arrival_rate = parse_double(w, v);
             if (st.result.scenario.arrival_rate < 0.0) {
                 fail(w, "arrival_rate must be >= 0");
             }
         }},
        {"initial_vehicles",
         [](ParseState& st, const std::string& w, const std::string& v) {
             const auto n = parse_int(w, v);
             if (n < 0) fail(w, "initial_vehicles must be >= 0");
             st.result.scenario.initial_vehicles = static_cast<int>(n);
         }},
        {"attacker_probability",
         [](ParseState& st, const std::string& w, const std::string& v) {
             const double p = parse_double(w, v);
             if (p < 0.0 || p > 1.0) fail(w, "attacker_probability outside [0, 1]");
             st.result.scenario.attacker_probability = p;
         }},
        {"strategy",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.strategy_text = v;
             st.strategy_where = w;
         }},
        {"duration",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.duration = parse_double(w, v);
             if (st.result.scenario.duration <= 0.0) fail(w, "duration must be > 0");
         }},
        {"time_step",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.time_step = parse_double(w, v);
             if (st.result.scenario.time_step <= 0.0) fail(w, "time_step must be > 0");
         }},
        {"beacon_rate",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.beacon_rate = parse_double(w, v);
             if (st.result.scenario.beacon_rate <= 0.0) {
                 fail(w, "beacon_rate must be > 0");
             }
         }},
        {"speed_min",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.speed_min = parse_double(w, v);
             if (st.result.scenario.speed_min < 0.0) fail(w, "speed_min must be >= 0");
         }},
        {"speed_max",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.speed_max = parse_double(w, v);
             if (st.result.scenario.speed_max <= 0.0) fail(w, "speed_max must be > 0");
         }},
        {"r_full",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.radio.r_full = parse_double(w, v);
             if (st.result.scenario.radio.r_full <= 0.0) fail(w, "r_full must be > 0");
         }},
        {"r_cut",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.radio.r_cut = parse_double(w, v);
             if (st.result.scenario.radio.r_cut <= 0.0) fail(w, "r_cut must be > 0");
         }},
        {"radio_falloff",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.radio.falloff = parse_double(w, v);
             if (st.result.scenario.radio.falloff <= 0.0) {
                 fail(w, "radio_falloff must be > 0");
             }
         }},
        {"art_threshold",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.eart.threshold_theta = parse_double(w, v);
             if (st.result.scenario.eart.threshold_theta <= 0.0) {
                 fail(w, "art_threshold must be > 0");
             }
         }},
        {"sigma",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.eart.sigma = parse_double(w, v);
             if (st.result.scenario.eart.sigma <= 0.0) fail(w, "sigma must be > 0");
         }},
        {"exchange_threshold",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.exchange.distance_threshold = parse_double(w, v);
             if (st.result.scenario.exchange.distance_threshold <= 0.0) {
                 fail(w, "exchange_threshold must be > 0");
             }
         }},
        {"exchange_decay",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.exchange.decay_constant = parse_double(w, v);
             if (st.result.scenario.exchange.decay_constant <= 0.0) {
                 fail(w, "exchange_decay must be > 0");
             }
         }},
        {"table_ttl",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.exchange.table_ttl = parse_double(w, v);
             if (st.result.scenario.exchange.table_ttl <= 0.0) {
                 fail(w, "table_ttl must be > 0");
             }
         }},
        {"exchange_contradiction_radius",
         [](ParseState& st, const std::string& w, const std::string& v) {
             // 0 disables the contradiction channel.
             st.result.scenario.exchange.contradiction_radius = parse_double(w, v);
             if (st.result.scenario.exchange.contradiction_radius < 0.0) {
                 fail(w, "exchange_contradiction_radius must be >= 0");
             }
         }},
        {"decision_threshold",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.decision_threshold = parse_double(w, v);
             const double t = st.result.scenario.decision_threshold;
             if (!(t > 0.0 && t < 1.0)) fail(w, "decision_threshold outside (0, 1)");
         }},
        {"exchange_enabled",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.exchange_enabled = parse_bool(w, v);
         }},
        {"strict_paper",
         [](ParseState& st, const std::string& w, const std::string& v) {
             st.result.scenario.strict_paper = parse_bool(w, v);
         }},
        {"seed",
         [](ParseState& st, const std::string& w, const std::string& v) {
             const auto s = parse_int(w, v);
             if (s < 0) fail(w, "seed must be >= 0");
             st.result.scenario.seed = static_cast<std::uint64_t>(s);
         }},
        {"repetitions",
         [](ParseState& st, const std::string& w, const std::string& v) {
             const auto n = parse_int(w, v);
             if (n < 1) fail(w, "repetitions must be >= 1");
             st.result.repetitions = static_cast<int>(n);
         }},
        {"sweep_param",
         [](ParseState& st, const std::string& w, const std::string& v) {
             if (std::find(kSweepableParams.begin(), kSweepableParams.end(), v) ==
                 kSweepableParams.end()) {
                 fail(w, "sweep_param must be one of art_threshold, "
                         "exchange_threshold, sigma, attacker_probability, "
                         "density, strategy");
             }
             if (!st.result.sweep) st.result.sweep.emplace();
             st.result.sweep->param = v;
         }},
        {"sweep_values",
         [](ParseState& st, const std::string& w, const std::string& v) {
             if (!st.result.sweep) st.result.sweep.emplace();
             st.result.sweep->values = split_csv(v);
             if (st.result.sweep->values.empty()) {
                 fail(w, "sweep_values must list at least one value");
             }
         }},
    };
    return table;
}

void apply_key(ParseState& state, const std::string& where, const std::string& key,
               const std::string& value) {
    const auto it = handlers().find(key);
    if (it == handlers().end()) fail(where, "unknown key '" + key + "'");
    it->second(state, where, value);
    state.remember(key, where);
}

void finalize(ParseState& state) {
    ScenarioConfig& sc = state.result.scenario;
    if (!state.strategy_text.empty()) {
        try {
            sc.strategy = parse_strategy(state.strategy_text, sc.bounds());
        } catch (const std::invalid_argument& e) {
            fail(state.strategy_where, e.what());
        }
    }
    if (sc.radio.r_full >= sc.radio.r_cut) {
        fail(state.where_of("r_full"), "r_full must be smaller than r_cut");
    }
    if (sc.speed_min > sc.speed_max) {
        fail(state.where_of("speed_min"), "speed_min must not exceed speed_max");
    }
    if (sc.grid_spacing > sc.world_size) {
        fail(state.where_of("grid_spacing"),
             "grid_spacing must not exceed world_size");
    }
    if (std::llround(1.0 / (sc.beacon_rate * sc.time_step)) < 1) {
        fail(state.where_of("beacon_rate"),
             "beacon interval must be at least one time step");
    }
    if (sc.strict_paper && !in_paper_set(sc.attacker_probability)) {
        fail(state.where_of("attacker_probability"),
             "strict_paper restricts attacker_probability to 0.01, 0.1, 0.2, 0.3");
    }
    if (state.result.sweep) {
        if (state.result.sweep->param.empty()) {
            fail(state.where_of("sweep_values"), "sweep_values without sweep_param");
        }
        if (state.result.sweep->values.empty()) {
            fail(state.where_of("sweep_param"), "sweep_param without sweep_values");
        }
    }
}

void parse_lines(ParseState& state, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::string where = "line " + std::to_string(line_no);
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            fail(where, "expected key=value, got '" + stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) fail(where, "empty key");
        apply_key(state, where, key, value);
    }
}

}  // namespace

ParsedConfig parse_config(const std::string& text) {
    ParseState state;
    parse_lines(state, text);
    finalize(state);
    return state.result;
}

ParsedConfig load_config(const std::string& path, bool apply_env) {
    std::string text;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    ParseState state;
    parse_lines(state, text);
    if (apply_env) {
        // Env overrides layer on top of the file, before cross-field checks.
        for (const auto& [key, handler] : handlers()) {
            std::string var = "VANETSL_";
            for (char c : key) {
                var.push_back(
                    static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            }
            if (const char* value = std::getenv(var.c_str())) {
                apply_key(state, "env " + var, key, value);
            }
        }
    }
    finalize(state);
    return state.result;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    keys.reserve(handlers().size());
    for (const auto& [key, handler] : handlers()) keys.push_back(key);
    return keys;
}

}  // namespace vanetsl
