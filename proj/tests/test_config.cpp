#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "vanetsl/config.hpp"

using namespace vanetsl;

namespace {

bool error_mentions(const std::string& text, const char* needle) {
    try {
        parse_config(text);
        return false;
    } catch (const ConfigError& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
}

}  // namespace

TEST_CASE("empty config yields every default") {
    const ParsedConfig parsed = parse_config("");
    const ScenarioConfig& sc = parsed.scenario;
    CHECK(sc.world_size == 4000.0);
    CHECK(sc.grid_spacing == 500.0);
    CHECK(sc.density == Density::Medium);
    CHECK(sc.attacker_probability == 0.1);
    CHECK(sc.duration == 360.0);
    CHECK(sc.time_step == 0.1);
    CHECK(sc.beacon_rate == 1.0);
    CHECK(sc.eart.threshold_theta == 400.0);
    CHECK(sc.eart.sigma == 100.0);
    CHECK(sc.exchange.distance_threshold == 350.0);
    CHECK(sc.exchange.decay_constant == 10.0);
    CHECK(sc.exchange.table_ttl == 3.0);
    CHECK(sc.exchange.contradiction_radius == 500.0);
    CHECK(sc.radio.r_full == 300.0);
    CHECK(sc.radio.r_cut == 500.0);
    CHECK(sc.decision_threshold == 0.5);
    CHECK(sc.exchange_enabled);
    CHECK_FALSE(sc.strict_paper);
    CHECK(sc.seed == 1);
    CHECK(parsed.repetitions == 1);
    CHECK_FALSE(parsed.sweep.has_value());
    CHECK(std::holds_alternative<FixedOffset>(sc.strategy));
}

TEST_CASE("comments, blanks and whitespace are tolerated") {
    const ParsedConfig parsed = parse_config(
        "# beaconing scenario\n"
        "\n"
        "  beacon_rate = 1  \n"
        "sigma=50\n");
    CHECK(parsed.scenario.beacon_rate == 1.0);
    CHECK(parsed.scenario.eart.sigma == 50.0);
}

TEST_CASE("strict paper mode gates the attacker probability set") {
    CHECK(parse_config("attacker_probability=0.4\n").scenario.attacker_probability ==
          0.4);
    CHECK(error_mentions("strict_paper=true\nattacker_probability=0.4\n",
                         "restricts attacker_probability"));
    // Order of lines must not matter.
    CHECK(error_mentions("attacker_probability=0.4\nstrict_paper=true\n",
                         "restricts attacker_probability"));
    const ParsedConfig ok =
        parse_config("strict_paper=true\nattacker_probability=0.2\n");
    CHECK(ok.scenario.attacker_probability == 0.2);
}

TEST_CASE("errors carry line numbers") {
    CHECK(error_mentions("sigma=100\nnot_a_key=5\n", "line 2"));
    CHECK(error_mentions("sigma=100\nnot_a_key=5\n", "unknown key"));
    CHECK(error_mentions("\n\nsigma=abc\n", "line 3"));
    CHECK(error_mentions("duration=-10\n", "line 1"));
    CHECK(error_mentions("r_full=600\n", "r_full must be smaller"));
    CHECK(error_mentions("sigma 100\n", "expected key=value"));
}

TEST_CASE("strategies parse with the final world bounds") {
    const ParsedConfig parsed =
        parse_config("strategy=random_position\nworld_size=2000\n");
    const auto& rp = std::get<RandomPosition>(parsed.scenario.strategy);
    CHECK(rp.area.max == Vec2{2000.0, 2000.0});

    CHECK(error_mentions("strategy=warp\n", "line 1"));
}

TEST_CASE("sweep keys") {
    const ParsedConfig parsed = parse_config(
        "sweep_param=sigma\n"
        "sweep_values=25, 50, 75, 100, 125, 150\n"
        "repetitions=5\n");
    REQUIRE(parsed.sweep.has_value());
    CHECK(parsed.sweep->param == "sigma");
    CHECK(parsed.sweep->values ==
          std::vector<std::string>{"25", "50", "75", "100", "125", "150"});
    CHECK(parsed.repetitions == 5);

    CHECK(error_mentions("sweep_values=1,2\n", "without sweep_param"));
    CHECK(error_mentions("sweep_param=sigma\n", "without sweep_values"));
    CHECK(error_mentions("sweep_param=voltage\n", "sweep_param must be"));
}

TEST_CASE("load_config reads files and applies env overrides") {
    const std::string path = "/tmp/vanetsl_test_config.txt";
    {
        std::ofstream out(path);
        out << "sigma=100\nseed=9\n";
    }

    const ParsedConfig from_file = load_config(path, /*apply_env=*/false);
    CHECK(from_file.scenario.eart.sigma == 100.0);
    CHECK(from_file.scenario.seed == 9);

    ::setenv("VANETSL_SIGMA", "75", 1);
    const ParsedConfig with_env = load_config(path, /*apply_env=*/true);
    CHECK(with_env.scenario.eart.sigma == 75.0);
    CHECK(with_env.scenario.seed == 9);

    ::setenv("VANETSL_SIGMA", "junk", 1);
    CHECK_THROWS_AS(load_config(path, true), ConfigError);
    ::unsetenv("VANETSL_SIGMA");

    CHECK_THROWS_AS(load_config("/nonexistent/nowhere.cfg", false), ConfigError);
    std::remove(path.c_str());
}
