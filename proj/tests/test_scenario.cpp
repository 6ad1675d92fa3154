#include <doctest.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dso/errors.hpp"
#include "dso/io.hpp"
#include "dso/scenario.hpp"
#include "dso/simulation.hpp"
#include "test_helpers.hpp"

using namespace dso;
using namespace dso::sim;

namespace {

const std::string kDataDir = DSO_DATA_DIR;

Scenario from_text(const std::string& text) {
    std::istringstream in(text);
    return load_scenario(in, "inline");
}

const std::string kSmallScenario = R"([title]
Two paths

[specs]
delay = Inverse
speed = Direct

[objective]
Maximize

[policy]
FaceAndSuicide

[paths]
A, 10, 4
B, 20, 9

[events]
1, ParamChange, A, delay=100
2, Recovery, A, delay
)";

// (tick, best, mode) triples parsed back out of a CSV report.
std::vector<std::tuple<long, std::string, std::string>> parse_csv_triples(
    const std::string& csv) {
    std::vector<std::tuple<long, std::string, std::string>> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream row(line);
        while (std::getline(row, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() == 6);
        out.emplace_back(std::stol(fields[0]), fields[2], fields[4]);
    }
    return out;
}

} // namespace

TEST_CASE("the bundled scenarios load and validate") {
    const auto first = load_scenario_file(kDataDir + "/packet_routing_first.scenario");
    CHECK(first.population.solutions.size() == 3);
    CHECK(first.population.specs.size() == 5);
    CHECK(first.policy == Reaction::FaceAndSuicide);
    CHECK(first.events.empty());
    CHECK(first.population == dso::testing::packet_routing_population());

    const auto second = load_scenario_file(kDataDir + "/packet_routing_second.scenario");
    CHECK(second.population.solutions.size() == 3);

    const auto ambulance = load_scenario_file(kDataDir + "/ambulance.scenario");
    CHECK(ambulance.population == dso::testing::ambulance_population());
    CHECK(ambulance.policy == Reaction::Run);
    CHECK(ambulance.events.size() == 2);
}

TEST_CASE("scenario parsing handles every section") {
    const auto scenario = from_text(kSmallScenario);
    CHECK(scenario.title == "Two paths");
    CHECK(scenario.population.specs.size() == 2);
    CHECK(scenario.population.solutions.size() == 2);
    REQUIRE(scenario.events.size() == 2);
    CHECK(scenario.events[0].kind == EventKind::ParamChange);
    CHECK(scenario.events[0].changes ==
          std::vector<std::pair<std::string, double>>{{"delay", 100.0}});
    CHECK(scenario.events[1].kind == EventKind::Recovery);
    CHECK(scenario.events[1].restore_params == std::vector<std::string>{"delay"});
}

TEST_CASE("an empty events section is valid") {
    const auto scenario = from_text(
        "[specs]\na = Direct\n[paths]\nP, 1\nQ, 2\n[events]\n");
    CHECK(scenario.events.empty());
    CHECK(scenario.policy == Reaction::Run);  // default
    CHECK(scenario.population.objective == Objective::Maximize);  // default
}

TEST_CASE("scenario parse errors carry line diagnostics") {
    CHECK_THROWS_WITH_AS(from_text("[specs]\na = Sideways\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_AS(from_text("stray content\n"), ParseError);
    CHECK_THROWS_AS(from_text("[nonsense]\n"), ParseError);
    CHECK_THROWS_AS(
        from_text("[specs]\na = Direct\n[paths]\nP, 1\nQ, 2\n[events]\n1, Overload, P, a=2\n"),
        ParseError);
    CHECK_THROWS_AS(
        from_text("[specs]\na = Direct\n[paths]\nP, 1\nQ, 2\n[events]\n1, Explode, P\n"),
        ParseError);
    CHECK_THROWS_AS(from_text("[specs]\na = Direct\n[paths]\nP, 1, 2\n"), ParseError);
}

TEST_CASE("scenario validation rejects unknown references and bad ordering") {
    CHECK_THROWS_WITH_AS(
        from_text("[specs]\na = Direct\n[paths]\nP, 1\nQ, 2\n[events]\n1, Overload, X9\n"),
        doctest::Contains("X9"), ValidationError);
    CHECK_THROWS_AS(
        from_text(
            "[specs]\na = Direct\n[paths]\nP, 1\nQ, 2\n[events]\n1, ParamChange, P, b=1\n"),
        ValidationError);
    CHECK_THROWS_AS(
        from_text("[specs]\na = Direct\n[paths]\nP, 1\nQ, 2\n[events]\n"
                  "5, Overload, P\n1, Overload, P\n"),
        ValidationError);
}

TEST_CASE("a no-event run is a single smuggler record") {
    auto scenario = load_scenario_file(kDataDir + "/packet_routing_first.scenario");
    const auto log = run(scenario);
    REQUIRE(log.records.size() == 1);
    CHECK(log.records[0].event == "smuggler");
    CHECK(log.records[0].active_set == std::vector<std::string>{"X3"});
    CHECK(log.records[0].mode == Mode::Normal);
    CHECK(log.final_state.original_best == "X3");
}

TEST_CASE("the second topology selects the first path") {
    const auto scenario = load_scenario_file(kDataDir + "/packet_routing_second.scenario");
    const auto log = run(scenario);
    CHECK(log.final_state.original_best == "X1");
}

TEST_CASE("a degrade event under FaceAndSuicide activates the runner-up") {
    auto scenario = load_scenario_file(kDataDir + "/packet_routing_first.scenario");
    scenario.events = {TimedEvent{1, EventKind::ParamChange, "X3",
                                  {{"packet_delay", 500.0}}, {}}};
    const auto log = run(scenario);
    REQUIRE(log.records.size() == 2);
    CHECK(log.records[1].reaction == "FaceAndSuicide");
    CHECK(log.records[1].active_set == std::vector<std::string>{"X1"});
    CHECK(log.records[1].mode == Mode::SuicideSubstituted);
}

TEST_CASE("recovery restores the original best") {
    auto scenario = load_scenario_file(kDataDir + "/packet_routing_first.scenario");
    scenario.events = {
        TimedEvent{1, EventKind::ParamChange, "X3", {{"packet_delay", 500.0}}, {}},
        TimedEvent{2, EventKind::Recovery, "X3", {}, {"packet_delay"}},
    };
    const auto log = run(scenario);
    REQUIRE(log.records.size() == 3);
    CHECK(log.records[2].reaction == "Restore");
    CHECK(log.records[2].mode == Mode::Normal);
    CHECK(log.records[2].active_set == std::vector<std::string>{"X3"});
    // exact restoration reproduces the smuggler fitness map
    CHECK(log.records[2].fitness == log.records[0].fitness);
}

TEST_CASE("a recovery event with no names restores every parameter") {
    auto scenario = from_text(kSmallScenario);
    scenario.events = {
        TimedEvent{1, EventKind::ParamChange, "A", {{"delay", 100.0}, {"speed", 1.0}}, {}},
        TimedEvent{2, EventKind::Recovery, "A", {}, {}},
    };
    const auto log = run(scenario);
    CHECK(log.final_state.population == scenario.population);
    CHECK(log.final_state.mode == Mode::Normal);
}

TEST_CASE("an overload event brings in support") {
    auto scenario = load_scenario_file(kDataDir + "/packet_routing_first.scenario");
    scenario.events = {TimedEvent{3, EventKind::Overload, "X3", {}, {}}};
    const auto log = run(scenario);
    REQUIRE(log.records.size() == 2);
    CHECK(log.records[1].reaction == "FaceAndSupport");
    CHECK(log.records[1].active_set == std::vector<std::string>{"X3", "X1"});
    CHECK(log.records[1].mode == Mode::Supported);
    CHECK(log.final_state.support_fitness() ==
          doctest::Approx(32.0 / 81259.0 + 30.0 / 368276.0).epsilon(1e-12));
}

TEST_CASE("zeroing a column for every path drops it from the ranking") {
    auto scenario = load_scenario_file(kDataDir + "/packet_routing_first.scenario");
    for (auto& path : scenario.population.solutions) path.set("cost", 0.0);

    const auto report = rank(scenario.population);
    CHECK(report.active_params ==
          std::vector<std::string>{"packet_delay", "transmission_speed"});
    CHECK(report.best == "X3");
    CHECK(report.fitness_of("X3") == doctest::Approx(32.0 / 38.0).epsilon(1e-12));
}

TEST_CASE("a supported pair rides out a degrade the helper already covers") {
    auto scenario = load_scenario_file(kDataDir + "/packet_routing_first.scenario");
    scenario.policy = Reaction::FaceAndSupport;
    scenario.events = {
        TimedEvent{1, EventKind::Overload, "X3", {}, {}},
        TimedEvent{2, EventKind::ParamChange, "X3", {{"packet_delay", 500.0}}, {}},
    };
    const auto log = run(scenario);
    REQUIRE(log.records.size() == 3);
    CHECK(log.records[1].mode == Mode::Supported);
    // X1 still leads the pair at its snapshot fitness, so no drop fires
    CHECK(log.records[2].reaction == "");
    CHECK(log.records[2].mode == Mode::Supported);
    CHECK(log.records[2].active_set == std::vector<std::string>{"X3", "X1"});
}

TEST_CASE("the ambulance scenario re-ranks onto the improved route") {
    const auto scenario = load_scenario_file(kDataDir + "/ambulance.scenario");
    const auto log = run(scenario);
    REQUIRE(log.records.size() == 3);

    CHECK(log.records[0].active_set == std::vector<std::string>{"X1"});

    // first report: X1 degrades, Run re-ranks, X1 still leads
    CHECK(log.records[1].reaction == "Run");
    CHECK(log.records[1].active_set == std::vector<std::string>{"X1"});

    // second report: X2 improves past it
    CHECK(log.records[2].reaction == "Run");
    CHECK(log.records[2].active_set == std::vector<std::string>{"X2"});
    CHECK(log.final_state.original_best == "X2");
}

TEST_CASE("simulation runs are deterministic") {
    const auto scenario = load_scenario_file(kDataDir + "/ambulance.scenario");
    const auto a = run(scenario);
    const auto b = run(scenario);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i] == b.records[i]);
    CHECK(report(a, ReportFormat::CSV) == report(b, ReportFormat::CSV));
}

TEST_CASE("the active set never leaves the scenario's paths") {
    const auto scenario = load_scenario_file(kDataDir + "/ambulance.scenario");
    const auto log = run(scenario);
    for (const auto& record : log.records) {
        for (const auto& id : record.active_set)
            CHECK(scenario.population.find(id) != nullptr);
        CHECK(record.fitness.size() == scenario.population.solutions.size());
    }
}

TEST_CASE("errors during a run carry the tick") {
    auto scenario = from_text(kSmallScenario);
    scenario.events.clear();
    scenario.events.push_back(TimedEvent{7, EventKind::ParamChange, "A", {{"delay", 20.0}}, {}});
    // bypass validation: target vanishes after load
    scenario.events.push_back(TimedEvent{8, EventKind::ParamChange, "Zed", {}, {}});
    CHECK_THROWS_WITH_AS(run(scenario), doctest::Contains("tick 8"), Error);
}

TEST_CASE("CSV report round-trips tick, best and mode") {
    auto scenario = load_scenario_file(kDataDir + "/packet_routing_first.scenario");
    scenario.events = {
        TimedEvent{1, EventKind::ParamChange, "X3", {{"packet_delay", 500.0}}, {}},
        TimedEvent{2, EventKind::Recovery, "X3", {}, {"packet_delay"}},
    };
    const auto log = run(scenario);
    const auto triples = parse_csv_triples(report(log, ReportFormat::CSV));
    REQUIRE(triples.size() == log.records.size());
    for (std::size_t i = 0; i < triples.size(); ++i) {
        CHECK(std::get<0>(triples[i]) == log.records[i].tick);
        CHECK(std::get<1>(triples[i]) == log.records[i].active_set.front());
        CHECK(std::get<2>(triples[i]) == std::string(to_string(log.records[i].mode)));
    }
}

TEST_CASE("the text report names the winning path") {
    const auto scenario = load_scenario_file(kDataDir + "/packet_routing_first.scenario");
    const auto text = report(run(scenario), ReportFormat::Text);
    CHECK(text.find("best=X3") != std::string::npos);
    CHECK(text.find("mode=Normal") != std::string::npos);
}

TEST_CASE("population tables load through the header/rows format") {
    const auto population = load_population_file(kDataDir + "/packet_routing_paths.table");
    CHECK(population == dso::testing::packet_routing_population());

    const auto report = rank(population);
    CHECK(report.active_params ==
          std::vector<std::string>{"packet_delay", "cost", "transmission_speed"});
    CHECK(report.best == "X3");
}

TEST_CASE("population table parse errors") {
    auto load = [](const std::string& text) {
        std::istringstream in(text);
        return load_population_table(in, "inline");
    };
    CHECK_THROWS_AS(load(""), ParseError);                       // no header
    CHECK_THROWS_AS(load("a:Direct\nX1, 1, 2\n"), ParseError);   // field count
    CHECK_THROWS_AS(load("a:Sideways\nX1, 1\n"), ParseError);    // bad direction
    CHECK_THROWS_AS(load("a\nX1, 1\n"), ParseError);             // missing colon
    CHECK_THROWS_AS(load("a:Direct\nX1, x\n"), ParseError);      // bad number
    CHECK_THROWS_AS(load("a:Direct\nX1, 1\nX1, 2\n"), ValidationError);  // dup id
}

TEST_CASE("number formatting is stable and trims integral values") {
    CHECK(format_number(52.0) == "52");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(-12569.487) == "-12569.487");
    CHECK(format_number(32.0 / 81259.0) == format_number(32.0 / 81259.0));
}
