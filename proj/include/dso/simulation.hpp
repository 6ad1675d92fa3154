#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dso/donkey.hpp"
#include "dso/scenario.hpp"

namespace dso::sim {

enum class ReportFormat { CSV, Text };

/// One line of the decision log: the event processed at this tick, the
/// re-scored fitness of every path, the reaction taken (empty when none)
/// and the resulting active set and mode.
struct SimRecord {
    long tick = 0;
    std::string event;
    std::vector<std::pair<std::string, double>> fitness;
    std::string reaction;
    std::vector<std::string> active_set;
    Mode mode = Mode::Normal;

    bool operator==(const SimRecord&) const = default;
};

struct SimulationLog {
    std::vector<SimRecord> records;  // initial smuggler record + one per event
    DonkeyState final_state;
};

/// Executes the scenario: one smuggler pass, then every event in order.
/// Parameter changes go through observe and trigger the configured policy
/// on a drop; Overload applies Face & Support; Recovery restores the listed
/// parameters to their scenario values and then attempts the switch back to
/// the original best. Deterministic. Errors are annotated with the tick.
SimulationLog run(const Scenario& scenario);

/// CSV columns (tick, event, best, active_set, mode, fitness_of_best) or a
/// human-readable timeline. `best` is the leading member of the active set.
std::string report(const SimulationLog& log, ReportFormat format);

} // namespace dso::sim
