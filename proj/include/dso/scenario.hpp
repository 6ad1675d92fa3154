#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dso/donkey.hpp"
#include "dso/population.hpp"

namespace dso::sim {

enum class EventKind { ParamChange, Overload, Recovery };

std::string_view to_string(EventKind k);

/// A timed change to the world: new parameter values, an overload signal on
/// a path, or the recovery of previously degraded parameters.
struct TimedEvent {
    long tick = 0;
    EventKind kind = EventKind::ParamChange;
    std::string target;
    std::vector<std::pair<std::string, double>> changes;  // ParamChange only
    std::vector<std::string> restore_params;              // Recovery; empty = all
};

/// A self-contained simulation input: the path table, the objective, the
/// configured drop reaction and a time-ordered event list.
struct Scenario {
    std::string title;
    Population population;   // specs + paths + objective
    Reaction policy = Reaction::Run;
    std::vector<TimedEvent> events;

    /// Throws ValidationError: population invariants, event ordering,
    /// unknown targets or parameters.
    void validate() const;
};

/// Parses the sectioned scenario format:
///   [title]     one free-text line
///   [specs]     name = Direct|Inverse, one per line
///   [objective] Maximize | Minimize          (default Maximize)
///   [policy]    Run | FaceAndSuicide | FaceAndSupport   (default Run)
///   [paths]     id, v1, v2, ... in spec order
///   [events]    tick, kind, target[, ...]
///               ParamChange takes param=value pairs, Recovery takes bare
///               parameter names (none = restore all), Overload takes none.
/// '#' starts a comment. Throws ParseError with line diagnostics, then
/// validates the result.
Scenario load_scenario(std::istream& in, std::string_view source_name = "scenario");
Scenario load_scenario_file(const std::string& path);

} // namespace dso::sim
