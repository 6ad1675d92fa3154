#include "dso/simulation.hpp"

#include <sstream>

#include "dso/errors.hpp"
#include "dso/fitness.hpp"
#include "dso/io.hpp"

namespace dso::sim {

namespace {

std::string event_summary(const TimedEvent& event) {
    std::string out(to_string(event.kind));
    out += ' ';
    out += event.target;
    for (const auto& [param, value] : event.changes)
        out += ' ' + param + '=' + format_number(value);
    for (const auto& param : event.restore_params) out += ' ' + param;
    return out;
}

DonkeyState apply_policy(const DonkeyState& state) {
    switch (state.policy) {
    case Reaction::Run: return react_run(state);
    case Reaction::FaceAndSuicide: return react_suicide(state);
    case Reaction::FaceAndSupport: return react_support(state);
    }
    throw Error("unknown reaction policy");
}

SimRecord make_record(long tick, std::string event, std::string reaction,
                      const DonkeyState& state) {
    SimRecord record;
    record.tick = tick;
    record.event = std::move(event);
    record.fitness = current_fitness(state.population);
    record.reaction = std::move(reaction);
    record.active_set = state.active_set;
    record.mode = state.mode;
    return record;
}

} // namespace

SimulationLog run(const Scenario& scenario) {
    scenario.validate();

    SimulationLog log;
    DonkeyState state = make_donkey_state(scenario.population, scenario.policy);
    log.records.push_back(make_record(0, "smuggler", "", state));

    for (const auto& event : scenario.events) {
        try {
            std::string reaction;
            switch (event.kind) {
            case EventKind::ParamChange: {
                auto [next, drop] = observe(state, FitnessEvent{event.target, event.changes});
                state = std::move(next);
                if (drop) {
                    state = apply_policy(state);
                    reaction = std::string(to_string(state.policy));
                }
                break;
            }
            case EventKind::Overload:
                state = react_support(state);
                reaction = std::string(to_string(Reaction::FaceAndSupport));
                break;
            case EventKind::Recovery: {
                // Put the listed parameters (all of them when none are
                // named) back to their scenario values, then try to hand
                // control back to the original best.
                const Solution* original = scenario.population.find(event.target);
                Solution* live = state.population.find(event.target);
                if (!original || !live)
                    throw UnknownSolution("unknown recovery target '" + event.target + "'");
                if (event.restore_params.empty()) {
                    live->values = original->values;
                } else {
                    for (const auto& param : event.restore_params)
                        live->set(param, *original->value_of(param));
                }
                const Mode before = state.mode;
                state = try_restore(state);
                if (before != Mode::Normal && state.mode == Mode::Normal)
                    reaction = "Restore";
                break;
            }
            }
            log.records.push_back(make_record(event.tick, event_summary(event), reaction,
                                              state));
        } catch (const Error& e) {
            throw Error("tick " + std::to_string(event.tick) + ": " + e.what());
        }
    }

    log.final_state = std::move(state);
    return log;
}

namespace {

std::string join_active(const std::vector<std::string>& active_set, char sep) {
    std::string out;
    for (std::size_t i = 0; i < active_set.size(); ++i) {
        if (i > 0) out += sep;
        out += active_set[i];
    }
    return out;
}

double fitness_of(const SimRecord& record, const std::string& id) {
    for (const auto& [sid, value] : record.fitness)
        if (sid == id) return value;
    throw UnknownSolution("record has no fitness for '" + id + "'");
}

} // namespace

std::string report(const SimulationLog& log, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::CSV) {
        out << "tick,event,best,active_set,mode,fitness_of_best\n";
        for (const auto& record : log.records) {
            const auto& best = record.active_set.front();
            out << record.tick << ',' << record.event << ',' << best << ','
                << join_active(record.active_set, '+') << ',' << to_string(record.mode) << ','
                << format_number(fitness_of(record, best)) << '\n';
        }
        return out.str();
    }

    for (const auto& record : log.records) {
        const auto& best = record.active_set.front();
        out << "t=" << record.tick << "  " << record.event;
        if (!record.reaction.empty()) out << "  reaction=" << record.reaction;
        out << "  best=" << best << "  active={" << join_active(record.active_set, ',')
            << "}  mode=" << to_string(record.mode)
            << "  fitness(" << best << ")=" << format_number(fitness_of(record, best)) << '\n';
    }
    return out.str();
}

} // namespace dso::sim
