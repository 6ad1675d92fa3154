#include "dso/donkey.hpp"

#include <cmath>
#include <sstream>

#include "dso/errors.hpp"
#include "dso/io.hpp"

namespace dso {

std::string_view to_string(Reaction r) {
    switch (r) {
    case Reaction::Run: return "Run";
    case Reaction::FaceAndSuicide: return "FaceAndSuicide";
    case Reaction::FaceAndSupport: return "FaceAndSupport";
    }
    return "?";
}

std::string_view to_string(Mode m) {
    switch (m) {
    case Mode::Normal: return "Normal";
    case Mode::SuicideSubstituted: return "SuicideSubstituted";
    case Mode::Supported: return "Supported";
    }
    return "?";
}

double DonkeyState::snapshot_of(std::string_view id) const {
    for (const auto& [sid, value] : snapshot) {
        if (sid == id) return value;
    }
    throw UnknownSolution("no snapshot fitness for solution '" + std::string(id) + "'");
}

double DonkeyState::support_fitness() const {
    double total = 0.0;
    for (const auto& id : active_set) total += snapshot_of(id);
    return total;
}

DonkeyState make_donkey_state(Population population, Reaction policy) {
    auto report = rank(population);
    DonkeyState state;
    state.population = std::move(population);
    state.snapshot = std::move(report.fitness);
    state.original_best = report.best;
    state.active_set = {state.original_best};
    state.mode = Mode::Normal;
    state.policy = policy;
    return state;
}

namespace {

// Recomputed fitness of one solution over the currently varying parameters.
double fitness_now(const Population& population, std::string_view id) {
    const auto active = filter_constant_parameters(population);
    return compute_fitness(*population.find(id), active);
}

// Eq-style runner-up: the solution other than `best` whose snapshot fitness
// has the smallest absolute gap to the best's. The snapshot best is extremal,
// so this is the second-ranked solution; ties keep snapshot order.
std::string snapshot_runner_up(const DonkeyState& state) {
    if (state.population.solutions.size() < 2)
        throw SingleSolution("no alternative solution to switch to");
    const double best_fitness = state.snapshot_of(state.original_best);
    std::string chosen;
    double smallest_gap = 0.0;
    for (const auto& [id, value] : state.snapshot) {
        if (id == state.original_best) continue;
        const double gap = std::abs(value - best_fitness);
        if (chosen.empty() || gap < smallest_gap) {
            chosen = id;
            smallest_gap = gap;
        }
    }
    return chosen;
}

} // namespace

std::pair<DonkeyState, bool> observe(const DonkeyState& state, const FitnessEvent& event) {
    DonkeyState next = state;

    Solution* target = next.population.find(event.target);
    if (!target) throw UnknownSolution("event targets unknown solution '" + event.target + "'");
    for (const auto& [param, value] : event.changes) {
        if (!target->set(param, value))
            throw UnknownParameter("event changes unknown parameter '" + param + "' of '" +
                                   event.target + "'");
    }

    const auto fitness = current_fitness(next.population);
    auto value_of = [&](std::string_view id) {
        for (const auto& [sid, v] : fitness)
            if (sid == id) return v;
        throw UnknownSolution("no fitness for '" + std::string(id) + "'");
    };

    // Best of the active set on the recomputed values; ties keep set order.
    std::string active_best = next.active_set.front();
    for (const auto& id : next.active_set) {
        if (better(value_of(id), value_of(active_best), next.population.objective))
            active_best = id;
    }

    bool beaten = false;
    for (const auto& [id, value] : fitness) {
        if (id != active_best &&
            better(value, value_of(active_best), next.population.objective)) {
            beaten = true;
            break;
        }
    }
    const bool worsened = better(next.snapshot_of(active_best), value_of(active_best),
                                 next.population.objective);

    return {std::move(next), beaten || worsened};
}

DonkeyState react_run(const DonkeyState& state) {
    auto report = rank(state.population);
    DonkeyState next = state;
    next.snapshot = std::move(report.fitness);
    next.original_best = report.best;
    next.active_set = {next.original_best};
    next.mode = Mode::Normal;
    return next;
}

DonkeyState react_suicide(const DonkeyState& state) {
    DonkeyState next = state;
    next.active_set = {snapshot_runner_up(state)};
    next.mode = Mode::SuicideSubstituted;
    return next;
}

DonkeyState react_support(const DonkeyState& state) {
    DonkeyState next = state;
    next.active_set = {state.original_best, snapshot_runner_up(state)};
    next.mode = Mode::Supported;
    return next;
}

DonkeyState try_restore(const DonkeyState& state) {
    if (state.mode == Mode::Normal) return state;

    const double was = state.snapshot_of(state.original_best);
    const double now = fitness_now(state.population, state.original_best);
    const double epsilon = 1e-9 * std::max(1.0, std::abs(was));
    const bool recovered = state.population.objective == Objective::Maximize
                               ? now >= was - epsilon
                               : now <= was + epsilon;
    if (!recovered) return state;

    DonkeyState next = state;
    next.active_set = {next.original_best};
    next.mode = Mode::Normal;
    return next;
}

std::string to_text(const DonkeyState& state) {
    std::ostringstream out;
    out << "mode: " << to_string(state.mode) << "\n";
    out << "policy: " << to_string(state.policy) << "\n";
    out << "original_best: " << state.original_best << "\n";
    out << "active_set:";
    for (const auto& id : state.active_set) out << ' ' << id;
    out << "\n";
    out << "snapshot:\n";
    for (const auto& [id, value] : state.snapshot)
        out << "  " << id << " = " << format_number(value) << "\n";
    return out.str();
}

} // namespace dso
