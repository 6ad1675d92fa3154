#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dso/fitness.hpp"
#include "dso/population.hpp"

namespace dso {

/// The three adaptive reactions to a fitness drop.
enum class Reaction { Run, FaceAndSuicide, FaceAndSupport };

enum class Mode { Normal, SuicideSubstituted, Supported };

std::string_view to_string(Reaction r);
std::string_view to_string(Mode m);

/// A fitness-changing event: new values for some parameters of one solution.
struct FitnessEvent {
    std::string target;
    std::vector<std::pair<std::string, double>> changes;
};

/// Adaptive-mode state. The snapshot is the fitness map frozen at the last
/// full evaluation; it is the reference drops are judged against and the
/// pool the substitute/support reactions select from.
///
/// Invariants: Normal => active_set == {original_best};
/// SuicideSubstituted => active_set == {replacement != original_best};
/// Supported => active_set == {original_best, support != original_best}.
struct DonkeyState {
    Population population;
    std::vector<std::pair<std::string, double>> snapshot;  // id -> fitness
    std::string original_best;
    std::vector<std::string> active_set;
    Mode mode = Mode::Normal;
    Reaction policy = Reaction::Run;

    double snapshot_of(std::string_view id) const;

    /// Sum of the snapshot fitness of the two active solutions. Only
    /// meaningful in Supported mode.
    double support_fitness() const;
};

/// Runs the smuggler pass and seeds the adaptive state from its best.
DonkeyState make_donkey_state(Population population, Reaction policy);

/// Applies the event to the population, re-scores every solution on the
/// current data, and reports whether the active best dropped: another
/// solution strictly beats it, or it is strictly worse than its snapshot.
/// The snapshot itself stays frozen.
std::pair<DonkeyState, bool> observe(const DonkeyState& state, const FitnessEvent& event);

/// Run: discard the old best and fully re-rank on current values. Resets
/// original_best, snapshot and active_set to the new best.
DonkeyState react_run(const DonkeyState& state);

/// Face & Suicide: substitute the snapshot runner-up (the solution with the
/// smallest fitness gap to the best) for the degraded best. No re-scoring
/// of the population; the original best is kept for a later restore.
DonkeyState react_suicide(const DonkeyState& state);

/// Face & Support: keep the best and add the snapshot runner-up as a
/// concurrent helper. No re-scoring; the pair's combined fitness is the sum
/// of their snapshot values.
DonkeyState react_support(const DonkeyState& state);

/// If the original best has recovered to its snapshot fitness (within a
/// relative tolerance of 1e-9), make it the sole active solution again.
/// Returns the state unchanged otherwise, and also when already Normal.
DonkeyState try_restore(const DonkeyState& state);

/// Plain-text dump of the state for inspection.
std::string to_text(const DonkeyState& state);

} // namespace dso
