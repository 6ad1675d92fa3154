#pragma once

#include <cstdint>
#include <vector>

#include "dso/errors.hpp"

namespace dso::tsp {

/// Square distance matrix over n cities, 0-indexed. Asymmetric entries are
/// permitted; the diagonal is zero and every other entry is positive.
struct DistanceMatrix {
    int n = 0;
    std::vector<double> d;  // row-major, n*n

    static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

    double at(int from, int to) const { return d[static_cast<std::size_t>(from) * n + to]; }

    /// Throws ValidationError naming the offending cell.
    void validate() const;
};

/// A closed tour: starts and ends at `start`, visits every city once.
struct Tour {
    int start = 0;
    std::vector<int> sequence;  // size n+1, sequence.front() == sequence.back() == start
    double weight = 0.0;

    bool operator==(const Tour&) const = default;
};

struct AcoConfig {
    int n_ants = 3;
    int iterations = 100;
    double rho = 0.5;  // evaporation rate, in (0,1)
    std::uint64_t seed = 0;

    void validate() const;
};

/// Greedy construction: hop to the closest unvisited city (ties to the
/// lowest index), then close the cycle back at the start.
Tour nearest_neighbor_tour(const DistanceMatrix& m, int start);

/// One nearest-neighbor tour per start city, in city order.
std::vector<Tour> smuggler_all_starts(const DistanceMatrix& m);

/// Indices of the minimum-weight tours within a tour list.
std::vector<std::size_t> best_tour_indices(const std::vector<Tour>& tours);

/// The replacement pool for the adaptive mode: for every first hop c !=
/// start (ascending), the tour start -> c completed greedily. Exactly n-1
/// tours.
std::vector<Tour> alternate_paths(const DistanceMatrix& m, int start);

/// Exhaustive minimum over all (n-1)! directed tours from city 0; ties go
/// to the lexicographically smallest sequence. Throws TooLarge for n > 12.
Tour brute_force_optimum(const DistanceMatrix& m);

/// Ant-colony baseline: visibility 1/d, pheromone seeded to 1, every ant
/// departs from city 0, next city sampled by cumulative probability
/// proportional to pheromone * visibility, deposit 1/length on each ant's
/// edges, then evaporate by (1 - rho) once per iteration. Returns the best
/// tour observed; deterministic for a fixed seed.
Tour aco_baseline(const DistanceMatrix& m, const AcoConfig& cfg);

} // namespace dso::tsp
