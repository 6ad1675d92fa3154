#include "dso/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dso/rng.hpp"

namespace dso::tsp {

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    DistanceMatrix m;
    m.n = static_cast<int>(rows.size());
    m.d.reserve(static_cast<std::size_t>(m.n) * m.n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.n)
            throw ValidationError("distance matrix is not square: row of length " +
                                  std::to_string(row.size()) + " in a " + std::to_string(m.n) +
                                  "-city matrix");
        m.d.insert(m.d.end(), row.begin(), row.end());
    }
    m.validate();
    return m;
}

void DistanceMatrix::validate() const {
    if (n < 2) throw ValidationError("distance matrix needs at least 2 cities");
    if (d.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("distance matrix storage does not match its size");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = at(i, j);
            const std::string cell =
                "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (!std::isfinite(v)) throw ValidationError(cell + " is not finite");
            if (i == j && v != 0.0) throw ValidationError(cell + " must be 0 on the diagonal");
            if (i != j && v <= 0.0) throw ValidationError(cell + " must be positive");
        }
    }
}

void AcoConfig::validate() const {
    if (n_ants < 1) throw ValidationError("ant count must be positive");
    if (iterations < 1) throw ValidationError("iteration count must be positive");
    if (!(rho > 0.0 && rho < 1.0)) throw ValidationError("evaporation rate must be in (0,1)");
}

namespace {

void check_city(const DistanceMatrix& m, int city) {
    if (city < 0 || city >= m.n)
        throw ValidationError("city index " + std::to_string(city + 1) + " out of range 1.." +
                              std::to_string(m.n));
}

double sequence_weight(const DistanceMatrix& m, const std::vector<int>& sequence) {
    double w = 0.0;
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
        w += m.at(sequence[i], sequence[i + 1]);
    return w;
}

// Completes a partially built tour greedily and closes it at the start.
Tour finish_greedy(const DistanceMatrix& m, std::vector<int> sequence,
                   std::vector<bool> visited) {
    int current = sequence.back();
    for (int step = static_cast<int>(sequence.size()); step < m.n; ++step) {
        int next = -1;
        for (int c = 0; c < m.n; ++c) {
            if (visited[c]) continue;
            if (next == -1 || m.at(current, c) < m.at(current, next)) next = c;
        }
        sequence.push_back(next);
        visited[next] = true;
        current = next;
    }
    sequence.push_back(sequence.front());

    Tour tour;
    tour.start = sequence.front();
    tour.weight = sequence_weight(m, sequence);
    tour.sequence = std::move(sequence);
    return tour;
}

} // namespace

Tour nearest_neighbor_tour(const DistanceMatrix& m, int start) {
    m.validate();
    check_city(m, start);
    std::vector<bool> visited(m.n, false);
    visited[start] = true;
    return finish_greedy(m, {start}, std::move(visited));
}

std::vector<Tour> smuggler_all_starts(const DistanceMatrix& m) {
    m.validate();
    std::vector<Tour> tours;
    tours.reserve(m.n);
    for (int start = 0; start < m.n; ++start) tours.push_back(nearest_neighbor_tour(m, start));
    return tours;
}

std::vector<std::size_t> best_tour_indices(const std::vector<Tour>& tours) {
    std::vector<std::size_t> best;
    if (tours.empty()) return best;
    double min_weight = std::numeric_limits<double>::infinity();
    for (const auto& t : tours) min_weight = std::min(min_weight, t.weight);
    for (std::size_t i = 0; i < tours.size(); ++i)
        if (tours[i].weight == min_weight) best.push_back(i);
    return best;
}

std::vector<Tour> alternate_paths(const DistanceMatrix& m, int start) {
    m.validate();
    check_city(m, start);
    std::vector<Tour> tours;
    tours.reserve(m.n - 1);
    for (int first_hop = 0; first_hop < m.n; ++first_hop) {
        if (first_hop == start) continue;
        std::vector<bool> visited(m.n, false);
        visited[start] = true;
        visited[first_hop] = true;
        tours.push_back(finish_greedy(m, {start, first_hop}, std::move(visited)));
    }
    return tours;
}

Tour brute_force_optimum(const DistanceMatrix& m) {
    m.validate();
    if (m.n > 12)
        throw TooLarge("exhaustive enumeration capped at 12 cities, got " + std::to_string(m.n));

    std::vector<int> rest(m.n - 1);
    std::iota(rest.begin(), rest.end(), 1);

    Tour best;
    bool have_best = false;
    // next_permutation walks permutations in lexicographic order, so the
    // first tour seen at the minimum weight has the smallest sequence.
    do {
        std::vector<int> sequence;
        sequence.reserve(m.n + 1);
        sequence.push_back(0);
        sequence.insert(sequence.end(), rest.begin(), rest.end());
        sequence.push_back(0);
        const double w = sequence_weight(m, sequence);
        if (!have_best || w < best.weight) {
            best.start = 0;
            best.sequence = std::move(sequence);
            best.weight = w;
            have_best = true;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

Tour aco_baseline(const DistanceMatrix& m, const AcoConfig& cfg) {
    m.validate();
    cfg.validate();

    const int n = m.n;
    std::vector<double> pheromone(static_cast<std::size_t>(n) * n, 1.0);
    std::vector<double> visibility(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) visibility[static_cast<std::size_t>(i) * n + j] = 1.0 / m.at(i, j);

    SeededRng rng(cfg.seed);
    Tour best;
    bool have_best = false;

    for (int iteration = 0; iteration < cfg.iterations; ++iteration) {
        for (int ant = 0; ant < cfg.n_ants; ++ant) {
            // Every ant departs from city 0.
            std::vector<int> sequence{0};
            std::vector<bool> visited(n, false);
            visited[0] = true;

            int current = 0;
            for (int step = 1; step < n; ++step) {
                double total = 0.0;
                for (int c = 0; c < n; ++c) {
                    if (!visited[c])
                        total += pheromone[static_cast<std::size_t>(current) * n + c] *
                                 visibility[static_cast<std::size_t>(current) * n + c];
                }
                // Cumulative-probability draw over the unvisited cities.
                const double draw = rng.uniform01() * total;
                double cumulative = 0.0;
                int next = -1;
                for (int c = 0; c < n; ++c) {
                    if (visited[c]) continue;
                    next = c;
                    cumulative += pheromone[static_cast<std::size_t>(current) * n + c] *
                                  visibility[static_cast<std::size_t>(current) * n + c];
                    if (cumulative >= draw) break;
                }
                sequence.push_back(next);
                visited[next] = true;
                current = next;
            }
            sequence.push_back(0);

            const double length = sequence_weight(m, sequence);
            const double deposit = 1.0 / length;
            for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
                pheromone[static_cast<std::size_t>(sequence[i]) * n + sequence[i + 1]] += deposit;

            if (!have_best || length < best.weight) {
                best.start = 0;
                best.sequence = std::move(sequence);
                best.weight = length;
                have_best = true;
            }
        }
        for (auto& tau : pheromone) tau *= (1.0 - cfg.rho);
    }
    return best;
}

} // namespace dso::tsp
