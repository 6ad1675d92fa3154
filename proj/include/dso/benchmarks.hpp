#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dso::bench {

enum class BenchId { F1, F2, F3, F4, F5, F6, F7, F8, F11, F13 };

std::string_view to_string(BenchId id);

/// Parses "F1".."F8", "F11", "F13". Returns nullopt for anything else,
/// including the function ids this suite deliberately omits.
std::optional<BenchId> parse_bench_id(std::string_view text);

/// A closed-form test function with its search interval and known optimum.
struct BenchmarkFunction {
    BenchId id;
    std::string name;
    int dimension;
    double lower;
    double upper;
    double known_optimum;
    std::vector<std::vector<double>> known_solutions;
};

/// The ten functions of the suite, with their published bounds and optima.
const BenchmarkFunction& benchmark(BenchId id);
const std::vector<BenchmarkFunction>& all_benchmarks();

/// Closed-form value at x. Out-of-bounds points are evaluated, not
/// rejected; bounds constrain sampling only. Throws DimensionMismatch.
double evaluate(const BenchmarkFunction& f, std::span<const double> x);

struct SmugglerResult {
    std::vector<double> best_point;
    double best_value = 0.0;
    std::vector<double> trace;  // best-so-far value after each sample
};

/// Samples `population_size` points uniformly inside the function's bounds
/// with the given seed and returns the minimizer. Deterministic per seed.
SmugglerResult random_search_smuggler(const BenchmarkFunction& f, int population_size,
                                      std::uint64_t seed);

struct RunStatistics {
    BenchId id;
    int runs = 0;
    int population_size = 0;
    double avg = 0.0;
    double stddev = 0.0;  // population standard deviation (divide by runs)
    double best_overall = 0.0;
};

/// Aggregates `runs` independent smuggler searches seeded base_seed + k.
RunStatistics run_statistics(const BenchmarkFunction& f, int runs, int population_size,
                             std::uint64_t base_seed);

} // namespace dso::bench
