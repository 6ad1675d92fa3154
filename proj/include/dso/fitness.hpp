#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dso/population.hpp"

namespace dso {

/// Result of the smuggler's non-adaptive pass over a population.
struct FitnessReport {
    std::vector<std::string> active_params;                  // survived filtering
    std::vector<std::pair<std::string, double>> fitness;     // id -> value, population order
    std::vector<std::string> ranking;                        // ids, best first
    std::string best;                                        // == ranking.front()

    double fitness_of(std::string_view id) const;

    bool operator==(const FitnessReport&) const = default;
};

/// Evaluates the ratio fitness of one solution over the given parameter
/// list: (sum + product of Direct values) / (sum + product of Inverse
/// values). A side with no parameters contributes 1, so single-group
/// populations stay orderable.
///
/// Throws EmptySpecList, UnknownParameter, ZeroDenominator, NonFiniteResult.
double compute_fitness(const Solution& solution, std::span<const ParameterSpec> active_specs);

/// Drops every parameter whose value is identical across all solutions;
/// such columns carry no ranking information. A single-solution population
/// keeps all specs. Throws AllParametersConstant when >= 2 solutions share
/// every value.
std::vector<ParameterSpec> filter_constant_parameters(const Population& population);

/// Fitness of every solution over the population's currently varying
/// parameters, in population order. No ranking.
std::vector<std::pair<std::string, double>> current_fitness(const Population& population);

/// The full smuggler pass: filter constant parameters, score every
/// solution, order by the population's objective (ties keep insertion
/// order) and name the best.
FitnessReport rank(const Population& population);

} // namespace dso
