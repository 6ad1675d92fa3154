#include "dso/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dso/errors.hpp"

namespace dso {

double FitnessReport::fitness_of(std::string_view id) const {
    for (const auto& [sid, value] : fitness) {
        if (sid == id) return value;
    }
    throw UnknownSolution("no fitness recorded for solution '" + std::string(id) + "'");
}

double compute_fitness(const Solution& solution, std::span<const ParameterSpec> active_specs) {
    if (active_specs.empty())
        throw EmptySpecList("fitness requested over an empty parameter list");

    // Empty sum is 0 and empty product is 1, so a side with no parameters
    // contributes exactly 1.
    double direct_sum = 0.0, direct_prod = 1.0;
    double inverse_sum = 0.0, inverse_prod = 1.0;
    for (const auto& spec : active_specs) {
        auto v = solution.value_of(spec.name);
        if (!v)
            throw UnknownParameter("solution '" + solution.id + "' has no parameter '" +
                                   spec.name + "'");
        if (spec.direction == Direction::Direct) {
            direct_sum += *v;
            direct_prod *= *v;
        } else {
            inverse_sum += *v;
            inverse_prod *= *v;
        }
    }

    const double numerator = direct_sum + direct_prod;
    const double denominator = inverse_sum + inverse_prod;
    if (denominator == 0.0)
        throw ZeroDenominator("inverse parameters of solution '" + solution.id +
                              "' sum and multiply to zero");
    const double result = numerator / denominator;
    if (!std::isfinite(numerator) || !std::isfinite(denominator) || !std::isfinite(result))
        throw NonFiniteResult("fitness of solution '" + solution.id + "' is not finite");
    return result;
}

std::vector<ParameterSpec> filter_constant_parameters(const Population& population) {
    population.validate();
    if (population.solutions.size() == 1) return population.specs;

    std::vector<ParameterSpec> active;
    for (const auto& spec : population.specs) {
        const double first = *population.solutions.front().value_of(spec.name);
        const bool varies = std::any_of(
            population.solutions.begin() + 1, population.solutions.end(),
            [&](const Solution& s) { return *s.value_of(spec.name) != first; });
        if (varies) active.push_back(spec);
    }
    if (active.empty() && !population.specs.empty())
        throw AllParametersConstant("every parameter is identical across all solutions");
    return active;
}

std::vector<std::pair<std::string, double>> current_fitness(const Population& population) {
    const auto active = filter_constant_parameters(population);
    std::vector<std::pair<std::string, double>> out;
    out.reserve(population.solutions.size());
    for (const auto& s : population.solutions) {
        out.emplace_back(s.id, compute_fitness(s, active));
    }
    return out;
}

FitnessReport rank(const Population& population) {
    const auto active = filter_constant_parameters(population);

    FitnessReport report;
    report.active_params.reserve(active.size());
    for (const auto& spec : active) report.active_params.push_back(spec.name);

    report.fitness.reserve(population.solutions.size());
    for (const auto& s : population.solutions) {
        report.fitness.emplace_back(s.id, compute_fitness(s, active));
    }

    std::vector<std::size_t> order(report.fitness.size());
    std::iota(order.begin(), order.end(), 0);
    // stable_sort keeps insertion order among equal fitness values
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return better(report.fitness[a].second, report.fitness[b].second, population.objective);
    });

    report.ranking.reserve(order.size());
    for (auto idx : order) report.ranking.push_back(report.fitness[idx].first);
    report.best = report.ranking.front();
    return report;
}

} // namespace dso
