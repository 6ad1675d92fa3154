#include "dso/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dso/errors.hpp"
#include "dso/rng.hpp"

namespace dso::bench {

std::string_view to_string(BenchId id) {
    switch (id) {
    case BenchId::F1: return "F1";
    case BenchId::F2: return "F2";
    case BenchId::F3: return "F3";
    case BenchId::F4: return "F4";
    case BenchId::F5: return "F5";
    case BenchId::F6: return "F6";
    case BenchId::F7: return "F7";
    case BenchId::F8: return "F8";
    case BenchId::F11: return "F11";
    case BenchId::F13: return "F13";
    }
    return "?";
}

std::optional<BenchId> parse_bench_id(std::string_view text) {
    for (const auto& f : all_benchmarks())
        if (text == to_string(f.id)) return f.id;
    return std::nullopt;
}

const std::vector<BenchmarkFunction>& all_benchmarks() {
    static const std::vector<BenchmarkFunction> table = {
        {BenchId::F1, "Sphere", 30, -100.0, 100.0, 0.0, {std::vector<double>(30, 0.0)}},
        {BenchId::F2, "Schwefel 2.22", 30, -10.0, 10.0, 0.0, {std::vector<double>(30, 0.0)}},
        {BenchId::F3, "Schwefel 1.2", 30, -100.0, 100.0, 0.0, {std::vector<double>(30, 0.0)}},
        {BenchId::F4, "Rosenbrock", 30, -30.0, 30.0, 0.0, {std::vector<double>(30, 1.0)}},
        {BenchId::F5, "Schwefel 2.26", 30, -500.0, 500.0, -12569.487,
         {std::vector<double>(30, 420.9687)}},
        {BenchId::F6, "Rastrigin", 30, -5.12, 5.12, 0.0, {std::vector<double>(30, 0.0)}},
        {BenchId::F7, "Ackley", 30, -32.0, 32.0, 0.0, {std::vector<double>(30, 0.0)}},
        {BenchId::F8, "Griewank", 30, -600.0, 600.0, 0.0, {std::vector<double>(30, 0.0)}},
        {BenchId::F11, "Six-hump camel back", 2, -5.0, 5.0, -1.0316285,
         {{0.08983, -0.7126}, {-0.08983, 0.7126}}},
        {BenchId::F13, "Goldstein-Price", 2, -2.0, 2.0, 3.0, {{0.0, -1.0}}},
    };
    return table;
}

const BenchmarkFunction& benchmark(BenchId id) {
    for (const auto& f : all_benchmarks())
        if (f.id == id) return f;
    throw Error("unknown benchmark id");
}

namespace {

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double schwefel_2_22(std::span<const double> x) {
    double s = 0.0, p = 1.0;
    for (double v : x) {
        s += std::abs(v);
        p *= std::abs(v);
    }
    return s + p;
}

double schwefel_1_2(std::span<const double> x) {
    double total = 0.0, prefix = 0.0;
    for (double v : x) {
        prefix += v;
        total += prefix * prefix;
    }
    return total;
}

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double schwefel_2_26(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * std::sin(std::sqrt(std::abs(v)));
    return -s;
}

double rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v) + 10.0;
    return s;
}

double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * std::numbers::pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
           std::numbers::e;
}

double griewank(std::span<const double> x) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

double six_hump_camel(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    return 4.0 * x1 * x1 - 2.1 * std::pow(x1, 4) + std::pow(x1, 6) / 3.0 + x1 * x2 -
           4.0 * x2 * x2 + 4.0 * std::pow(x2, 4);
}

double goldstein_price(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double a = x1 + x2 + 1.0;
    const double lhs =
        1.0 + a * a * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 +
                       3.0 * x2 * x2);
    const double b = 2.0 * x1 - 3.0 * x2;
    const double rhs =
        30.0 + b * b * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 +
                        27.0 * x2 * x2);
    return lhs * rhs;
}

} // namespace

double evaluate(const BenchmarkFunction& f, std::span<const double> x) {
    if (static_cast<int>(x.size()) != f.dimension)
        throw DimensionMismatch("point of dimension " + std::to_string(x.size()) +
                                " passed to " + std::string(to_string(f.id)) + " (expects " +
                                std::to_string(f.dimension) + ")");
    switch (f.id) {
    case BenchId::F1: return sphere(x);
    case BenchId::F2: return schwefel_2_22(x);
    case BenchId::F3: return schwefel_1_2(x);
    case BenchId::F4: return rosenbrock(x);
    case BenchId::F5: return schwefel_2_26(x);
    case BenchId::F6: return rastrigin(x);
    case BenchId::F7: return ackley(x);
    case BenchId::F8: return griewank(x);
    case BenchId::F11: return six_hump_camel(x);
    case BenchId::F13: return goldstein_price(x);
    }
    throw Error("unknown benchmark id");
}

SmugglerResult random_search_smuggler(const BenchmarkFunction& f, int population_size,
                                      std::uint64_t seed) {
    if (population_size < 1) throw ValidationError("population size must be >= 1");

    SeededRng rng(seed);
    SmugglerResult result;
    result.trace.reserve(population_size);

    std::vector<double> point(f.dimension);
    for (int k = 0; k < population_size; ++k) {
        for (auto& coordinate : point) coordinate = rng.uniform(f.lower, f.upper);
        const double value = evaluate(f, point);
        if (k == 0 || value < result.best_value) {
            result.best_value = value;
            result.best_point = point;
        }
        result.trace.push_back(result.best_value);
    }
    return result;
}

RunStatistics run_statistics(const BenchmarkFunction& f, int runs, int population_size,
                             std::uint64_t base_seed) {
    if (runs < 1) throw ValidationError("run count must be >= 1");

    std::vector<double> bests;
    bests.reserve(runs);
    for (int k = 0; k < runs; ++k)
        bests.push_back(random_search_smuggler(f, population_size, base_seed + k).best_value);

    double sum = 0.0;
    for (double b : bests) sum += b;
    const double avg = sum / runs;

    double variance = 0.0;
    for (double b : bests) variance += (b - avg) * (b - avg);
    variance /= runs;

    double best_overall = bests.front();
    for (double b : bests) best_overall = std::min(best_overall, b);

    return {f.id, runs, population_size, avg, std::sqrt(variance), best_overall};
}

} // namespace dso::bench
