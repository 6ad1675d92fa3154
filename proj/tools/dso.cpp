// Command-line front end: TSP tours, benchmark statistics, routing
// simulations and one-shot fitness rankings, all deterministic for a fixed
// seed (default 42).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dso/benchmarks.hpp"
#include "dso/errors.hpp"
#include "dso/fitness.hpp"
#include "dso/io.hpp"
#include "dso/scenario.hpp"
#include "dso/simulation.hpp"
#include "dso/tsp.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitDegenerateData = 3;

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write the report to this file instead of stdout");
    cmd->add_flag("--time", opts.timing, "Print wall-clock timing to stderr");
}

int emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(opts.out_path);
    if (!out) {
        std::cerr << "error: cannot write to '" << opts.out_path << "'\n";
        return kExitInputError;
    }
    out << text;
    return kExitOk;
}

std::string tour_lines_all_starts(const std::vector<dso::tsp::Tour>& tours) {
    std::ostringstream out;
    for (const auto& tour : tours)
        out << "Path from city " << (tour.start + 1) << ": "
            << dso::tsp_io::sequence_text(tour) << " weight = "
            << dso::format_number(tour.weight) << "\n";
    const auto best = dso::tsp::best_tour_indices(tours);
    out << "Best starting cities:";
    for (auto idx : best) out << ' ' << (tours[idx].start + 1);
    out << " (weight = " << dso::format_number(tours[best.front()].weight) << ")\n";
    return out.str();
}

std::string tour_lines_numbered(const std::vector<dso::tsp::Tour>& tours) {
    std::ostringstream out;
    for (std::size_t i = 0; i < tours.size(); ++i)
        out << "Path " << (i + 1) << " = " << dso::tsp_io::sequence_text(tours[i])
            << " weight = " << dso::format_number(tours[i].weight) << "\n";
    return out.str();
}

int run_tsp(const std::string& matrix_path, const std::string& mode, int start,
            const dso::tsp::AcoConfig& aco, const CommonOpts& opts) {
    const auto matrix = dso::tsp_io::load_distance_matrix_file(matrix_path);

    std::vector<dso::tsp::Tour> tours;
    std::string text;
    if (mode == "all-starts") {
        tours = dso::tsp::smuggler_all_starts(matrix);
        text = tour_lines_all_starts(tours);
    } else if (mode == "alternates") {
        tours = dso::tsp::alternate_paths(matrix, start - 1);
        text = tour_lines_numbered(tours);
    } else if (mode == "brute") {
        tours = {dso::tsp::brute_force_optimum(matrix)};
        text = "Optimal tour: " + dso::tsp_io::sequence_text(tours.front()) +
               " weight = " + dso::format_number(tours.front().weight) + "\n";
    } else {
        tours = {dso::tsp::aco_baseline(matrix, aco)};
        text = "Best tour: " + dso::tsp_io::sequence_text(tours.front()) +
               " weight = " + dso::format_number(tours.front().weight) + "\n";
    }

    return emit(opts, opts.format == "csv" ? dso::tsp_io::tours_csv(tours) : text);
}

int run_bench(const std::string& function_id, int runs, int population_size,
              std::uint64_t seed, const CommonOpts& opts) {
    const auto id = dso::bench::parse_bench_id(function_id);
    if (!id) {
        std::cerr << "error: unknown or out-of-scope benchmark function '" << function_id
                  << "' (available: F1..F8, F11, F13)\n";
        return kExitInputError;
    }
    const auto stats = dso::bench::run_statistics(dso::bench::benchmark(*id), runs,
                                                  population_size, seed);

    std::ostringstream out;
    if (opts.format == "csv") {
        out << "function,runs,population_size,avg,stddev,best_overall\n"
            << to_string(stats.id) << ',' << stats.runs << ',' << stats.population_size << ','
            << dso::format_number(stats.avg) << ',' << dso::format_number(stats.stddev) << ','
            << dso::format_number(stats.best_overall) << '\n';
    } else {
        out << to_string(stats.id) << "\tAvg\t" << dso::format_number(stats.avg) << '\n'
            << "\tStdDev\t" << dso::format_number(stats.stddev) << '\n'
            << "\tBest\t" << dso::format_number(stats.best_overall) << "\t(runs="
            << stats.runs << ", pop=" << stats.population_size << ")\n";
    }
    return emit(opts, out.str());
}

int run_route(const std::string& scenario_path, const CommonOpts& opts) {
    const auto scenario = dso::sim::load_scenario_file(scenario_path);
    const auto log = dso::sim::run(scenario);
    const auto format = opts.format == "csv" ? dso::sim::ReportFormat::CSV
                                             : dso::sim::ReportFormat::Text;
    std::string text = dso::sim::report(log, format);
    if (format == dso::sim::ReportFormat::Text)
        text = "Scenario: " + scenario.title + "\n" + text;
    return emit(opts, text);
}

int run_fitness(const std::string& population_path, const CommonOpts& opts) {
    const auto population = dso::load_population_file(population_path);
    const auto report = dso::rank(population);

    if (opts.format == "csv") return emit(opts, dso::fitness_report_csv(report));

    std::ostringstream out;
    out << "Active parameters:";
    for (const auto& name : report.active_params) out << ' ' << name;
    out << "\nRanking:\n";
    for (std::size_t i = 0; i < report.ranking.size(); ++i) {
        const auto& id = report.ranking[i];
        out << "  " << (i + 1) << ". " << id << "  fitness = "
            << dso::format_number(report.fitness_of(id)) << '\n';
    }
    return emit(opts, out.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Donkey and Smuggler Optimization toolkit"};
    app.require_subcommand(1);

    // tsp
    std::string matrix_path, tsp_mode = "all-starts";
    int tsp_start = 1;
    dso::tsp::AcoConfig aco;
    aco.seed = kDefaultSeed;
    CommonOpts tsp_opts;
    auto* tsp_cmd = app.add_subcommand("tsp", "Tour construction on a distance matrix");
    tsp_cmd->add_option("matrix", matrix_path, "CSV distance matrix")->required();
    tsp_cmd->add_option("mode", tsp_mode, "all-starts | alternates | brute | aco")
        ->check(CLI::IsMember({"all-starts", "alternates", "brute", "aco"}))
        ->capture_default_str();
    tsp_cmd->add_option("--start", tsp_start, "Departure city for alternates (1-based)")
        ->capture_default_str();
    tsp_cmd->add_option("--ants", aco.n_ants, "Ant count")->capture_default_str();
    tsp_cmd->add_option("--iterations", aco.iterations, "ACO iterations")
        ->capture_default_str();
    tsp_cmd->add_option("--rho", aco.rho, "Pheromone evaporation rate")
        ->capture_default_str();
    tsp_cmd->add_option("--seed", aco.seed, "RNG seed")->capture_default_str();
    add_common(tsp_cmd, tsp_opts);

    // bench
    std::string bench_function;
    int bench_runs = 30, bench_pop = 1000;
    std::uint64_t bench_seed = kDefaultSeed;
    CommonOpts bench_opts;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark-function statistics");
    bench_cmd->add_option("--function", bench_function, "F1..F8, F11, F13")->required();
    bench_cmd->add_option("--runs", bench_runs, "Independent runs")->capture_default_str();
    bench_cmd->add_option("--pop", bench_pop, "Random population size per run")
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench_seed, "Base RNG seed")->capture_default_str();
    add_common(bench_cmd, bench_opts);

    // route
    std::string scenario_path;
    CommonOpts route_opts;
    auto* route_cmd = app.add_subcommand("route", "Run a routing scenario");
    route_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
    add_common(route_cmd, route_opts);

    // fitness
    std::string population_path;
    CommonOpts fitness_opts;
    auto* fitness_cmd = app.add_subcommand("fitness", "Rank a population table");
    fitness_cmd->add_option("population", population_path, "Population table file")
        ->required();
    add_common(fitness_cmd, fitness_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    const auto started = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (tsp_cmd->parsed()) {
            code = run_tsp(matrix_path, tsp_mode, tsp_start, aco, tsp_opts);
        } else if (bench_cmd->parsed()) {
            code = run_bench(bench_function, bench_runs, bench_pop, bench_seed, bench_opts);
        } else if (route_cmd->parsed()) {
            code = run_route(scenario_path, route_opts);
        } else if (fitness_cmd->parsed()) {
            code = run_fitness(population_path, fitness_opts);
        }
    } catch (const dso::AllParametersConstant& e) {
        std::cerr << "error: " << e.what() << '\n';
        code = kExitDegenerateData;
    } catch (const dso::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        code = kExitInputError;
    }

    const bool timing = (tsp_cmd->parsed() && tsp_opts.timing) ||
                        (bench_cmd->parsed() && bench_opts.timing) ||
                        (route_cmd->parsed() && route_opts.timing) ||
                        (fitness_cmd->parsed() && fitness_opts.timing);
    if (timing) {
        const auto elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - started);
        std::cerr << "elapsed: " << elapsed.count() << " s\n";
    }
    return code;
}
