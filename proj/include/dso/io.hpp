#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "dso/fitness.hpp"
#include "dso/population.hpp"
#include "dso/tsp.hpp"

namespace dso {

/// Shortest decimal form that round-trips a double ("%.12g"); integral
/// values print without a decimal point.
std::string format_number(double value);

/// Loads the population table format: a header row of "name:direction"
/// columns, then one "id, v1, v2, ..." row per solution. '#' starts a
/// comment. Objective defaults to Maximize.
/// Throws ParseError / ValidationError.
Population load_population_table(std::istream& in, std::string_view source_name = "population");
Population load_population_file(const std::string& path);

/// CSV with columns (solution_id, fitness, rank), rows in ranking order.
std::string fitness_report_csv(const FitnessReport& report);

namespace tsp_io {

/// n rows of n comma-separated reals. Throws ParseError / ValidationError
/// naming the offending cell.
dso::tsp::DistanceMatrix load_distance_matrix(std::istream& in,
                                              std::string_view source_name = "matrix");
dso::tsp::DistanceMatrix load_distance_matrix_file(const std::string& path);

/// CSV rows (start, sequence, weight); cities are 1-based and the sequence
/// is space-separated.
std::string tours_csv(std::span<const dso::tsp::Tour> tours);

/// "2 5 3 4 1 2" — the tour's cities, 1-based.
std::string sequence_text(const dso::tsp::Tour& tour);

} // namespace tsp_io

} // namespace dso
