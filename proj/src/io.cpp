#include "dso/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "dso/errors.hpp"
#include "text_util.hpp"

namespace dso {

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

Population load_population_table(std::istream& in, std::string_view source_name) {
    Population population;
    std::string line;
    int line_no = 0;
    bool saw_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty() || text.front() == '#') continue;

        if (!saw_header) {
            // Header row: name:direction columns.
            for (const auto column : detail::split(text, ',')) {
                const auto colon = column.find(':');
                if (colon == std::string_view::npos)
                    throw ParseError(std::string(source_name) + ", line " +
                                     std::to_string(line_no) +
                                     ": header column must be name:direction, got '" +
                                     std::string(column) + "'");
                const auto name = detail::trim(column.substr(0, colon));
                const auto direction = detail::trim(column.substr(colon + 1));
                if (!detail::valid_identifier(name))
                    throw ParseError(std::string(source_name) + ", line " +
                                     std::to_string(line_no) + ": bad parameter name '" +
                                     std::string(name) + "'");
                if (direction != "Direct" && direction != "Inverse")
                    throw ParseError(std::string(source_name) + ", line " +
                                     std::to_string(line_no) +
                                     ": direction must be Direct or Inverse, got '" +
                                     std::string(direction) + "'");
                population.specs.push_back(
                    {std::string(name),
                     direction == "Direct" ? Direction::Direct : Direction::Inverse});
            }
            saw_header = true;
            continue;
        }

        const auto fields = detail::split(text, ',');
        if (fields.size() != population.specs.size() + 1)
            throw ParseError(std::string(source_name) + ", line " + std::to_string(line_no) +
                             ": expected id plus " + std::to_string(population.specs.size()) +
                             " values, got " + std::to_string(fields.size()) + " fields");
        if (!detail::valid_identifier(fields[0]))
            throw ParseError(std::string(source_name) + ", line " + std::to_string(line_no) +
                             ": bad solution id '" + std::string(fields[0]) + "'");
        Solution solution;
        solution.id = std::string(fields[0]);
        for (std::size_t i = 0; i < population.specs.size(); ++i) {
            solution.values.emplace_back(population.specs[i].name,
                                         detail::parse_double(fields[i + 1], source_name,
                                                              line_no));
        }
        population.solutions.push_back(std::move(solution));
    }

    if (!saw_header)
        throw ParseError(std::string(source_name) + ": missing header row");
    population.validate();
    return population;
}

Population load_population_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open population file '" + path + "'");
    return load_population_table(in, path);
}

std::string fitness_report_csv(const FitnessReport& report) {
    std::ostringstream out;
    out << "solution_id,fitness,rank\n";
    for (std::size_t i = 0; i < report.ranking.size(); ++i) {
        const auto& id = report.ranking[i];
        out << id << ',' << format_number(report.fitness_of(id)) << ',' << (i + 1) << '\n';
    }
    return out.str();
}

namespace tsp_io {

dso::tsp::DistanceMatrix load_distance_matrix(std::istream& in, std::string_view source_name) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty() || text.front() == '#') continue;
        std::vector<double> row;
        for (const auto field : detail::split(text, ','))
            row.push_back(detail::parse_double(field, source_name, line_no));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(std::string(source_name) + ": empty matrix");
    return dso::tsp::DistanceMatrix::from_rows(rows);
}

dso::tsp::DistanceMatrix load_distance_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    return load_distance_matrix(in, path);
}

std::string sequence_text(const dso::tsp::Tour& tour) {
    std::string out;
    for (std::size_t i = 0; i < tour.sequence.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(tour.sequence[i] + 1);
    }
    return out;
}

std::string tours_csv(std::span<const dso::tsp::Tour> tours) {
    std::ostringstream out;
    out << "start,sequence,weight\n";
    for (const auto& tour : tours)
        out << (tour.start + 1) << ',' << sequence_text(tour) << ','
            << format_number(tour.weight) << '\n';
    return out.str();
}

} // namespace tsp_io

} // namespace dso
