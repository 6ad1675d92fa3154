#include "dso/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>

#include "dso/errors.hpp"
#include "text_util.hpp"

namespace dso::sim {

std::string_view to_string(EventKind k) {
    switch (k) {
    case EventKind::ParamChange: return "ParamChange";
    case EventKind::Overload: return "Overload";
    case EventKind::Recovery: return "Recovery";
    }
    return "?";
}

void Scenario::validate() const {
    population.validate();

    long previous = 0;
    bool first = true;
    for (const auto& event : events) {
        if (!first && event.tick < previous)
            throw ValidationError("events out of order: tick " + std::to_string(event.tick) +
                                  " after tick " + std::to_string(previous));
        previous = event.tick;
        first = false;

        const Solution* target = population.find(event.target);
        if (!target)
            throw ValidationError("event at tick " + std::to_string(event.tick) +
                                  " references unknown path '" + event.target + "'");
        for (const auto& [param, value] : event.changes) {
            if (!target->value_of(param))
                throw ValidationError("event at tick " + std::to_string(event.tick) +
                                      " references unknown parameter '" + param + "'");
            if (!std::isfinite(value))
                throw ValidationError("event at tick " + std::to_string(event.tick) +
                                      " carries a non-finite value for '" + param + "'");
        }
        for (const auto& param : event.restore_params) {
            if (!target->value_of(param))
                throw ValidationError("event at tick " + std::to_string(event.tick) +
                                      " restores unknown parameter '" + param + "'");
        }
    }
}

namespace {

enum class Section { None, Title, Specs, Objective, Policy, Paths, Events };

Section section_of(std::string_view name, std::string_view source, int line) {
    if (name == "title") return Section::Title;
    if (name == "specs") return Section::Specs;
    if (name == "objective") return Section::Objective;
    if (name == "policy") return Section::Policy;
    if (name == "paths") return Section::Paths;
    if (name == "events") return Section::Events;
    throw ParseError(std::string(source) + ", line " + std::to_string(line) +
                     ": unknown section [" + std::string(name) + "]");
}

TimedEvent parse_event(std::string_view text, std::string_view source, int line) {
    const auto fields = detail::split(text, ',');
    if (fields.size() < 3)
        throw ParseError(std::string(source) + ", line " + std::to_string(line) +
                         ": event needs at least tick, kind, target");

    TimedEvent event;
    event.tick = detail::parse_long(fields[0], source, line);

    const auto kind = fields[1];
    if (kind == "ParamChange")
        event.kind = EventKind::ParamChange;
    else if (kind == "Overload")
        event.kind = EventKind::Overload;
    else if (kind == "Recovery")
        event.kind = EventKind::Recovery;
    else
        throw ParseError(std::string(source) + ", line " + std::to_string(line) +
                         ": unknown event kind '" + std::string(kind) + "'");

    if (!detail::valid_identifier(fields[2]))
        throw ParseError(std::string(source) + ", line " + std::to_string(line) +
                         ": bad event target '" + std::string(fields[2]) + "'");
    event.target = std::string(fields[2]);

    for (std::size_t i = 3; i < fields.size(); ++i) {
        const auto field = fields[i];
        switch (event.kind) {
        case EventKind::ParamChange: {
            const auto eq = field.find('=');
            if (eq == std::string_view::npos)
                throw ParseError(std::string(source) + ", line " + std::to_string(line) +
                                 ": ParamChange expects param=value, got '" +
                                 std::string(field) + "'");
            const auto param = detail::trim(field.substr(0, eq));
            if (!detail::valid_identifier(param))
                throw ParseError(std::string(source) + ", line " + std::to_string(line) +
                                 ": bad parameter name '" + std::string(param) + "'");
            event.changes.emplace_back(
                std::string(param),
                detail::parse_double(detail::trim(field.substr(eq + 1)), source, line));
            break;
        }
        case EventKind::Recovery:
            if (field.find('=') != std::string_view::npos)
                throw ParseError(std::string(source) + ", line " + std::to_string(line) +
                                 ": Recovery lists bare parameter names, got '" +
                                 std::string(field) + "'");
            if (!detail::valid_identifier(field))
                throw ParseError(std::string(source) + ", line " + std::to_string(line) +
                                 ": bad parameter name '" + std::string(field) + "'");
            event.restore_params.emplace_back(field);
            break;
        case EventKind::Overload:
            throw ParseError(std::string(source) + ", line " + std::to_string(line) +
                             ": Overload takes no parameters, got '" + std::string(field) +
                             "'");
        }
    }
    return event;
}

} // namespace

Scenario load_scenario(std::istream& in, std::string_view source_name) {
    Scenario scenario;
    scenario.title = std::string(source_name);

    Section section = Section::None;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty() || text.front() == '#') continue;

        if (text.front() == '[') {
            if (text.back() != ']')
                throw ParseError(std::string(source_name) + ", line " +
                                 std::to_string(line_no) + ": unterminated section header");
            section = section_of(text.substr(1, text.size() - 2), source_name, line_no);
            continue;
        }

        switch (section) {
        case Section::None:
            throw ParseError(std::string(source_name) + ", line " + std::to_string(line_no) +
                             ": content before any [section]");
        case Section::Title:
            scenario.title = std::string(text);
            break;
        case Section::Specs: {
            const auto eq = text.find('=');
            if (eq == std::string_view::npos)
                throw ParseError(std::string(source_name) + ", line " +
                                 std::to_string(line_no) +
                                 ": spec line must be 'name = Direct|Inverse'");
            const auto name = detail::trim(text.substr(0, eq));
            const auto direction = detail::trim(text.substr(eq + 1));
            if (!detail::valid_identifier(name))
                throw ParseError(std::string(source_name) + ", line " +
                                 std::to_string(line_no) + ": bad parameter name '" +
                                 std::string(name) + "'");
            if (direction != "Direct" && direction != "Inverse")
                throw ParseError(std::string(source_name) + ", line " +
                                 std::to_string(line_no) +
                                 ": direction must be Direct or Inverse, got '" +
                                 std::string(direction) + "'");
            scenario.population.specs.push_back(
                {std::string(name),
                 direction == "Direct" ? Direction::Direct : Direction::Inverse});
            break;
        }
        case Section::Objective:
            if (text == "Maximize")
                scenario.population.objective = Objective::Maximize;
            else if (text == "Minimize")
                scenario.population.objective = Objective::Minimize;
            else
                throw ParseError(std::string(source_name) + ", line " +
                                 std::to_string(line_no) +
                                 ": objective must be Maximize or Minimize");
            break;
        case Section::Policy:
            if (text == "Run")
                scenario.policy = Reaction::Run;
            else if (text == "FaceAndSuicide")
                scenario.policy = Reaction::FaceAndSuicide;
            else if (text == "FaceAndSupport")
                scenario.policy = Reaction::FaceAndSupport;
            else
                throw ParseError(std::string(source_name) + ", line " +
                                 std::to_string(line_no) +
                                 ": policy must be Run, FaceAndSuicide or FaceAndSupport");
            break;
        case Section::Paths: {
            const auto fields = detail::split(text, ',');
            if (fields.size() != scenario.population.specs.size() + 1)
                throw ParseError(std::string(source_name) + ", line " +
                                 std::to_string(line_no) + ": expected id plus " +
                                 std::to_string(scenario.population.specs.size()) +
                                 " values, got " + std::to_string(fields.size()) + " fields");
            if (!detail::valid_identifier(fields[0]))
                throw ParseError(std::string(source_name) + ", line " +
                                 std::to_string(line_no) + ": bad path id '" +
                                 std::string(fields[0]) + "'");
            Solution path;
            path.id = std::string(fields[0]);
            for (std::size_t i = 0; i < scenario.population.specs.size(); ++i)
                path.values.emplace_back(
                    scenario.population.specs[i].name,
                    detail::parse_double(fields[i + 1], source_name, line_no));
            scenario.population.solutions.push_back(std::move(path));
            break;
        }
        case Section::Events:
            scenario.events.push_back(parse_event(text, source_name, line_no));
            break;
        }
    }

    scenario.validate();
    return scenario;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file '" + path + "'");
    return load_scenario(in, path);
}

} // namespace dso::sim
