#include "dso/population.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "dso/errors.hpp"

namespace dso {

std::string_view to_string(Direction d) {
    return d == Direction::Direct ? "Direct" : "Inverse";
}

std::string_view to_string(Objective o) {
    return o == Objective::Maximize ? "Maximize" : "Minimize";
}

std::optional<double> Solution::value_of(std::string_view param) const {
    for (const auto& [name, value] : values) {
        if (name == param) return value;
    }
    return std::nullopt;
}

bool Solution::set(std::string_view param, double value) {
    for (auto& [name, stored] : values) {
        if (name == param) {
            stored = value;
            return true;
        }
    }
    return false;
}

const Solution* Population::find(std::string_view id) const {
    for (const auto& s : solutions) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

Solution* Population::find(std::string_view id) {
    for (auto& s : solutions) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

void Population::validate() const {
    std::unordered_set<std::string> names;
    for (const auto& spec : specs) {
        if (spec.name.empty()) throw ValidationError("parameter with empty name");
        if (!names.insert(spec.name).second)
            throw ValidationError("duplicate parameter name '" + spec.name + "'");
    }

    if (solutions.empty()) throw ValidationError("population has no solutions");

    std::unordered_set<std::string> ids;
    for (const auto& s : solutions) {
        if (s.id.empty()) throw ValidationError("solution with empty id");
        if (!ids.insert(s.id).second)
            throw ValidationError("duplicate solution id '" + s.id + "'");
        if (s.values.size() != specs.size())
            throw ValidationError("solution '" + s.id + "' has " +
                                  std::to_string(s.values.size()) + " values, expected " +
                                  std::to_string(specs.size()));
        for (const auto& spec : specs) {
            auto v = s.value_of(spec.name);
            if (!v)
                throw ValidationError("solution '" + s.id + "' is missing parameter '" +
                                      spec.name + "'");
            if (!std::isfinite(*v))
                throw ValidationError("solution '" + s.id + "' has non-finite value for '" +
                                      spec.name + "'");
        }
    }
}

} // namespace dso
