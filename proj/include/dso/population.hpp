#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dso {

/// Whether a parameter raises fitness as it grows (Direct, numerator of the
/// fitness ratio) or lowers it (Inverse, denominator).
enum class Direction { Direct, Inverse };

enum class Objective { Maximize, Minimize };

std::string_view to_string(Direction d);
std::string_view to_string(Objective o);

/// A named solution attribute together with its proportionality direction.
struct ParameterSpec {
    std::string name;
    Direction direction = Direction::Direct;

    bool operator==(const ParameterSpec&) const = default;
};

/// One candidate solution: an id plus its parameter values in spec order.
struct Solution {
    std::string id;
    std::vector<std::pair<std::string, double>> values;

    std::optional<double> value_of(std::string_view param) const;
    /// Overwrites the named parameter; returns false if absent.
    bool set(std::string_view param, double value);

    bool operator==(const Solution&) const = default;
};

/// The solution set evaluated by the smuggler pass.
struct Population {
    std::vector<ParameterSpec> specs;
    std::vector<Solution> solutions;
    Objective objective = Objective::Maximize;

    const Solution* find(std::string_view id) const;
    Solution* find(std::string_view id);

    /// Throws ValidationError unless every invariant holds: unique
    /// parameter names, unique solution ids, at least one solution, and
    /// every solution carrying exactly the declared parameters with
    /// finite values.
    void validate() const;

    bool operator==(const Population&) const = default;
};

/// True when the two fitness values are ordered best-first for the objective.
inline bool better(double a, double b, Objective o) {
    return o == Objective::Maximize ? a > b : a < b;
}

} // namespace dso
