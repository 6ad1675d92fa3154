#pragma once

#include <cstdint>
#include <random>

namespace dso {

/// Seeded generator with a hand-rolled uniform mapping, so that identical
/// seeds give identical streams on every platform (std distributions are
/// implementation-defined).
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return engine_() % n;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace dso
