#pragma once

#include <cstdint>
#include <random>

namespace desir {

/// mt19937_64 with a portable bounded draw, so instances are reproducible
/// across standard libraries (std::uniform_int_distribution is not).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
        std::uint64_t draw = engine_();
        while (draw >= limit) {
            draw = engine_();
        }
        return lo + static_cast<std::int64_t>(draw % span);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }
    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 engine_;
};

} // namespace desir
