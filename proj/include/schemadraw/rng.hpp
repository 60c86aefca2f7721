#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace schemadraw {

// Deterministic random source. Sampling goes through explicit rejection
// arithmetic on raw mt19937 words, so a seed pins down every draw exactly,
// independent of standard library distribution internals.
class Rng {
  public:
    explicit Rng(std::uint32_t seed) : engine_(seed) {}

    // Uniform value in [0, bound). bound must be positive.
    std::uint32_t below(std::uint32_t bound) {
        std::uint32_t threshold = (0u - bound) % bound;
        for (;;) {
            auto r = static_cast<std::uint32_t>(engine_());
            if (r >= threshold) return r % bound;
        }
    }

    bool coin() { return (static_cast<std::uint32_t>(engine_()) & 1u) != 0u; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(static_cast<std::uint32_t>(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937 engine_;
};

} // namespace schemadraw
