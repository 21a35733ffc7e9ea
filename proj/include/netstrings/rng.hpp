#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace netstrings {

// Deterministic random source with a fully documented algorithm so that
// edge lists are reproducible bit-exactly across platforms and standard
// libraries:
//
//   - engine: std::mt19937_64 seeded directly with the 64-bit seed (the
//     engine's output sequence is fixed by the C++ standard);
//   - uniform_below(n): rejection sampling on the top of the 64-bit range,
//     taking raw draws until one falls below 2^64 - (2^64 mod n);
//   - uniform01(): the top 53 bits of one draw scaled by 2^-53;
//   - bernoulli(p): uniform01() < p;
//   - shuffle: Fisher-Yates from the back, j = uniform_below(i + 1).
//
// std::uniform_int_distribution and friends are implementation-defined and
// deliberately not used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::uint64_t uniform_below(std::uint64_t n) {
        // n == 0 would be a caller bug; map to 0 to keep the stream advancing.
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        std::uint64_t draw = engine_();
        while (draw > limit) draw = engine_();
        return draw % n;
    }

    // Inclusive range.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace netstrings
