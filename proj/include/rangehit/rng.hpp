// Seeded RNG with rejection-sampled bounded draws, so that identical seeds
// give identical streams on every platform (std::mt19937_64 output is fixed
// by the standard; std::uniform_int_distribution is not).
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rangehit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform draw from [lo, hi], inclusive, unbiased via rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace rangehit
