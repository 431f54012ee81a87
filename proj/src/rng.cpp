#include "rangehit/rng.hpp"

#include <stdexcept>

namespace rangehit {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    const std::uint64_t reject_below = (0 - span) % span;  // 2^64 mod span
    std::uint64_t x;
    do {
        x = engine_();
    } while (x < reject_below);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

}  // namespace rangehit
