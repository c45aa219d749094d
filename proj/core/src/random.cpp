#include "codemix/random.hpp"

#include <limits>

namespace codemix {

std::uint64_t Rng::below(std::uint64_t n) {
    // Reject the low (2^64 mod n) values so every residue is equally likely.
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % n;
    }
}

}  // namespace codemix
