#pragma once

#include <cstdint>

namespace caudit::util {

// splitmix64; output sequence is platform independent for a given seed,
// unlike std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; rejection sampling, no modulo bias
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold)
                return r % bound;
        }
    }

    // uniform in [0, 1)
    double next_double() { return (next_u64() >> 11) * (1.0 / 9007199254740992.0); }

    // standard normal via Box-Muller
    double next_gaussian();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace caudit::util
