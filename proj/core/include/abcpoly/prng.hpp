// Deterministic pseudo-random source (splitmix64). All randomized code in the
// toolkit draws from this so that a recorded seed reproduces a run bit-exactly
// on any platform; std::uniform_int_distribution is implementation-defined and
// therefore avoided.
#pragma once

#include <cstdint>

namespace abcpoly {

class Prng {
   public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], both inclusive. Rejection sampling keeps the
    // distribution exact.
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    bool chance(unsigned num, unsigned den) {
        return uniform(1, den) <= static_cast<long>(num);
    }

    // Independent stream for a worker partition, derived from this state.
    Prng fork(std::uint64_t stream) const {
        Prng child(state_ ^ (0xd1342543de82ef95ULL * (stream + 1)));
        child.next();
        return child;
    }

   private:
    std::uint64_t state_;
};

}  // namespace abcpoly
