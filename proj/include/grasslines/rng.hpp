#pragma once

#include <cstdint>

#include "grasslines/rational.hpp"

namespace grasslines {

// Deterministic, splittable stream (splitmix64 core). Identical sequences on
// every platform; split(tag) derives an independent stream so concurrent
// consumers never share state.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // inclusive bounds
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rat rat_int(long bound) { return Rat(uniform(-bound, bound)); }

    Vec vec(size_t len, long bound, bool nonzero = true) {
        for (;;) {
            Vec v(len);
            for (auto& x : v) x = rat_int(bound);
            if (!nonzero || !is_zero_vec(v)) return v;
        }
    }

    Rng split(uint64_t tag) {
        uint64_t s = state_;
        s ^= tag * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
        return Rng(s);
    }

private:
    uint64_t state_;
};

inline constexpr long kDefaultCoordBound = 20;

} // namespace grasslines
