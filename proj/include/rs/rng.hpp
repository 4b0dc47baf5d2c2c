#pragma once

#include <cstdint>
#include <vector>

namespace rs {

// splitmix64: tiny deterministic generator, identical streams on every platform
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    // uniform in [a,b)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // uniform integer in [lo,hi] inclusive
    int64_t uniform_int(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(next() % span);
    }
};

// stable hash combining a seed with an index, used to derive per-object streams
inline uint64_t hash_combine(uint64_t seed, uint64_t idx) {
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1)));
    g.next();
    return g.next();
}

} // namespace rs
