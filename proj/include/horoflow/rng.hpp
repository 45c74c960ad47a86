#pragma once

#include <cstdint>

namespace horoflow {

// Deterministic, platform-independent RNG (xoshiro256** seeded via splitmix64).
// std::uniform_real_distribution is implementation-defined, so byte-identical
// experiment outputs require hand-rolled draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // [0, 1)
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // [lo, hi)
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // {0, ..., n-1}, n small; modulo bias is irrelevant at our n
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // Independent stream for a worker, stable under scheduling.
    static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
        std::uint64_t x = master_seed;
        std::uint64_t a = splitmix64(x);
        x = index + 0x9e3779b97f4a7c15ULL;
        std::uint64_t b = splitmix64(x);
        return Rng(a ^ rotl(b, 31));
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace horoflow
