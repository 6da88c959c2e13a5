#pragma once

#include <cstdint>
#include <string_view>

namespace hpe {

// All randomness in the library flows through seeded splitmix64 streams.
// A stream is identified by (seed, domain tag); the tag keeps independent
// consumers (key generation, modulus search, root splitting, retry
// shuffles, ...) from sharing state, so every artifact is reproducible
// from the single 64-bit seed in its parameter set.
//
// Stream derivation: state0 = seed XOR fnv1a64(domain).

inline constexpr uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
    }
    return h;
}

class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    static SplitMix64 stream(uint64_t seed, std::string_view domain) {
        return SplitMix64(seed ^ fnv1a64(domain));
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool coin() { return next() & 1; }

  private:
    uint64_t state_;
};

}  // namespace hpe
