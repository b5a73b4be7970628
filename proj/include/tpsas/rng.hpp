#pragma once

#include <cstdint>

namespace tpsas {

/// Counter-based pseudo-random stream: output i = mix64(key + i * golden).
/// The mixing function is the SplitMix64 finalizer, so draws are reproducible
/// across platforms and independent streams are obtained by key derivation
/// rather than by sharing state.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(derive(seed, stream)) {}

    std::uint64_t next_u64() {
        counter_ += 0x9E3779B97F4A7C15ULL;
        return mix(key_ ^ counter_);
    }

    /// Uniform draw in the open interval (0,1); never returns 0 or 1.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Deterministic key derivation, used for per-replicate substreams.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
        std::uint64_t k = mix(seed + 0x9E3779B97F4A7C15ULL);
        k = mix(k ^ (a + 0xBF58476D1CE4E5B9ULL));
        if (b != 0) k = mix(k ^ (b + 0x94D049BB133111EBULL));
        return k;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace tpsas
