#pragma once

#include <cstdint>
#include <random>

namespace dreem {

/// Deterministic random stream used by one replication.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard, and
/// converts to doubles with an explicit 53-bit mapping instead of
/// std::uniform_real_distribution (whose algorithm is implementation-defined).
/// Same seed and same call sequence give the same values on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for replication `index` of master seed `master`.
    static Rng substream(std::uint64_t master, std::uint64_t index) {
        std::uint64_t state = master;
        std::uint64_t mixed = splitmix64(state);
        state = mixed ^ (index * 0xD1B54A32D192ED03ULL);
        return Rng(splitmix64(state));
    }

    /// Uniform double on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// True with probability p.
    bool bernoulli(double p) { return uniform() < p; }

private:
    static std::uint64_t splitmix64(std::uint64_t& state) {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace dreem
