#pragma once

#include <cstdint>
#include <limits>

namespace spbox {

// splitmix64 finalizer (Steele/Lea/Flood); full-avalanche 64-bit mixer
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Derives the initial state of an independent substream from a master seed
// and a stream counter. Two mixing rounds so that structured counters
// (0, 1, 2, ...) land on unrelated points of the state space.
inline std::uint64_t derive_stream_key(std::uint64_t seed, std::uint64_t counter) noexcept {
    return mix64(mix64(seed + 0x9e3779b97f4a7c15ull) + counter * 0xd1342543de82ef95ull);
}

// splitmix64 generator. Streams are selected purely by their initial state,
// so a (seed, counter) pair names a reproducible sequence independent of
// how work is scheduled across threads.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t state) noexcept : state_(state) {}

    static Rng for_stream(std::uint64_t seed, std::uint64_t counter) noexcept {
        return Rng(derive_stream_key(seed, counter));
    }

    std::uint64_t next_u64() noexcept {
        state_ += 0x9e3779b97f4a7c15ull;
        ++consumed_;
        return mix64(state_);
    }

    // uniform double in [0, 1) with 53 random bits
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // number of variates drawn so far; used to audit fixed-consumption contracts
    std::uint64_t consumed() const noexcept { return consumed_; }

    // UniformRandomBitGenerator interface, for use with <random> distributions
    std::uint64_t operator()() noexcept { return next_u64(); }
    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept {
        return std::numeric_limits<std::uint64_t>::max();
    }

private:
    std::uint64_t state_;
    std::uint64_t consumed_ = 0;
};

}  // namespace spbox
