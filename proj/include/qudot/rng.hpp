#ifndef QUDOT_RNG_HPP
#define QUDOT_RNG_HPP

#include <cstdint>
#include <string_view>

namespace qudot {

/// Name recorded in run reports so results can be replayed elsewhere.
inline constexpr std::string_view kRngAlgorithm = "xoshiro256++";

namespace detail {

// SplitMix64 finalizer; used for seeding and for deriving per-shot streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

/// xoshiro256++ with SplitMix64 seeding. Uniform doubles take the top 53
/// bits of the output, so sequences are identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = detail::splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4]{};
};

/// Derives the seed for an independent stream (e.g. shot i of an ensemble).
/// Pure function of (master, stream), so ensembles are reproducible no
/// matter how shots are scheduled across workers.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (0xd1b54a32d192ed03ULL * (stream + 1));
    return detail::splitmix64(s);
}

}  // namespace qudot

#endif
