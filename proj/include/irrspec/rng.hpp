#ifndef IRRSPEC_RNG_HPP
#define IRRSPEC_RNG_HPP

#include <cstdint>
#include <limits>

namespace irrspec {

/// splitmix64 generator. The output stream depends only on the seed, so runs
/// are reproducible across platforms and compilers.
class Rng {
   public:
    explicit constexpr Rng(std::uint64_t seed = 0) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    constexpr std::uint64_t uniform(std::uint64_t bound) noexcept {
        if (bound <= 1) return 0;
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    constexpr std::uint64_t state() const noexcept { return state_; }

    /// Independent stream for shard `index` of a run seeded with `seed`.
    static constexpr Rng derive(std::uint64_t seed, std::uint64_t index) noexcept {
        Rng r(seed ^ index);
        return Rng(r.next());
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

   private:
    std::uint64_t state_;
};

}  // namespace irrspec

#endif  // IRRSPEC_RNG_HPP
