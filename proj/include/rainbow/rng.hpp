#ifndef RAINBOW_RNG_HPP
#define RAINBOW_RNG_HPP

#include <cstdint>
#include <random>

namespace rainbow {

// Randomness contract, kept deliberately small so instances and trials
// reproduce across implementations:
//   * the raw generator is std::mt19937_64 (bit-exact per the C++ standard),
//   * bounded integers come from top-rejection below, never from
//     std::uniform_int_distribution (whose mapping is unspecified),
//   * unit doubles take the top 53 bits of one draw,
//   * seed chains advance with the splitmix64 finalizer.

// splitmix64 output function (Steele/Lea/Flood). Advances state, returns the mix.
inline std::uint64_t splitmix64_next(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derived seed for trial/row (master, a, b); order-independent execution safe.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = master ^ (a * 0x100000001B3ULL) ^ (b + 0x9E3779B97F4A7C15ULL);
    std::uint64_t mixed = splitmix64_next(s);
    return mixed;
}

// Unbiased integer in [0, bound) by rejecting draws from the incomplete top block.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double next_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace rainbow

#endif
