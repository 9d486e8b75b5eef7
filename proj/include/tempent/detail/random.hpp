#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tempent::detail {

// std::mt19937_64 has a fully specified output sequence; the transforms below
// avoid the implementation-defined standard distributions so draws are
// reproducible across standard libraries.
using Rng = std::mt19937_64;

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double standard_exponential(Rng& rng) {
    return -std::log1p(-uniform01(rng));
}

/// Uniform integer in [0, bound), bound > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
    return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(bound));
}

}  // namespace tempent::detail
