#pragma once

#include <cmath>
#include <cstdint>

namespace hfrac {

namespace detail {

/// 64-bit finalizer (splitmix64). Bijective, passes the usual avalanche tests.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace detail

/// Counter-based random stream. A stream is keyed by (seed, a, b); draws are a
/// pure function of (key, counter), so any sample can be generated from its
/// indices alone. Streams are independent for distinct keys, which makes the
/// estimators embarrassingly parallel and bit-reproducible under any thread
/// partitioning.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
        key_ = detail::mix64(seed ^ 0x6a09e667f3bcc908ull);
        key_ = detail::mix64(key_ ^ detail::mix64(a ^ 0xbb67ae8584caa73bull));
        key_ = detail::mix64(key_ ^ detail::mix64(b ^ 0x3c6ef372fe94f82bull));
    }

    std::uint64_t next_u64() {
        return detail::mix64(key_ ^ (0x9e3779b97f4a7c15ull * ++ctr_));
    }

    /// Uniform in [0,1). 53-bit resolution.
    double u01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    /// Standard normal via Box-Muller (one value per call, no cached state).
    double normal() {
        double u1 = 0.0;
        do { u1 = u01(); } while (u1 <= 0.0);
        double u2 = u01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

private:
    std::uint64_t key_ = 0;
    std::uint64_t ctr_ = 0;
};

} // namespace hfrac
