#include "tsaug/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tsaug {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer; also used to fold lane components into the key.
std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

RandomStream::RandomStream(std::uint64_t master_seed,
                           std::uint64_t sample_index,
                           std::uint64_t copy_index,
                           std::uint64_t op_tag) {
    std::uint64_t s = mix(master_seed + kGamma);
    s = mix(s ^ (sample_index + kGamma));
    s = mix(s ^ (copy_index + kGamma));
    s = mix(s ^ (op_tag + kGamma));
    state_ = s;
}

std::uint64_t RandomStream::next_u64() {
    state_ += kGamma;
    return mix(state_);
}

double RandomStream::uniform() {
    // 53 high bits -> double in [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t RandomStream::uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: n must be >= 1");
#if defined(__SIZEOF_INT128__)
    // Lemire multiply-shift; bias is O(n / 2^64), irrelevant at our scales.
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::size_t>(m >> 64);
#else
    return static_cast<std::size_t>(next_u64() % n);
#endif
}

double RandomStream::gauss() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller. u1 is shifted into (0, 1] so the log is always finite.
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

double RandomStream::gauss(double mean, double stddev) {
    return mean + stddev * gauss();
}

} // namespace tsaug
