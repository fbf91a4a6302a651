#pragma once

#include <cstdint>
#include <cstddef>

namespace tsaug {

/// Deterministic counter-based random stream.
///
/// A stream is keyed by a master seed plus a lane (sample_index, copy_index,
/// op_tag). Identical keys always replay the same draw sequence; distinct
/// lanes produce statistically independent sequences. This is what makes the
/// augmentation pipeline reproducible byte-for-byte regardless of how work is
/// scheduled across threads.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed,
                 std::uint64_t sample_index = 0,
                 std::uint64_t copy_index = 0,
                 std::uint64_t op_tag = 0);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform();

    /// Uniform integer in [0, n). Requires n >= 1.
    std::size_t uniform_index(std::size_t n);

    /// Standard normal draw (Box-Muller; two uniforms per pair, one cached).
    double gauss();

    /// Normal draw with the given mean and standard deviation.
    double gauss(double mean, double stddev);

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace tsaug
