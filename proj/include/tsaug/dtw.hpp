#pragma once

#include "tsaug/series.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace tsaug {

enum class LocalCost { squared, absolute };

struct DtwParams {
    /// Sakoe-Chiba band half-width as a fraction of max(n, m); 1 means
    /// unconstrained. The band is always widened to at least the length
    /// difference so a monotone path exists.
    double window_fraction = 1.0;
    LocalCost local_cost = LocalCost::squared;
};

/// Monotone alignment between two series: starts at (0,0), ends at
/// (n-1, m-1), steps from {(+1,0), (0,+1), (+1,+1)}.
struct WarpPath {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct DtwResult {
    double distance = 0.0;
    WarpPath path;
};

/// Full dynamic program with backtracking. Ties in the backtrack prefer the
/// diagonal step, then the vertical (i-1, j), then the horizontal (i, j-1),
/// which keeps paths identical across platforms.
DtwResult dtw(const Series& x, const Series& y, const DtwParams& params = {});

/// Distance only, rolling rows. If `cutoff` is non-negative and every cell
/// of some row exceeds it, returns +infinity early; exact otherwise.
double dtw_distance(const Series& x, const Series& y,
                    const DtwParams& params = {}, double cutoff = -1.0);

/// dtw() with an absolute Sakoe-Chiba half-width instead of a fraction
/// (used for constrained sub-alignments, e.g. fixed-width bands that must
/// not rescale with a sub-problem's length).
DtwResult dtw_abs_band(const Series& x, const Series& y, std::size_t halfwidth,
                       LocalCost cost = LocalCost::squared);

/// Exhaustive enumeration of all admissible monotone paths. Test oracle;
/// refuses inputs with more than 8 samples per side.
double dtw_bruteforce(const Series& x, const Series& y,
                      const DtwParams& params = {});

/// Per-position raw subsequence descriptors with edge replication padding.
/// desc_window must be odd.
std::vector<std::vector<double>> shape_descriptors(const Series& x,
                                                   std::size_t desc_window);

/// DTW over descriptor space with squared Euclidean local cost. With
/// desc_window == 1 this reduces exactly to dtw() with squared cost.
DtwResult shape_dtw(const Series& x, const Series& y, std::size_t desc_window,
                    const DtwParams& params = {});

/// Default descriptor window: max(3, round(0.1 * n)) rounded up to odd.
std::size_t default_descriptor_window(std::size_t n);

} // namespace tsaug
