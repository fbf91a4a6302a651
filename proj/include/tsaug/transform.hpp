#pragma once

#include "tsaug/rng.hpp"
#include "tsaug/series.hpp"

#include <vector>

namespace tsaug {

/// Defaults follow each method's original publication; every value is
/// overridable through the pipeline's params mechanism.
struct TransformDefaults {
    double jitter_sigma = 0.03;
    double scale_sigma = 0.1;
    double mag_warp_sigma = 0.2;
    std::size_t mag_warp_knots = 4;
    double time_warp_sigma = 0.2;
    std::size_t time_warp_knots = 4;
    std::size_t perm_segments = 4;
    double slice_ratio = 0.9;
    double window_ratio = 0.1;
    std::vector<double> window_scales{0.5, 2.0};
};

/// y_i = x_i + Normal(0, sigma^2), one draw per sample.
Series jitter(const Series& x, double sigma, RandomStream& stream);

/// Univariate rotation: sign flip.
Series flip_rotation(const Series& x);

/// y = s * x with a single s ~ Normal(1, sigma^2) per call.
Series scaling(const Series& x, double sigma, RandomStream& stream);

/// Elementwise product with a smooth random curve (knots+2 spline anchors,
/// anchor values Normal(1, sigma^2)).
Series magnitude_warp(const Series& x, double sigma, std::size_t knots,
                      RandomStream& stream);

/// Contiguous equal blocks (remainder joins the last block) emitted in a
/// uniformly random order.
Series permutation(const Series& x, std::size_t segments, RandomStream& stream);

/// Blocks with random distinct split points (every segment length >= 1),
/// then shuffled.
Series random_permutation(const Series& x, std::size_t segments,
                          RandomStream& stream);

/// Smooth random speed curve (clamped below at 1e-3), cumulated and rescaled
/// to [0, n-1]; the series is re-interpolated on the integer grid.
Series time_warp(const Series& x, double sigma, std::size_t knots,
                 RandomStream& stream);

/// Random window of ceil(slice_ratio * n) samples, stretched back to n.
Series window_slice(const Series& x, double slice_ratio, RandomStream& stream);

/// Random window of ceil(window_ratio * n) samples resampled by a scale
/// drawn from `scales`, spliced back, whole series resampled to n.
Series window_warp(const Series& x, double window_ratio,
                   const std::vector<double>& scales, RandomStream& stream);

/// Reassembles equal blocks of x in the given order (testing seam for the
/// permutation ops).
Series reorder_blocks(const Series& x, std::size_t segments,
                      const std::vector<std::size_t>& order);

} // namespace tsaug
