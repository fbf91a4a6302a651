#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tsaug {

/// A univariate time series: ordered real samples, dimensionless after
/// normalization. Missing values are carried as NaN until sanitize() runs.
using Series = std::vector<double>;

struct LabeledSeries {
    Series values;
    std::string label;
};

enum class Split { train, test };

/// A named train/test split of labeled series.
struct Dataset {
    std::string name;
    Split split = Split::train;
    std::vector<LabeledSeries> items;
    std::set<std::string> classes;
    /// Present iff every series has the same length.
    std::optional<std::size_t> fixed_length;

    std::size_t size() const { return items.size(); }

    /// Recomputes classes and fixed_length from items.
    void refresh_metadata();
};

/// Train-split extrema used for the [-1, 1] rescale.
struct NormalizationParams {
    double train_min = 0.0;
    double train_max = 0.0;
};

/// Replaces every non-finite sample with zero. Idempotent.
Series sanitize(const Series& x);

/// Global min/max over all training samples (non-finite samples are skipped,
/// so fitting before or after sanitize() gives the same result on UCR data).
NormalizationParams fit_normalizer(const Dataset& train);

/// y = 2 * (x - min) / (max - min) - 1. A degenerate fit (max == min) maps
/// everything to zero.
Series apply_normalizer(const Series& x, const NormalizationParams& params);

Dataset apply_normalizer(const Dataset& ds, const NormalizationParams& params);

/// Piecewise-linear resample of x at m evenly spaced positions over
/// [0, n-1]. Endpoints are preserved; m == n reproduces x exactly.
Series linear_resample(const Series& x, std::size_t m);

/// Linear interpolation of the points (xs[i], ys[i]) at position q.
/// xs must be strictly increasing; q is clamped to [xs.front(), xs.back()].
double interp_at(const std::vector<double>& xs, const std::vector<double>& ys,
                 double q);

} // namespace tsaug
