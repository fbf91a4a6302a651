#pragma once

#include "tsaug/series.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace tsaug {

/// Decomposition result: IMF 1 carries the fastest oscillation. The
/// components always sum back to the input (within rounding).
struct ImfSet {
    std::vector<Series> imfs;
    Series residual;
};

struct EmdParams {
    std::size_t max_imfs = 10;
    double sd_threshold = 0.3;
    std::size_t max_sifts = 50;
    std::size_t k = 2; // leading IMFs kept by the augmenter
};

/// Strict interior extrema by 3-point comparison; a plateau contributes its
/// midpoint once.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
find_extrema(const Series& x);

/// Zero-crossing count (sign changes, zeros attributed to the previous sign).
std::size_t zero_crossings(const Series& x);

/// Empirical mode decomposition by sifting with natural-spline envelopes
/// through mirror-extended extrema. Inputs without enough extrema yield zero
/// IMFs and residual == x.
ImfSet emd(const Series& x, const EmdParams& params = {});

/// Sum of the first min(k, available) IMFs; when the decomposition yields no
/// IMFs the input is returned unchanged and *no_imfs (if given) is set.
Series emd_augment(const Series& x, std::size_t k, const EmdParams& params = {},
                   bool* no_imfs = nullptr);

} // namespace tsaug
