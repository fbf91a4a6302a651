#pragma once

#include "tsaug/rng.hpp"
#include "tsaug/series.hpp"

#include <complex>
#include <numbers>
#include <vector>

namespace test_support {

inline tsaug::Series random_series(tsaug::RandomStream& rng, std::size_t n,
                                   double lo = -1.0, double hi = 1.0) {
    tsaug::Series x(n);
    for (auto& v : x) v = lo + (hi - lo) * rng.uniform();
    return x;
}

/// Independent O(n^2) DFT oracle for the non-redundant half spectrum.
inline std::vector<std::complex<double>> naive_rdft(const tsaug::Series& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n / 2 + 1);
    for (std::size_t k = 0; k < out.size(); ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t t = 0; t < n; ++t) {
            const double angle = -2.0 * std::numbers::pi *
                static_cast<double>(k) * static_cast<double>(t) /
                static_cast<double>(n);
            acc += x[t] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[k] = acc;
    }
    return out;
}

inline double max_abs_diff(const tsaug::Series& a, const tsaug::Series& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return a.size() == b.size() ? m : std::numeric_limits<double>::infinity();
}

inline double min_of(const tsaug::Series& x) {
    return *std::min_element(x.begin(), x.end());
}

inline double max_of(const tsaug::Series& x) {
    return *std::max_element(x.begin(), x.end());
}

inline double pearson(const tsaug::Series& a, const tsaug::Series& b) {
    const auto n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cov += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    return cov / std::sqrt(va * vb);
}

} // namespace test_support
