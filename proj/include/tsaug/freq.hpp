#pragma once

#include "tsaug/rng.hpp"
#include "tsaug/series.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace tsaug {

/// Non-redundant half of the DFT of a real series: bins 0..floor(n/2).
/// Bin 0 (and bin n/2 for even n) are purely real.
struct HalfSpectrum {
    std::vector<std::complex<double>> coeffs;
    std::size_t n = 0; // original series length

    std::size_t bins() const { return coeffs.size(); }
};

/// Forward DFT of a real series, restricted to the non-redundant half.
/// Unnormalized: a constant series c of length n has bin 0 == n*c.
HalfSpectrum rdft(const Series& x);

/// Inverse of rdft (includes the 1/n factor). Throws if the purely-real
/// constraints on bin 0 / the Nyquist bin are violated.
Series irdft(const HalfSpectrum& s);

/// Stratified Fourier coefficient combination: both parents' half-spectra
/// are split into `strata` contiguous equal-width bands (remainder to the
/// last band); each band is taken wholesale from one parent chosen
/// uniformly, and the assembled spectrum is inverted.
Series sfcc(const Series& x1, const Series& x2, std::size_t strata,
            RandomStream& stream);

} // namespace tsaug
