#include "tsaug/freq.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace tsaug {

namespace {

// FFTW plan creation/destruction is not thread safe; execution of a private
// plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanGuard {
    fftw_plan plan;
    ~PlanGuard() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
};

} // namespace

HalfSpectrum rdft(const Series& x) {
    const std::size_t n = x.size();
    if (n == 0) throw std::invalid_argument("rdft: empty series");

    HalfSpectrum s;
    s.n = n;
    s.coeffs.resize(n / 2 + 1);

    Series input = x; // FFTW wants non-const storage
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(
            static_cast<int>(n), input.data(),
            reinterpret_cast<fftw_complex*>(s.coeffs.data()), FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("rdft: fftw plan failed");
    PlanGuard guard{plan};
    fftw_execute(plan);

    // Bin 0 and (for even n) the Nyquist bin are real by construction.
    s.coeffs.front().imag(0.0);
    if (n % 2 == 0) s.coeffs.back().imag(0.0);
    return s;
}

Series irdft(const HalfSpectrum& s) {
    const std::size_t n = s.n;
    if (n == 0 || s.coeffs.size() != n / 2 + 1) {
        throw std::invalid_argument("irdft: inconsistent spectrum");
    }
    const double tol = 1e-9 * (1.0 + std::abs(s.coeffs.front().real()));
    if (std::abs(s.coeffs.front().imag()) > tol) {
        throw std::invalid_argument("irdft: bin 0 must be real");
    }
    if (n % 2 == 0) {
        const double ntol = 1e-9 * (1.0 + std::abs(s.coeffs.back().real()));
        if (std::abs(s.coeffs.back().imag()) > ntol) {
            throw std::invalid_argument("irdft: Nyquist bin must be real");
        }
    }

    std::vector<std::complex<double>> spec = s.coeffs; // c2r destroys input
    Series out(n);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_c2r_1d(
            static_cast<int>(n), reinterpret_cast<fftw_complex*>(spec.data()),
            out.data(), FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("irdft: fftw plan failed");
    PlanGuard guard{plan};
    fftw_execute(plan);

    const double inv = 1.0 / static_cast<double>(n);
    for (double& v : out) v *= inv;
    return out;
}

Series sfcc(const Series& x1, const Series& x2, std::size_t strata,
            RandomStream& stream) {
    if (x1.size() != x2.size()) {
        throw std::invalid_argument("sfcc: parents must have equal length");
    }
    if (x1.empty()) throw std::invalid_argument("sfcc: empty parents");
    if (strata < 1) throw std::invalid_argument("sfcc: strata must be >= 1");

    HalfSpectrum a = rdft(x1);
    HalfSpectrum b = rdft(x2);
    const std::size_t bins = a.bins();
    const std::size_t bands = std::min(strata, bins);
    const std::size_t width = bins / bands;

    HalfSpectrum mixed;
    mixed.n = a.n;
    mixed.coeffs.resize(bins);
    for (std::size_t band = 0; band < bands; ++band) {
        const std::size_t lo = band * width;
        const std::size_t hi = (band + 1 == bands) ? bins : lo + width;
        const bool from_first = stream.uniform_index(2) == 0;
        const auto& src = from_first ? a.coeffs : b.coeffs;
        for (std::size_t k = lo; k < hi; ++k) mixed.coeffs[k] = src[k];
    }
    return irdft(mixed);
}

} // namespace tsaug
