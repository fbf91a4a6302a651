#include "tsaug/synth.hpp"

#include "tsaug/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tsaug::synth {

namespace {

constexpr std::uint64_t split_tag(Split split) {
    return split == Split::train ? 1 : 2;
}

double bump(double t, double center, double width, double amp) {
    const double z = (t - center) / width;
    return amp * std::exp(-0.5 * z * z);
}

} // namespace

Dataset make_cbf(Split split, std::size_t items_per_class, std::uint64_t seed) {
    if (items_per_class == 0) {
        items_per_class = split == Split::train ? 10 : 300;
    }
    constexpr std::size_t length = 128;

    Dataset ds;
    ds.name = "CBF";
    ds.split = split;
    for (std::size_t cls = 0; cls < 3; ++cls) {
        for (std::size_t item = 0; item < items_per_class; ++item) {
            RandomStream rng(seed, split_tag(split), cls, item);
            const auto a = static_cast<double>(16 + rng.uniform_index(17));   // [16, 32]
            const auto span = static_cast<double>(32 + rng.uniform_index(65)); // [32, 96]
            const double b = std::min(a + span, static_cast<double>(length - 1));
            const double amp = 6.0 + rng.gauss();

            Series x(length);
            for (std::size_t i = 0; i < length; ++i) {
                const auto t = static_cast<double>(i);
                double shape = 0.0;
                if (t >= a && t <= b) {
                    if (cls == 0) shape = 1.0;                        // cylinder
                    else if (cls == 1) shape = (t - a) / (b - a);     // bell
                    else shape = (b - t) / (b - a);                   // funnel
                }
                x[i] = amp * shape + rng.gauss();
            }
            ds.items.push_back({std::move(x), std::to_string(cls + 1)});
        }
    }
    ds.refresh_metadata();
    return ds;
}

Dataset make_ecg5000(Split split, std::uint64_t seed) {
    constexpr std::size_t length = 140;
    // Train counts follow the real set's imbalance; the test split is a
    // desk-scale 300 items so the full benchmark stays fast.
    const std::size_t train_counts[5] = {292, 177, 10, 10, 11};
    const std::size_t test_counts[5] = {175, 105, 8, 8, 4};
    const std::size_t* counts = split == Split::train ? train_counts : test_counts;

    Dataset ds;
    ds.name = "ECG5000";
    ds.split = split;
    for (std::size_t cls = 0; cls < 5; ++cls) {
        for (std::size_t item = 0; item < counts[cls]; ++item) {
            RandomStream rng(seed, split_tag(split), cls, item);
            const double amp = rng.gauss(1.0, 0.35);
            const double shift = rng.gauss(0.0, 0.05);

            Series x(length);
            for (std::size_t i = 0; i < length; ++i) {
                const double t = static_cast<double>(i) / static_cast<double>(length) + shift;
                double v = 0.0;
                // overlapping morphologies keep the 1-NN baseline below 1
                switch (cls) {
                    case 0: // narrow QRS with upright T wave
                        v = bump(t, 0.30, 0.025, 6.0) - bump(t, 0.26, 0.02, 2.0) +
                            bump(t, 0.55, 0.05, 2.0);
                        break;
                    case 1: // broader QRS, flat T
                        v = bump(t, 0.31, 0.045, 5.2) + bump(t, 0.56, 0.06, 0.6);
                        break;
                    case 2: // like 1 but with an inverted T segment
                        v = bump(t, 0.32, 0.045, 5.0) - bump(t, 0.58, 0.05, 1.0);
                        break;
                    case 3: // low amplitude with baseline wander
                        v = std::sin(2.0 * std::numbers::pi * t) +
                            bump(t, 0.40, 0.08, 1.2);
                        break;
                    default: // wander plus a small late bump
                        v = std::sin(2.0 * std::numbers::pi * t + 0.3) +
                            bump(t, 0.62, 0.06, 1.0);
                        break;
                }
                x[i] = amp * v + rng.gauss(0.0, 1.0);
            }
            ds.items.push_back({std::move(x), std::to_string(cls + 1)});
        }
    }
    ds.refresh_metadata();
    return ds;
}

Dataset make_fungi(Split split, std::uint64_t seed) {
    constexpr std::size_t length = 201;
    constexpr std::size_t classes = 18;
    const std::size_t items_per_class = split == Split::train ? 1 : 3;

    Dataset ds;
    ds.name = "Fungi";
    ds.split = split;
    for (std::size_t cls = 0; cls < classes; ++cls) {
        for (std::size_t item = 0; item < items_per_class; ++item) {
            RandomStream rng(seed, split_tag(split), cls, item);
            // melt-curve-like sigmoids; the class signature is the midpoint
            // plus a sharp derivative-style peak whose position the DTW band
            // cannot absorb
            const double mid = 0.25 + 0.03 * static_cast<double>(cls);
            const double steep = 40.0 + 2.0 * static_cast<double>(cls % 5);
            const double peak = 0.10 + 0.045 * static_cast<double>((cls * 7) % 18);
            const double scale = rng.gauss(1.0, 0.02);

            Series x(length);
            for (std::size_t i = 0; i < length; ++i) {
                const double t = static_cast<double>(i) / static_cast<double>(length - 1);
                const double v = 1.0 / (1.0 + std::exp(steep * (t - mid))) +
                                 0.4 * bump(t, peak, 0.012, 1.0);
                x[i] = scale * v + rng.gauss(0.0, 0.01);
            }
            ds.items.push_back({std::move(x), std::to_string(cls + 1)});
        }
    }
    ds.refresh_metadata();
    return ds;
}

Dataset make(const std::string& name, Split split) {
    if (name == "cbf") return make_cbf(split);
    if (name == "ecg5000") return make_ecg5000(split);
    if (name == "fungi") return make_fungi(split);
    throw std::invalid_argument("synth::make: unknown dataset '" + name + "'");
}

} // namespace tsaug::synth
