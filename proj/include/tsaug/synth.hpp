#pragma once

#include "tsaug/series.hpp"

#include <cstdint>

namespace tsaug {

/// Deterministic synthetic datasets shaped like the UCR sets the benchmark
/// protocol uses. CBF follows the classic cylinder/bell/funnel process; the
/// other two are parametric stand-ins with the advertised train shapes
/// (ECG5000: 500 x 140, 5 classes; Fungi: 18 x 201, one item per class).
/// Identical (name, split, seed) always produces identical bytes.
namespace synth {

Dataset make_cbf(Split split, std::size_t items_per_class = 0,
                 std::uint64_t seed = 0x5eedCBFULL);

Dataset make_ecg5000(Split split, std::uint64_t seed = 0x5eedEC6ULL);

Dataset make_fungi(Split split, std::uint64_t seed = 0x5eedF46ULL);

/// Generates the named dataset ("cbf", "ecg5000", "fungi") with its default
/// shape. Throws on an unknown name.
Dataset make(const std::string& name, Split split);

} // namespace synth

} // namespace tsaug
