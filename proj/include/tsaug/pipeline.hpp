#pragma once

#include "tsaug/emd.hpp"
#include "tsaug/pattern.hpp"
#include "tsaug/series.hpp"
#include "tsaug/transform.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsaug {

enum class MethodCategory { baseline, transformation, frequency, pattern, decomposition };

struct MethodInfo {
    std::string id;
    MethodCategory category = MethodCategory::baseline;
    std::uint64_t op_tag = 0; // stable lane component per method

    /// Category tag as printed by list-methods: "transformation", "pattern",
    /// "frequency(transformation)", "decomposition", or "-" for the baseline.
    std::string category_label() const;
};

/// The 19 evaluated identifiers: `none` plus the 18 augmentation methods.
const std::vector<MethodInfo>& list_methods();

const MethodInfo* find_method(const std::string& id);

struct UnknownMethodError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Consolidated per-method configuration; overridable via dotted keys
/// (e.g. "sfcc.strata", "emd.k", "jitter.sigma").
struct MethodParams {
    TransformDefaults transform;
    PatternParams pattern;
    EmdParams emd;
    std::size_t sfcc_strata = 4;

    /// Applies `key=value` overrides; throws std::invalid_argument on an
    /// unknown key or an unparsable value.
    void apply_override(const std::string& key, const std::string& value);
};

struct AugmentSpec {
    std::string method;
    std::map<std::string, std::string> params; // raw dotted-key overrides
    std::size_t factor = 4;
    std::uint64_t seed = 0;
};

/// A declarative run configuration: JSON document with fields
/// {dataset, method, params{...}, factor, seed}. `dataset` names the input
/// file; everything else populates the AugmentSpec. Unknown fields and
/// malformed values are rejected.
struct RunConfig {
    std::string dataset;
    AugmentSpec spec;
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

struct RunRecord {
    std::size_t sample_index = 0;
    std::size_t copy_index = 0;
    std::array<std::uint64_t, 3> lane{};
    std::vector<std::string> fallbacks;
    std::vector<std::string> warnings;
};

struct RunLog {
    std::string method;
    std::uint64_t seed = 0;
    std::size_t factor = 1;
    std::map<std::string, std::string> params;
    /// The expansion keeps the originals and adds (factor-1) copies each:
    /// factor 4 turns 30 items into 120 with 30 untouched originals.
    bool originals_preserved = true;
    std::vector<RunRecord> records;

    /// JSON lines: one metadata record, then one record per generated sample.
    void write_jsonl(const std::string& path) const;
};

/// Class-aware expansion: every original is kept, and factor-1 augmented
/// copies of each are appended, grouped by original index. Pattern methods
/// draw from a frozen ClassPool of the original split. Byte-identical output
/// for identical (dataset, spec) regardless of `jobs`.
std::pair<Dataset, RunLog> expand(const Dataset& train, const AugmentSpec& spec,
                                  std::size_t jobs = 1);

} // namespace tsaug
