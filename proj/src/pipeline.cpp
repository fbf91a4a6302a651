#include "tsaug/pipeline.hpp"

#include "tsaug/freq.hpp"
#include "tsaug/parallel.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace tsaug {

namespace {

std::vector<MethodInfo> build_registry() {
    std::vector<MethodInfo> methods = {
        {"none", MethodCategory::baseline, 0},
        {"jitter", MethodCategory::transformation, 1},
        {"rotation", MethodCategory::transformation, 2},
        {"scaling", MethodCategory::transformation, 3},
        {"magnitude_warp", MethodCategory::transformation, 4},
        {"permutation", MethodCategory::transformation, 5},
        {"random_permutation", MethodCategory::transformation, 6},
        {"time_warp", MethodCategory::transformation, 7},
        {"window_slice", MethodCategory::transformation, 8},
        {"window_warp", MethodCategory::transformation, 9},
        {"sfcc", MethodCategory::frequency, 10},
        {"spawner", MethodCategory::pattern, 11},
        {"wdba", MethodCategory::pattern, 12},
        {"rgw", MethodCategory::pattern, 13},
        {"rgws", MethodCategory::pattern, 14},
        {"dgw", MethodCategory::pattern, 15},
        {"dgws", MethodCategory::pattern, 16},
        {"dtw_merge", MethodCategory::pattern, 17},
        {"emd", MethodCategory::decomposition, 18},
    };
    return methods;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
    }
}

std::size_t parse_size(const std::string& key, const std::string& value) {
    double v = parse_double(key, value);
    if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
        throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
    }
    return static_cast<std::size_t>(v);
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(parse_double(key, tok));
    }
    if (out.empty()) throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
    return out;
}

} // namespace

std::string MethodInfo::category_label() const {
    switch (category) {
        case MethodCategory::baseline: return "-";
        case MethodCategory::transformation: return "transformation";
        case MethodCategory::frequency: return "frequency(transformation)";
        case MethodCategory::pattern: return "pattern";
        case MethodCategory::decomposition: return "decomposition";
    }
    return "-";
}

const std::vector<MethodInfo>& list_methods() {
    static const std::vector<MethodInfo> registry = build_registry();
    return registry;
}

const MethodInfo* find_method(const std::string& id) {
    for (const auto& m : list_methods()) {
        if (m.id == id) return &m;
    }
    return nullptr;
}

void MethodParams::apply_override(const std::string& key, const std::string& value) {
    auto require = [&](bool ok, const char* what) {
        if (!ok) {
            throw std::invalid_argument("bad value for " + key + ": '" + value +
                                        "' (" + what + ")");
        }
    };
    auto nonneg = [&]() {
        double v = parse_double(key, value);
        require(v >= 0.0, "must be >= 0");
        return v;
    };
    auto positive_size = [&]() {
        std::size_t v = parse_size(key, value);
        require(v >= 1, "must be >= 1");
        return v;
    };

    if (key == "jitter.sigma") transform.jitter_sigma = nonneg();
    else if (key == "scaling.sigma") transform.scale_sigma = nonneg();
    else if (key == "magnitude_warp.sigma") transform.mag_warp_sigma = nonneg();
    else if (key == "magnitude_warp.knots") transform.mag_warp_knots = positive_size();
    else if (key == "time_warp.sigma") transform.time_warp_sigma = nonneg();
    else if (key == "time_warp.knots") transform.time_warp_knots = positive_size();
    else if (key == "permutation.segments") transform.perm_segments = positive_size();
    else if (key == "window_slice.ratio") {
        transform.slice_ratio = parse_double(key, value);
        require(transform.slice_ratio > 0.0 && transform.slice_ratio <= 1.0,
                "must be in (0, 1]");
    }
    else if (key == "window_warp.ratio") {
        transform.window_ratio = parse_double(key, value);
        require(transform.window_ratio > 0.0 && transform.window_ratio < 1.0,
                "must be in (0, 1)");
    }
    else if (key == "window_warp.scales") {
        transform.window_scales = parse_list(key, value);
        for (double s : transform.window_scales) require(s > 0.0, "scales must be > 0");
    }
    else if (key == "sfcc.strata") sfcc_strata = positive_size();
    else if (key == "dtw.window_fraction") {
        pattern.align.window_fraction = parse_double(key, value);
        require(pattern.align.window_fraction >= 0.0 &&
                pattern.align.window_fraction <= 1.0, "must be in [0, 1]");
    }
    else if (key == "dtw.local_cost") {
        if (value == "squared") pattern.align.local_cost = LocalCost::squared;
        else if (value == "absolute") pattern.align.local_cost = LocalCost::absolute;
        else require(false, "must be squared or absolute");
    }
    else if (key == "dtw.desc_window") {
        pattern.desc_window = parse_size(key, value);
        require(pattern.desc_window == 0 || pattern.desc_window % 2 == 1,
                "must be odd (0 selects the default)");
    }
    else if (key == "dgw.batch") pattern.dgw_batch = positive_size();
    else if (key == "spawner.sigma") pattern.spawner_sigma = nonneg();
    else if (key == "spawner.band") {
        pattern.spawner_band = parse_double(key, value);
        require(pattern.spawner_band > 0.0 && pattern.spawner_band <= 1.0,
                "must be in (0, 1]");
    }
    else if (key == "wdba.iterations") pattern.wdba_iterations = parse_size(key, value);
    else if (key == "wdba.group_size") pattern.wdba_group_size = positive_size();
    else if (key == "emd.k") emd.k = positive_size();
    else if (key == "emd.max_imfs") emd.max_imfs = positive_size();
    else if (key == "emd.sd_threshold") emd.sd_threshold = nonneg();
    else throw std::invalid_argument("unknown parameter '" + key + "'");
}

RunConfig parse_run_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("run config: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("run config: expected an object");

    RunConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        if (key == "dataset") cfg.dataset = value.get<std::string>();
        else if (key == "method") cfg.spec.method = value.get<std::string>();
        else if (key == "factor") cfg.spec.factor = value.get<std::size_t>();
        else if (key == "seed") cfg.spec.seed = value.get<std::uint64_t>();
        else if (key == "params") {
            if (!value.is_object()) {
                throw std::invalid_argument("run config: params must be an object");
            }
            for (const auto& [k, v] : value.items()) {
                cfg.spec.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
            }
        } else {
            throw std::invalid_argument("run config: unknown field '" + key + "'");
        }
    }
    if (cfg.spec.method.empty()) {
        throw std::invalid_argument("run config: missing 'method'");
    }
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

void RunLog::write_jsonl(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");

    nlohmann::json meta{
        {"record", "run"},
        {"method", method},
        {"seed", seed},
        {"factor", factor},
        {"originals_preserved", originals_preserved},
        {"params", params},
    };
    out << meta.dump() << '\n';
    for (const auto& r : records) {
        nlohmann::json rec{
            {"record", "sample"},
            {"sample_index", r.sample_index},
            {"copy_index", r.copy_index},
            {"method", method},
            {"lane", {r.lane[0], r.lane[1], r.lane[2]}},
            {"fallbacks", r.fallbacks},
            {"warnings", r.warnings},
        };
        out << rec.dump() << '\n';
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

namespace {

struct ExpandContext {
    const Dataset& train;
    const MethodInfo& method;
    const MethodParams& params;
    const ClassPool* pool = nullptr;              // built for methods that need it
    std::vector<std::size_t> class_position;      // index of each item within its class pool
    std::uint64_t seed = 0;
};

bool needs_pool(const std::string& id) {
    return id == "sfcc" || id == "spawner" || id == "wdba" || id == "rgw" ||
           id == "rgws" || id == "dgw" || id == "dgws" || id == "dtw_merge";
}

/// Same-class candidates with a matching length, excluding the sample when
/// another candidate exists. Returns indices into the class pool.
std::vector<std::size_t> same_length_candidates(const ClassPool& pool,
                                                const std::string& label,
                                                std::size_t self_index,
                                                std::size_t length,
                                                bool require_length) {
    const auto& members = pool.members(label);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i == self_index) continue;
        if (require_length && members[i].size() != length) continue;
        out.push_back(i);
    }
    return out;
}

Series generate_copy(const ExpandContext& ctx, std::size_t sample_index,
                     std::size_t copy_index, RunRecord& record) {
    const LabeledSeries& item = ctx.train.items[sample_index];
    const Series& x = item.values;
    const std::string& id = ctx.method.id;
    const MethodParams& p = ctx.params;

    RandomStream stream(ctx.seed, sample_index, copy_index, ctx.method.op_tag);
    record.lane = {sample_index, copy_index, ctx.method.op_tag};

    if (id == "none") return x;
    if (id == "jitter") return jitter(x, p.transform.jitter_sigma, stream);
    if (id == "rotation") return flip_rotation(x);
    if (id == "scaling") return scaling(x, p.transform.scale_sigma, stream);
    if (id == "magnitude_warp") {
        return magnitude_warp(x, p.transform.mag_warp_sigma, p.transform.mag_warp_knots, stream);
    }
    if (id == "permutation") return permutation(x, p.transform.perm_segments, stream);
    if (id == "random_permutation") {
        return random_permutation(x, p.transform.perm_segments, stream);
    }
    if (id == "time_warp") {
        return time_warp(x, p.transform.time_warp_sigma, p.transform.time_warp_knots, stream);
    }
    if (id == "window_slice") return window_slice(x, p.transform.slice_ratio, stream);
    if (id == "window_warp") {
        return window_warp(x, p.transform.window_ratio, p.transform.window_scales, stream);
    }
    if (id == "emd") {
        bool no_imfs = false;
        Series out = emd_augment(x, p.emd.k, p.emd, &no_imfs);
        if (no_imfs) record.warnings.push_back("emd_zero_imfs:input_unchanged");
        return out;
    }

    // Pattern-family methods draw reference material from the frozen pool.
    const ClassPool& pool = *ctx.pool;
    const std::size_t self = ctx.class_position[sample_index];
    const std::string& label = item.label;

    if (pool.same_count(label) < 2) {
        record.fallbacks.push_back("single_exemplar_class:verbatim_copy");
        return x;
    }

    auto draw_partner = [&](bool require_length) -> const Series* {
        auto candidates = same_length_candidates(pool, label, self, x.size(), require_length);
        if (candidates.empty()) return nullptr;
        return &pool.members(label)[candidates[stream.uniform_index(candidates.size())]];
    };

    if (id == "sfcc") {
        const Series* partner = draw_partner(true);
        if (!partner) {
            record.fallbacks.push_back("no_same_length_partner:verbatim_copy");
            return x;
        }
        return sfcc(x, *partner, p.sfcc_strata, stream);
    }
    if (id == "spawner") {
        if (x.size() < 4) {
            record.fallbacks.push_back("series_too_short:verbatim_copy");
            return x;
        }
        const Series* partner = draw_partner(true);
        if (!partner) {
            record.fallbacks.push_back("no_same_length_partner:verbatim_copy");
            return x;
        }
        return spawner(x, *partner, p.pattern, stream);
    }
    if (id == "wdba") {
        auto candidates = same_length_candidates(pool, label, self, x.size(), true);
        if (candidates.empty()) {
            record.fallbacks.push_back("no_same_length_partner:verbatim_copy");
            return x;
        }
        std::vector<Series> group;
        group.push_back(x);
        const std::size_t extra = std::min(p.pattern.wdba_group_size - 1, candidates.size());
        // partial Fisher-Yates over candidate indices
        for (std::size_t k = 0; k < extra; ++k) {
            const std::size_t j = k + stream.uniform_index(candidates.size() - k);
            std::swap(candidates[k], candidates[j]);
            group.push_back(pool.members(label)[candidates[k]]);
        }
        return wdba(group, p.pattern, stream);
    }
    if (id == "rgw") return rgw(x, pool, label, p.pattern, stream, self);
    if (id == "rgws") return rgws(x, pool, label, p.pattern, stream, self);
    if (id == "dgw" || id == "dgws") {
        const bool use_shape = id == "dgws";
        if (pool.other_count(label) == 0) {
            record.fallbacks.push_back("no_other_class:rgw");
            return use_shape ? rgws(x, pool, label, p.pattern, stream, self)
                             : rgw(x, pool, label, p.pattern, stream, self);
        }
        return dgw(x, pool, label, p.pattern, stream, self, use_shape);
    }
    if (id == "dtw_merge") {
        if (x.size() < 2) {
            record.fallbacks.push_back("series_too_short:verbatim_copy");
            return x;
        }
        const Series* partner = draw_partner(false);
        if (!partner || partner->size() < 2) {
            record.fallbacks.push_back("no_partner:verbatim_copy");
            return x;
        }
        return dtw_merge(x, *partner, p.pattern, stream);
    }
    throw UnknownMethodError("unknown method '" + id + "'");
}

} // namespace

std::pair<Dataset, RunLog> expand(const Dataset& train, const AugmentSpec& spec,
                                  std::size_t jobs) {
    if (train.items.empty()) throw std::invalid_argument("expand: empty train split");
    if (spec.factor < 1) throw std::invalid_argument("expand: factor must be >= 1");

    const MethodInfo* method = find_method(spec.method);
    if (!method) {
        throw UnknownMethodError("unknown method '" + spec.method + "'");
    }

    MethodParams params;
    for (const auto& [key, value] : spec.params) params.apply_override(key, value);

    RunLog log;
    log.method = method->id;
    log.seed = spec.seed;
    log.factor = spec.factor;
    log.params = spec.params;

    const std::size_t n = train.items.size();
    const std::size_t copies = spec.factor - 1;

    Dataset out;
    out.name = train.name;
    out.split = train.split;
    out.items.resize(n + n * copies);
    for (std::size_t s = 0; s < n; ++s) out.items[s] = train.items[s];

    if (copies > 0) {
        ExpandContext ctx{train, *method, params, nullptr, {}, spec.seed};
        std::optional<ClassPool> pool_storage;
        if (needs_pool(method->id)) {
            pool_storage.emplace(train);
            ctx.pool = &*pool_storage;
        }
        ctx.class_position.resize(n, 0);
        std::map<std::string, std::size_t> counters;
        for (std::size_t s = 0; s < n; ++s) {
            ctx.class_position[s] = counters[train.items[s].label]++;
        }

        log.records.resize(n * copies);
        parallel_for(n * copies, jobs, [&](std::size_t task) {
            const std::size_t s = task / copies;
            const std::size_t c = task % copies + 1; // copy 0 is the original
            RunRecord& record = log.records[task];
            record.sample_index = s;
            record.copy_index = c;
            LabeledSeries generated;
            generated.label = train.items[s].label;
            generated.values = generate_copy(ctx, s, c, record);
            out.items[n + task] = std::move(generated);
        });
    }

    out.refresh_metadata();
    return {std::move(out), std::move(log)};
}

} // namespace tsaug
