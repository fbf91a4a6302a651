// tsaug: deterministic time-series augmentation and benchmark CLI.
//
// Exit codes: 0 success, 2 unknown method, 3 I/O failure, 4 invalid
// parameters, 5 baseline excluded from a bench run.

#include "tsaug/bench.hpp"
#include "tsaug/pipeline.hpp"
#include "tsaug/series.hpp"
#include "tsaug/ucr_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnknownMethod = 2;
constexpr int kExitIo = 3;
constexpr int kExitBadParams = 4;
constexpr int kExitBaselineExcluded = 5;

struct CliError {
    int code;
    std::string message;
};

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TSAUG_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CliError{kExitBadParams,
                           std::string("TSAUG_SEED is not an integer: '") + env + "'"};
        }
    }
    return 0;
}

std::map<std::string, std::string> parse_param_flags(
    const std::vector<std::string>& raw) {
    std::map<std::string, std::string> out;
    for (const auto& kv : raw) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw CliError{kExitBadParams, "--param expects key=value, got '" + kv + "'"};
        }
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

void validate_params(const std::map<std::string, std::string>& params) {
    tsaug::MethodParams probe;
    for (const auto& [k, v] : params) {
        try {
            probe.apply_override(k, v);
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitBadParams, e.what()};
        }
    }
}

std::string supported_methods() {
    std::string out;
    for (const auto& m : tsaug::list_methods()) {
        if (!out.empty()) out += ", ";
        out += m.id;
    }
    return out;
}

std::string dataset_name_from_path(const std::string& path) {
    std::string stem = std::filesystem::path(path).stem().string();
    for (const char* suffix : {"_TRAIN", "_TEST", "_train", "_test"}) {
        if (stem.size() > std::strlen(suffix) &&
            stem.ends_with(suffix)) {
            return stem.substr(0, stem.size() - std::strlen(suffix));
        }
    }
    return stem;
}

tsaug::Dataset load_or_die(const std::string& path, tsaug::Split split) {
    try {
        return tsaug::load_ucr_tsv(path, split, dataset_name_from_path(path));
    } catch (const std::exception& e) {
        throw CliError{kExitIo, e.what()};
    }
}

/// Preparation protocol: zero missing values, then rescale so the train
/// split spans [-1, 1]. The same affine map is applied to every split of
/// the dataset.
tsaug::NormalizationParams prepare_train(tsaug::Dataset& train) {
    for (auto& item : train.items) item.values = tsaug::sanitize(item.values);
    auto params = tsaug::fit_normalizer(train);
    train = tsaug::apply_normalizer(train, params);
    return params;
}

int run_augment(const std::string& input, const std::string& method,
                std::size_t factor, std::optional<std::uint64_t> seed_flag,
                const std::vector<std::string>& param_flags,
                const std::string& output, std::size_t jobs,
                const std::string& config_path) {
    tsaug::AugmentSpec spec;
    std::string resolved_input = input;
    if (!config_path.empty()) {
        tsaug::RunConfig cfg;
        try {
            cfg = tsaug::load_run_config(config_path);
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitBadParams, e.what()};
        } catch (const std::exception& e) {
            throw CliError{kExitIo, e.what()};
        }
        spec = cfg.spec;
        if (resolved_input.empty()) resolved_input = cfg.dataset;
    }
    if (!method.empty()) spec.method = method;
    if (factor != 0) spec.factor = factor;
    if (seed_flag || config_path.empty()) spec.seed = resolve_seed(seed_flag);
    for (const auto& [k, v] : parse_param_flags(param_flags)) spec.params[k] = v;

    if (resolved_input.empty()) {
        throw CliError{kExitBadParams, "no input file (give --input or a config with 'dataset')"};
    }
    if (spec.method.empty()) {
        throw CliError{kExitBadParams, "no method (give --method or a config with 'method')"};
    }
    if (!tsaug::find_method(spec.method)) {
        throw CliError{kExitUnknownMethod,
                       "unknown method '" + spec.method + "'; supported: " + supported_methods()};
    }
    validate_params(spec.params);
    if (spec.factor < 1) throw CliError{kExitBadParams, "--factor must be >= 1"};

    tsaug::Dataset train = load_or_die(resolved_input, tsaug::Split::train);
    prepare_train(train);

    auto [expanded, log] = tsaug::expand(train, spec, jobs);
    try {
        tsaug::save_ucr_tsv(expanded, output);
        log.write_jsonl(output + ".runlog.jsonl");
    } catch (const std::exception& e) {
        throw CliError{kExitIo, e.what()};
    }
    std::cerr << "augment: " << train.size() << " -> " << expanded.size()
              << " items (" << spec.method << ", factor " << spec.factor
              << ", seed " << spec.seed << ")\n";
    return kExitOk;
}

int run_describe(const std::string& input) {
    tsaug::Dataset ds = load_or_die(input, tsaug::Split::train);
    if (ds.fixed_length) {
        std::cout << ds.size() << " items, " << ds.classes.size()
                  << " classes, length " << *ds.fixed_length << "\n";
    } else {
        std::cout << ds.size() << " items, " << ds.classes.size()
                  << " classes, variable length\n";
    }
    std::map<std::string, std::size_t> histogram;
    for (const auto& item : ds.items) ++histogram[item.label];
    for (const auto& [label, count] : histogram) {
        std::cout << "class " << label << ": " << count << "\n";
    }
    return kExitOk;
}

int run_list_methods() {
    for (const auto& m : tsaug::list_methods()) {
        std::cout << m.id << '\t' << m.category_label() << "\n";
    }
    return kExitOk;
}

int run_bench(const std::vector<std::string>& train_paths,
              const std::vector<std::string>& test_paths,
              const std::string& methods_flag, const std::string& classifier,
              double window, std::size_t factor,
              std::optional<std::uint64_t> seed_flag,
              const std::vector<std::string>& param_flags,
              const std::string& report_dir, std::size_t jobs) {
    if (train_paths.empty() || train_paths.size() != test_paths.size()) {
        throw CliError{kExitBadParams, "--train and --test must be given in matching pairs"};
    }

    std::vector<std::string> methods;
    if (methods_flag == "all") {
        for (const auto& m : tsaug::list_methods()) methods.push_back(m.id);
    } else {
        std::stringstream ss(methods_flag);
        std::string id;
        bool has_baseline = false;
        while (std::getline(ss, id, ',')) {
            if (id.empty()) continue;
            if (!tsaug::find_method(id)) {
                throw CliError{kExitUnknownMethod,
                               "unknown method '" + id + "'; supported: " + supported_methods()};
            }
            if (id == "none") has_baseline = true;
            methods.push_back(id);
        }
        if (methods.empty()) throw CliError{kExitBadParams, "--methods is empty"};
        if (!has_baseline) {
            throw CliError{kExitBaselineExcluded,
                           "the 'none' baseline must be part of every bench run"};
        }
    }

    tsaug::BenchMetric metric;
    if (classifier == "euclidean") {
        metric.kind = tsaug::BenchMetric::Kind::euclidean;
    } else if (classifier == "dtw") {
        metric.kind = tsaug::BenchMetric::Kind::dtw;
    } else {
        throw CliError{kExitBadParams, "--classifier must be euclidean or dtw"};
    }
    metric.window_fraction = window;
    if (window < 0.0 || window > 1.0) {
        throw CliError{kExitBadParams, "--window must be in [0, 1]"};
    }

    const std::uint64_t seed = resolve_seed(seed_flag);
    auto params = parse_param_flags(param_flags);
    validate_params(params);
    if (factor < 1) throw CliError{kExitBadParams, "--factor must be >= 1"};

    std::vector<tsaug::EvalResult> results;
    std::map<std::string, std::map<std::string, double>> acc_by_dataset;

    for (std::size_t d = 0; d < train_paths.size(); ++d) {
        tsaug::Dataset train = load_or_die(train_paths[d], tsaug::Split::train);
        tsaug::Dataset test = load_or_die(test_paths[d], tsaug::Split::test);
        const auto norm = prepare_train(train);
        for (auto& item : test.items) item.values = tsaug::sanitize(item.values);
        test = tsaug::apply_normalizer(test, norm);

        std::vector<std::string> truth;
        truth.reserve(test.size());
        for (const auto& item : test.items) truth.push_back(item.label);

        for (const auto& id : methods) {
            tsaug::AugmentSpec spec;
            spec.method = id;
            spec.factor = factor;
            spec.seed = seed;
            spec.params = params;

            const auto started = std::chrono::steady_clock::now();
            auto [expanded, log] = tsaug::expand(train, spec, jobs);
            auto predictions = tsaug::knn1_classify(expanded, test, metric, jobs);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - started;

            tsaug::EvalResult r;
            r.dataset = train.name;
            r.method = id;
            r.accuracy = tsaug::accuracy(predictions, truth);
            r.runtime_seconds = elapsed.count();
            results.push_back(r);
            acc_by_dataset[r.dataset][id] = r.accuracy;
            std::cerr << "bench: " << r.dataset << " " << id << " accuracy "
                      << r.accuracy << " (" << r.runtime_seconds << "s)\n";
        }
    }

    auto ranks = tsaug::rank_methods(acc_by_dataset);
    auto residual_map = tsaug::residuals(results, "none");

    std::map<std::string, std::string> meta;
    meta["seed"] = std::to_string(seed);
    meta["factor"] = std::to_string(factor);
    meta["classifier"] = classifier;
    meta["window_fraction"] = tsaug::format_value(window);
    for (const auto& [k, v] : params) meta["param." + k] = v;

    try {
        tsaug::emit_reports(results, ranks, residual_map, report_dir, meta);
    } catch (const std::exception& e) {
        throw CliError{kExitIo, e.what()};
    }
    std::cerr << "bench: reports written to " << report_dir << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic time-series augmentation and 1-NN benchmark"};
    app.require_subcommand(1);

    // augment
    auto* augment = app.add_subcommand("augment", "Expand a training file with one method");
    std::string in_path, out_path, method, config_path;
    std::size_t factor = 0; // 0 = take the config's value or the default 4
    std::optional<std::uint64_t> seed;
    std::vector<std::string> param_flags;
    std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    augment->add_option("--input", in_path, "UCR-format train file");
    augment->add_option("--method", method, "Augmentation method id");
    augment->add_option("--config", config_path,
                        "JSON run config {dataset, method, params, factor, seed}");
    augment->add_option("--factor", factor, "Expansion factor (default 4)")
        ->check(CLI::PositiveNumber);
    augment->add_option("--seed", seed, "Master seed (fallback: TSAUG_SEED, then 0)");
    augment->add_option("--param", param_flags, "Override, e.g. --param sfcc.strata=8");
    augment->add_option("--output", out_path, "Output TSV path")->required();
    augment->add_option("--jobs", jobs, "Worker threads (never changes the output)");

    // bench
    auto* bench = app.add_subcommand("bench", "Run the accuracy/ranking/residual benchmark");
    std::vector<std::string> train_paths, test_paths;
    std::string methods_flag = "all", classifier = "dtw", report_dir;
    double window = 0.1;
    std::size_t bench_factor = 4;
    std::optional<std::uint64_t> bench_seed;
    std::vector<std::string> bench_params;
    std::size_t bench_jobs = std::max(1u, std::thread::hardware_concurrency());
    bench->add_option("--train", train_paths, "Train file (repeat per dataset)")->required();
    bench->add_option("--test", test_paths, "Test file (repeat per dataset)")->required();
    bench->add_option("--methods", methods_flag, "all or comma-separated ids (must include none)");
    bench->add_option("--classifier", classifier, "euclidean or dtw");
    bench->add_option("--window", window, "DTW band fraction (default 0.1)");
    bench->add_option("--factor", bench_factor, "Expansion factor (default 4)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "Master seed (fallback: TSAUG_SEED, then 0)");
    bench->add_option("--param", bench_params, "Method parameter override");
    bench->add_option("--report", report_dir, "Report output directory")->required();
    bench->add_option("--jobs", bench_jobs, "Worker threads (never changes the reports)");

    // list-methods
    app.add_subcommand("list-methods", "Print the method registry");

    // describe
    auto* describe = app.add_subcommand("describe", "Summarize a UCR-format file");
    std::string describe_path;
    describe->add_option("--input", describe_path, "UCR-format file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitBadParams;
    }

    try {
        if (augment->parsed()) {
            if (config_path.empty() && factor == 0) factor = 4;
            return run_augment(in_path, method, factor, seed, param_flags,
                               out_path, jobs, config_path);
        }
        if (bench->parsed()) {
            return run_bench(train_paths, test_paths, methods_flag, classifier,
                             window, bench_factor, bench_seed, bench_params,
                             report_dir, bench_jobs);
        }
        if (describe->parsed()) return run_describe(describe_path);
        return run_list_methods();
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const tsaug::UnknownMethodError& e) {
        std::cerr << "error: " << e.what() << "; supported: " << supported_methods() << "\n";
        return kExitUnknownMethod;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
