#include "tsaug/bench.hpp"

#include "tsaug/parallel.hpp"
#include "tsaug/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

namespace tsaug {

namespace {

double squared_euclidean(const Series& a, const Series& b, double cutoff) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("euclidean metric requires equal lengths");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
        if (cutoff >= 0.0 && acc > cutoff) return std::numeric_limits<double>::infinity();
    }
    return acc;
}

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

/// Methods in registry order first, then any other identifiers sorted by
/// name; keeps report columns deterministic.
std::vector<std::string> ordered_methods(const std::set<std::string>& present) {
    std::vector<std::string> out;
    for (const auto& m : list_methods()) {
        if (present.count(m.id)) out.push_back(m.id);
    }
    for (const auto& id : present) {
        if (!find_method(id)) out.push_back(id);
    }
    return out;
}

} // namespace

std::vector<std::string> knn1_classify(const Dataset& train, const Dataset& test,
                                       const BenchMetric& metric,
                                       std::size_t jobs) {
    if (train.items.empty()) throw std::invalid_argument("knn1: empty train split");

    DtwParams dtw_params;
    dtw_params.window_fraction = metric.window_fraction;

    std::vector<std::string> predictions(test.items.size());
    parallel_for(test.items.size(), jobs, [&](std::size_t t) {
        const Series& query = test.items[t].values;
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_idx = 0;
        for (std::size_t i = 0; i < train.items.size(); ++i) {
            const Series& cand = train.items[i].values;
            const double d = metric.kind == BenchMetric::Kind::euclidean
                ? squared_euclidean(query, cand, best)
                : dtw_distance(query, cand, dtw_params, best);
            if (d < best) {
                best = d;
                best_idx = i;
            }
        }
        predictions[t] = train.items[best_idx].label;
    });
    return predictions;
}

double accuracy(const std::vector<std::string>& predictions,
                const std::vector<std::string>& truth) {
    if (predictions.size() != truth.size()) {
        throw std::invalid_argument("accuracy: length mismatch");
    }
    if (predictions.empty()) throw std::invalid_argument("accuracy: empty inputs");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (predictions[i] == truth[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(predictions.size());
}

std::vector<RankEntry> rank_methods(
    const std::map<std::string, std::map<std::string, double>>& accuracy_by_dataset) {
    if (accuracy_by_dataset.empty()) {
        throw std::invalid_argument("rank_methods: no datasets");
    }

    std::set<std::string> method_set;
    for (const auto& [ds, accs] : accuracy_by_dataset) {
        for (const auto& [m, a] : accs) method_set.insert(m);
    }
    const std::vector<std::string> methods = ordered_methods(method_set);
    if (methods.size() < 2) throw std::invalid_argument("rank_methods: need >= 2 methods");

    std::map<std::string, RankEntry> entries;
    for (const auto& id : methods) entries[id].method = id;

    for (const auto& [ds, accs] : accuracy_by_dataset) {
        std::vector<std::pair<double, std::string>> order;
        order.reserve(accs.size());
        for (const auto& id : methods) {
            auto it = accs.find(id);
            if (it != accs.end()) order.emplace_back(it->second, id);
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });

        std::size_t pos = 0;
        while (pos < order.size()) {
            std::size_t end = pos;
            while (end + 1 < order.size() && order[end + 1].first == order[pos].first) ++end;
            // positions are 1-based; ties share the average of their span
            const double rank = (static_cast<double>(pos + 1) + static_cast<double>(end + 1)) / 2.0;
            for (std::size_t k = pos; k <= end; ++k) {
                entries[order[k].second].per_dataset[ds] = rank;
            }
            pos = end + 1;
        }
    }

    std::vector<RankEntry> out;
    out.reserve(methods.size());
    for (const auto& id : methods) {
        RankEntry& e = entries[id];
        double sum = 0.0;
        for (const auto& [ds, r] : e.per_dataset) sum += r;
        e.average_rank = e.per_dataset.empty()
            ? 0.0 : sum / static_cast<double>(e.per_dataset.size());
        out.push_back(std::move(e));
    }
    return out;
}

std::map<std::string, std::map<std::string, double>> residuals(
    const std::vector<EvalResult>& results, const std::string& baseline) {
    std::map<std::string, std::map<std::string, double>> by_dataset;
    for (const auto& r : results) by_dataset[r.dataset][r.method] = r.accuracy;

    std::map<std::string, std::map<std::string, double>> out;
    for (const auto& [ds, accs] : by_dataset) {
        auto base = accs.find(baseline);
        if (base == accs.end()) {
            throw std::invalid_argument("residuals: baseline '" + baseline +
                                        "' missing for dataset '" + ds + "'");
        }
        for (const auto& [m, a] : accs) out[ds][m] = a - base->second;
    }
    return out;
}

void emit_reports(const std::vector<EvalResult>& results,
                  const std::vector<RankEntry>& ranks,
                  const std::map<std::string, std::map<std::string, double>>& residual_map,
                  const std::string& out_dir,
                  const std::map<std::string, std::string>& run_meta) {
    if (results.empty()) throw std::invalid_argument("emit_reports: no results");

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (!fs::is_directory(out_dir)) {
        throw std::runtime_error("cannot create report directory '" + out_dir + "'");
    }

    std::map<std::string, std::map<std::string, double>> acc;
    std::set<std::string> method_set;
    for (const auto& r : results) {
        acc[r.dataset][r.method] = r.accuracy;
        method_set.insert(r.method);
    }
    const std::vector<std::string> methods = ordered_methods(method_set);

    auto open_file = [&](const std::string& name) {
        std::ofstream f(fs::path(out_dir) / name, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write report '" + name + "'");
        return f;
    };

    auto write_matrix = [&](const std::string& name,
                            const std::map<std::string, std::map<std::string, double>>& rows) {
        auto f = open_file(name);
        f << "dataset";
        for (const auto& m : methods) f << ',' << m;
        f << '\n';
        for (const auto& [ds, values] : rows) {
            f << ds;
            for (const auto& m : methods) {
                auto it = values.find(m);
                f << ',' << (it != values.end() ? fmt6(it->second) : "");
            }
            f << '\n';
        }
    };

    write_matrix("accuracy.csv", acc);
    write_matrix("residuals.csv", residual_map);

    {
        auto f = open_file("ranking.csv");
        f << "method,average_rank";
        for (const auto& [ds, values] : acc) f << ',' << ds;
        f << '\n';
        std::vector<const RankEntry*> sorted;
        sorted.reserve(ranks.size());
        for (const auto& e : ranks) sorted.push_back(&e);
        std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
            return a->average_rank < b->average_rank;
        });
        for (const auto* e : sorted) {
            f << e->method << ',' << fmt6(e->average_rank);
            for (const auto& [ds, values] : acc) {
                auto it = e->per_dataset.find(ds);
                f << ',' << (it != e->per_dataset.end() ? fmt6(it->second) : "");
            }
            f << '\n';
        }
    }

    {
        auto f = open_file("heatmap_long.csv");
        f << "dataset,method,accuracy\n";
        for (const auto& [ds, values] : acc) {
            for (const auto& m : methods) {
                auto it = values.find(m);
                if (it != values.end()) {
                    f << ds << ',' << m << ',' << fmt6(it->second) << '\n';
                }
            }
        }
    }

    {
        nlohmann::json summary;
        summary["run"] = run_meta;
        summary["std_convention"] = "population (divide by k datasets)";
        nlohmann::json per_method = nlohmann::json::array();
        std::map<std::string, double> avg_rank;
        for (const auto& e : ranks) avg_rank[e.method] = e.average_rank;
        for (const auto& m : methods) {
            std::vector<double> values;
            for (const auto& [ds, accs] : acc) {
                auto it = accs.find(m);
                if (it != accs.end()) values.push_back(it->second);
            }
            double mean = 0.0;
            for (double v : values) mean += v;
            mean /= static_cast<double>(values.size());
            double var = 0.0;
            for (double v : values) var += (v - mean) * (v - mean);
            var /= static_cast<double>(values.size());
            per_method.push_back({
                {"method", m},
                {"mean_accuracy", mean},
                {"std_accuracy", std::sqrt(var)},
                {"average_rank", avg_rank.count(m) ? avg_rank[m] : 0.0},
            });
        }
        summary["methods"] = per_method;
        auto f = open_file("summary.json");
        f << summary.dump(2) << '\n';
    }
}

} // namespace tsaug
