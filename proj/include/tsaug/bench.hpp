#pragma once

#include "tsaug/dtw.hpp"
#include "tsaug/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace tsaug {

/// 1-NN distance choice. Euclidean requires equal lengths; DTW uses the
/// banded kernel (window fraction 0.1 by default, the benchmark convention).
struct BenchMetric {
    enum class Kind { euclidean, dtw } kind = Kind::dtw;
    double window_fraction = 0.1;
};

struct EvalResult {
    std::string dataset;
    std::string method;
    double accuracy = 0.0;
    double runtime_seconds = 0.0; // informational; never written to reports
};

struct RankEntry {
    std::string method;
    std::map<std::string, double> per_dataset; // dataset -> rank (ties averaged)
    double average_rank = 0.0;
};

/// Nearest-neighbour labels for every test item; distance ties resolve to
/// the lowest training index.
std::vector<std::string> knn1_classify(const Dataset& train, const Dataset& test,
                                       const BenchMetric& metric,
                                       std::size_t jobs = 1);

double accuracy(const std::vector<std::string>& predictions,
                const std::vector<std::string>& truth);

/// accuracy_by_dataset: dataset -> method -> accuracy. Rank 1 is the highest
/// accuracy within a dataset; equal accuracies share the average of their
/// positional ranks; the entry's average is the mean across datasets.
std::vector<RankEntry> rank_methods(
    const std::map<std::string, std::map<std::string, double>>& accuracy_by_dataset);

/// residual = accuracy(method) - accuracy(baseline), per dataset. Throws if
/// any dataset lacks the baseline.
std::map<std::string, std::map<std::string, double>> residuals(
    const std::vector<EvalResult>& results, const std::string& baseline = "none");

/// Writes accuracy.csv, ranking.csv, residuals.csv, heatmap_long.csv and
/// summary.json (mean +/- population std per method plus average rank) into
/// out_dir. `run_meta` key/values are echoed into the summary so runs are
/// self-describing. Byte-identical for identical inputs.
void emit_reports(const std::vector<EvalResult>& results,
                  const std::vector<RankEntry>& ranks,
                  const std::map<std::string, std::map<std::string, double>>& residual_map,
                  const std::string& out_dir,
                  const std::map<std::string, std::string>& run_meta = {});

} // namespace tsaug
