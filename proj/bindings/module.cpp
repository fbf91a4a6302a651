#include "tsaug/bench.hpp"
#include "tsaug/dtw.hpp"
#include "tsaug/emd.hpp"
#include "tsaug/freq.hpp"
#include "tsaug/pattern.hpp"
#include "tsaug/pipeline.hpp"
#include "tsaug/rng.hpp"
#include "tsaug/series.hpp"
#include "tsaug/spline.hpp"
#include "tsaug/synth.hpp"
#include "tsaug/transform.hpp"
#include "tsaug/ucr_io.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tsaug;

namespace {

Split parse_split(const std::string& split) {
    if (split == "train") return Split::train;
    if (split == "test") return Split::test;
    throw std::invalid_argument("split must be 'train' or 'test'");
}

DtwParams make_dtw_params(double window_fraction, const std::string& cost) {
    DtwParams p;
    p.window_fraction = window_fraction;
    if (cost == "squared") p.local_cost = LocalCost::squared;
    else if (cost == "absolute") p.local_cost = LocalCost::absolute;
    else throw std::invalid_argument("cost must be 'squared' or 'absolute'");
    return p;
}

PatternParams make_pattern_params(double window_fraction, std::size_t desc_window) {
    PatternParams p;
    p.align.window_fraction = window_fraction;
    p.desc_window = desc_window;
    return p;
}

} // namespace

PYBIND11_MODULE(_tsaug, m) {
    m.doc() = "Time-series augmentation engine: transformation, frequency, "
              "pattern and decomposition methods with a deterministic "
              "expansion pipeline and a 1-NN benchmark harness.";

    py::class_<RandomStream>(m, "RandomStream")
        .def(py::init<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>(),
             py::arg("master_seed"), py::arg("sample_index") = 0,
             py::arg("copy_index") = 0, py::arg("op_tag") = 0)
        .def("uniform", &RandomStream::uniform)
        .def("uniform_index", &RandomStream::uniform_index, py::arg("n"))
        .def("gauss", py::overload_cast<>(&RandomStream::gauss))
        .def("gauss", py::overload_cast<double, double>(&RandomStream::gauss),
             py::arg("mean"), py::arg("stddev"));

    py::class_<LabeledSeries>(m, "LabeledSeries")
        .def(py::init([](Series values, std::string label) {
                 return LabeledSeries{std::move(values), std::move(label)};
             }),
             py::arg("values"), py::arg("label"))
        .def_readwrite("values", &LabeledSeries::values)
        .def_readwrite("label", &LabeledSeries::label);

    py::class_<Dataset>(m, "Dataset")
        .def(py::init<>())
        .def_readwrite("name", &Dataset::name)
        .def_readwrite("items", &Dataset::items)
        .def_readonly("classes", &Dataset::classes)
        .def_property_readonly("fixed_length",
                               [](const Dataset& d) -> py::object {
                                   if (d.fixed_length) return py::int_(*d.fixed_length);
                                   return py::none();
                               })
        .def("refresh_metadata", &Dataset::refresh_metadata)
        .def("__len__", [](const Dataset& d) { return d.size(); });

    m.def("load_ucr_tsv",
          [](const std::string& path, const std::string& split, const std::string& name) {
              return load_ucr_tsv(path, parse_split(split), name);
          },
          py::arg("path"), py::arg("split") = "train", py::arg("name") = "");
    m.def("save_ucr_tsv", &save_ucr_tsv, py::arg("dataset"), py::arg("path"));

    m.def("sanitize", &sanitize, py::arg("x"));
    m.def("fit_normalizer", [](const Dataset& train) {
        auto p = fit_normalizer(train);
        return py::make_tuple(p.train_min, p.train_max);
    });
    m.def("apply_normalizer",
          [](const Series& x, double lo, double hi) {
              return apply_normalizer(x, NormalizationParams{lo, hi});
          },
          py::arg("x"), py::arg("train_min"), py::arg("train_max"));
    m.def("linear_resample", &linear_resample, py::arg("x"), py::arg("m"));
    m.def("smooth_random_curve", &smooth_random_curve, py::arg("n"),
          py::arg("knots"), py::arg("sigma"), py::arg("stream"));

    // transformation-based methods
    m.def("jitter", &jitter, py::arg("x"), py::arg("sigma"), py::arg("stream"));
    m.def("rotation", &flip_rotation, py::arg("x"));
    m.def("scaling", &scaling, py::arg("x"), py::arg("sigma"), py::arg("stream"));
    m.def("magnitude_warp", &magnitude_warp, py::arg("x"), py::arg("sigma"),
          py::arg("knots"), py::arg("stream"));
    m.def("permutation", &permutation, py::arg("x"), py::arg("segments"), py::arg("stream"));
    m.def("random_permutation", &random_permutation, py::arg("x"),
          py::arg("segments"), py::arg("stream"));
    m.def("time_warp", &time_warp, py::arg("x"), py::arg("sigma"),
          py::arg("knots"), py::arg("stream"));
    m.def("window_slice", &window_slice, py::arg("x"), py::arg("ratio"), py::arg("stream"));
    m.def("window_warp", &window_warp, py::arg("x"), py::arg("ratio"),
          py::arg("scales"), py::arg("stream"));

    // frequency branch
    m.def("rdft", [](const Series& x) {
        auto s = rdft(x);
        return py::make_tuple(s.coeffs, s.n);
    }, py::arg("x"));
    m.def("irdft", [](const std::vector<std::complex<double>>& coeffs, std::size_t n) {
        HalfSpectrum s;
        s.coeffs = coeffs;
        s.n = n;
        return irdft(s);
    }, py::arg("coeffs"), py::arg("n"));
    m.def("sfcc", &sfcc, py::arg("x1"), py::arg("x2"), py::arg("strata"), py::arg("stream"));

    // dtw kernel
    m.def("dtw",
          [](const Series& x, const Series& y, double window_fraction, const std::string& cost) {
              auto res = dtw(x, y, make_dtw_params(window_fraction, cost));
              return py::make_tuple(res.distance, res.path.pairs);
          },
          py::arg("x"), py::arg("y"), py::arg("window_fraction") = 1.0,
          py::arg("cost") = "squared");
    m.def("dtw_distance",
          [](const Series& x, const Series& y, double window_fraction, const std::string& cost) {
              return dtw_distance(x, y, make_dtw_params(window_fraction, cost));
          },
          py::arg("x"), py::arg("y"), py::arg("window_fraction") = 1.0,
          py::arg("cost") = "squared");
    m.def("shape_dtw",
          [](const Series& x, const Series& y, std::size_t desc_window,
             double window_fraction) {
              auto res = shape_dtw(x, y, desc_window, make_dtw_params(window_fraction, "squared"));
              return py::make_tuple(res.distance, res.path.pairs);
          },
          py::arg("x"), py::arg("y"), py::arg("desc_window"),
          py::arg("window_fraction") = 1.0);

    // pattern-based methods
    py::class_<ClassPool>(m, "ClassPool")
        .def(py::init<const Dataset&>(), py::arg("train"))
        .def("same_count", &ClassPool::same_count, py::arg("label"))
        .def("other_count", &ClassPool::other_count, py::arg("label"));

    m.def("rgw",
          [](const Series& x, const ClassPool& pool, const std::string& label,
             RandomStream& stream, double window_fraction) {
              return rgw(x, pool, label, make_pattern_params(window_fraction, 0), stream);
          },
          py::arg("x"), py::arg("pool"), py::arg("label"), py::arg("stream"),
          py::arg("window_fraction") = 1.0);
    m.def("rgws",
          [](const Series& x, const ClassPool& pool, const std::string& label,
             RandomStream& stream, std::size_t desc_window, double window_fraction) {
              return rgws(x, pool, label, make_pattern_params(window_fraction, desc_window), stream);
          },
          py::arg("x"), py::arg("pool"), py::arg("label"), py::arg("stream"),
          py::arg("desc_window") = 0, py::arg("window_fraction") = 1.0);
    m.def("dgw",
          [](const Series& x, const ClassPool& pool, const std::string& label,
             RandomStream& stream, bool use_shape, double window_fraction) {
              return dgw(x, pool, label, make_pattern_params(window_fraction, 0), stream,
                         std::nullopt, use_shape);
          },
          py::arg("x"), py::arg("pool"), py::arg("label"), py::arg("stream"),
          py::arg("use_shape") = false, py::arg("window_fraction") = 1.0);
    m.def("spawner",
          [](const Series& x1, const Series& x2, RandomStream& stream, double sigma) {
              PatternParams p;
              p.spawner_sigma = sigma;
              return spawner(x1, x2, p, stream);
          },
          py::arg("x1"), py::arg("x2"), py::arg("stream"), py::arg("sigma") = 0.05);
    m.def("wdba",
          [](const std::vector<Series>& group, RandomStream& stream, std::size_t iterations) {
              PatternParams p;
              p.wdba_iterations = iterations;
              return wdba(group, p, stream);
          },
          py::arg("group"), py::arg("stream"), py::arg("iterations") = 10);
    m.def("dtw_merge",
          [](const Series& x1, const Series& x2, RandomStream& stream) {
              return dtw_merge(x1, x2, PatternParams{}, stream);
          },
          py::arg("x1"), py::arg("x2"), py::arg("stream"));

    // decomposition
    m.def("emd", [](const Series& x, std::size_t max_imfs, double sd_threshold) {
        EmdParams p;
        p.max_imfs = max_imfs;
        p.sd_threshold = sd_threshold;
        auto set = emd(x, p);
        return py::make_tuple(set.imfs, set.residual);
    }, py::arg("x"), py::arg("max_imfs") = 10, py::arg("sd_threshold") = 0.3);
    m.def("emd_augment", [](const Series& x, std::size_t k) {
        return emd_augment(x, k);
    }, py::arg("x"), py::arg("k") = 2);

    // pipeline + bench
    m.def("list_methods", []() {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& mi : list_methods()) {
            out.emplace_back(mi.id, mi.category_label());
        }
        return out;
    });
    m.def("expand",
          [](const Dataset& train, const std::string& method, std::size_t factor,
             std::uint64_t seed, const py::dict& params, std::size_t jobs) {
              AugmentSpec spec;
              spec.method = method;
              spec.factor = factor;
              spec.seed = seed;
              for (const auto& [key, value] : params) {
                  spec.params[py::cast<std::string>(key)] =
                      py::cast<std::string>(py::str(value));
              }
              auto [ds, log] = expand(train, spec, jobs);
              py::list records;
              for (const auto& r : log.records) {
                  py::dict d;
                  d["sample_index"] = r.sample_index;
                  d["copy_index"] = r.copy_index;
                  d["lane"] = py::make_tuple(r.lane[0], r.lane[1], r.lane[2]);
                  d["fallbacks"] = r.fallbacks;
                  d["warnings"] = r.warnings;
                  records.append(d);
              }
              return py::make_tuple(ds, records);
          },
          py::arg("train"), py::arg("method"), py::arg("factor") = 4,
          py::arg("seed") = 0, py::arg("params") = py::dict(),
          py::arg("jobs") = 1);
    m.def("knn1_classify",
          [](const Dataset& train, const Dataset& test, const std::string& classifier,
             double window, std::size_t jobs) {
              BenchMetric metric;
              metric.kind = classifier == "euclidean" ? BenchMetric::Kind::euclidean
                                                      : BenchMetric::Kind::dtw;
              metric.window_fraction = window;
              return knn1_classify(train, test, metric, jobs);
          },
          py::arg("train"), py::arg("test"), py::arg("classifier") = "dtw",
          py::arg("window") = 0.1, py::arg("jobs") = 1);
    m.def("accuracy", &accuracy, py::arg("predictions"), py::arg("truth"));

    m.def("make_synthetic", [](const std::string& name, const std::string& split) {
        return synth::make(name, parse_split(split));
    }, py::arg("name"), py::arg("split") = "train");

    m.attr("__version__") = "0.1.0";
}
