#pragma once

#include "tsaug/dtw.hpp"
#include "tsaug/rng.hpp"
#include "tsaug/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tsaug {

/// Immutable per-class snapshot of the training split. Pattern methods draw
/// reference material from here, always from the sample's own class (except
/// the discriminative teachers' negative batches).
class ClassPool {
public:
    explicit ClassPool(const Dataset& train);

    const std::vector<Series>& members(const std::string& label) const;
    std::size_t same_count(const std::string& label) const;
    std::size_t other_count(const std::string& label) const;

    /// Uniform same-class member; `exclude` is skipped when another
    /// candidate exists. Consumes exactly one draw.
    const Series& draw_same(const std::string& label,
                            std::optional<std::size_t> exclude,
                            RandomStream& stream) const;

    /// Up to `count` distinct same-class members, `exclude` skipped when
    /// possible.
    std::vector<const Series*> sample_same(const std::string& label,
                                           std::optional<std::size_t> exclude,
                                           std::size_t count,
                                           RandomStream& stream) const;

    /// Up to `count` distinct members of every other class.
    std::vector<const Series*> sample_other(const std::string& label,
                                            std::size_t count,
                                            RandomStream& stream) const;

private:
    std::map<std::string, std::vector<Series>> pools_;
    std::size_t total_ = 0;
};

struct PatternParams {
    DtwParams align;                  // window_fraction 1 inside augmenters
    std::size_t desc_window = 0;      // 0 -> default_descriptor_window(n)
    std::size_t dgw_batch = 5;
    double spawner_sigma = 0.05;
    double spawner_band = 0.1;
    std::size_t wdba_iterations = 10;
    std::size_t wdba_group_size = 5;  // sample plus group_size-1 pool members
};

/// Projects `sample` onto the reference's time axis: output[j] is the mean
/// of all sample values the path aligns to reference position j.
Series warp_to_reference(const Series& sample, const Series& reference,
                         const WarpPath& path);

/// Random guided warping: warp onto a uniformly drawn same-class reference.
Series rgw(const Series& sample, const ClassPool& pool, const std::string& label,
           const PatternParams& params, RandomStream& stream,
           std::optional<std::size_t> self_index = std::nullopt);

/// rgw with shapeDTW alignment.
Series rgws(const Series& sample, const ClassPool& pool, const std::string& label,
            const PatternParams& params, RandomStream& stream,
            std::optional<std::size_t> self_index = std::nullopt);

/// Discriminative guided warping: the teacher is the candidate whose mean
/// distance to an other-class batch most exceeds its mean distance to the
/// same-class batch. `use_shape` switches alignment and scoring to shapeDTW.
Series dgw(const Series& sample, const ClassPool& pool, const std::string& label,
           const PatternParams& params, RandomStream& stream,
           std::optional<std::size_t> self_index = std::nullopt,
           bool use_shape = false);

/// Averages two same-class series along a DTW path forced through a random
/// diagonal waypoint inside a 10% band, then adds Gaussian noise.
Series spawner(const Series& x1, const Series& x2, const PatternParams& params,
               RandomStream& stream);

/// Weighted DBA barycenter of a same-class group. Weights follow
/// Average-Selected-with-Distance around a uniformly drawn reference.
/// `objective_trace`, when given, receives the weighted alignment cost after
/// the initial guess and every iteration.
Series wdba(const std::vector<Series>& group, const PatternParams& params,
            RandomStream& stream, std::vector<double>* objective_trace = nullptr);

/// Splices the first series' prefix with the second's suffix along their
/// DTW path, cut at a uniform interior path position.
Series dtw_merge(const Series& x1, const Series& x2, const PatternParams& params,
                 RandomStream& stream);

} // namespace tsaug
