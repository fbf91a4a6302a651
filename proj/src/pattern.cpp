#include "tsaug/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tsaug {

namespace {

std::size_t resolve_desc_window(const PatternParams& params, std::size_t n) {
    return params.desc_window != 0 ? params.desc_window
                                   : default_descriptor_window(n);
}

std::vector<const Series*> take_distinct(const std::vector<const Series*>& from,
                                         std::size_t count,
                                         RandomStream& stream) {
    std::vector<std::size_t> idx(from.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    count = std::min(count, from.size());
    std::vector<const Series*> out;
    out.reserve(count);
    // partial Fisher-Yates: one draw per picked element
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t j = k + stream.uniform_index(idx.size() - k);
        std::swap(idx[k], idx[j]);
        out.push_back(from[idx[k]]);
    }
    return out;
}

Series warp_onto(const Series& sample, const Series& reference,
                 const DtwResult& alignment) {
    Series out = warp_to_reference(sample, reference, alignment.path);
    if (out.size() != sample.size()) out = linear_resample(out, sample.size());
    return out;
}

} // namespace

ClassPool::ClassPool(const Dataset& train) {
    for (const auto& item : train.items) {
        pools_[item.label].push_back(item.values);
        ++total_;
    }
}

const std::vector<Series>& ClassPool::members(const std::string& label) const {
    static const std::vector<Series> empty;
    auto it = pools_.find(label);
    return it == pools_.end() ? empty : it->second;
}

std::size_t ClassPool::same_count(const std::string& label) const {
    return members(label).size();
}

std::size_t ClassPool::other_count(const std::string& label) const {
    return total_ - same_count(label);
}

const Series& ClassPool::draw_same(const std::string& label,
                                   std::optional<std::size_t> exclude,
                                   RandomStream& stream) const {
    const auto& pool = members(label);
    if (pool.empty()) throw std::runtime_error("ClassPool: empty class '" + label + "'");
    if (exclude && *exclude < pool.size() && pool.size() > 1) {
        std::size_t k = stream.uniform_index(pool.size() - 1);
        if (k >= *exclude) ++k;
        return pool[k];
    }
    return pool[stream.uniform_index(pool.size())];
}

std::vector<const Series*> ClassPool::sample_same(
    const std::string& label, std::optional<std::size_t> exclude,
    std::size_t count, RandomStream& stream) const {
    const auto& pool = members(label);
    std::vector<const Series*> candidates;
    candidates.reserve(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (exclude && *exclude == i && pool.size() > 1) continue;
        candidates.push_back(&pool[i]);
    }
    return take_distinct(candidates, count, stream);
}

std::vector<const Series*> ClassPool::sample_other(const std::string& label,
                                                   std::size_t count,
                                                   RandomStream& stream) const {
    std::vector<const Series*> candidates;
    candidates.reserve(other_count(label));
    for (const auto& [other_label, pool] : pools_) {
        if (other_label == label) continue;
        for (const auto& series : pool) candidates.push_back(&series);
    }
    return take_distinct(candidates, count, stream);
}

Series warp_to_reference(const Series& sample, const Series& reference,
                         const WarpPath& path) {
    const std::pair<std::size_t, std::size_t> start{0, 0};
    const std::pair<std::size_t, std::size_t> finish{sample.size() - 1, reference.size() - 1};
    if (path.pairs.empty() || path.pairs.front() != start || path.pairs.back() != finish) {
        throw std::invalid_argument("warp_to_reference: path endpoints do not match");
    }
    Series sums(reference.size(), 0.0);
    std::vector<std::size_t> counts(reference.size(), 0);
    for (const auto& [i, j] : path.pairs) {
        sums[j] += sample[i];
        counts[j] += 1;
    }
    Series out(reference.size());
    for (std::size_t j = 0; j < reference.size(); ++j) {
        out[j] = counts[j] == 1 ? sums[j] : sums[j] / static_cast<double>(counts[j]);
    }
    return out;
}

Series rgw(const Series& sample, const ClassPool& pool, const std::string& label,
           const PatternParams& params, RandomStream& stream,
           std::optional<std::size_t> self_index) {
    const Series& reference = pool.draw_same(label, self_index, stream);
    return warp_onto(sample, reference, dtw(sample, reference, params.align));
}

Series rgws(const Series& sample, const ClassPool& pool, const std::string& label,
            const PatternParams& params, RandomStream& stream,
            std::optional<std::size_t> self_index) {
    const Series& reference = pool.draw_same(label, self_index, stream);
    const std::size_t w = resolve_desc_window(params, sample.size());
    return warp_onto(sample, reference, shape_dtw(sample, reference, w, params.align));
}

Series dgw(const Series& sample, const ClassPool& pool, const std::string& label,
           const PatternParams& params, RandomStream& stream,
           std::optional<std::size_t> self_index, bool use_shape) {
    if (params.dgw_batch == 0) {
        throw std::invalid_argument("dgw: batch size must be >= 1");
    }
    if (pool.same_count(label) == 0) {
        throw std::runtime_error("dgw: no same-class candidates");
    }
    if (pool.other_count(label) == 0) {
        throw std::runtime_error("dgw: no other-class exemplars");
    }
    auto candidates = pool.sample_same(label, self_index, params.dgw_batch, stream);
    auto negatives = pool.sample_other(label, params.dgw_batch, stream);

    const std::size_t w = resolve_desc_window(params, sample.size());
    auto pair_distance = [&](const Series& a, const Series& b) {
        return use_shape ? shape_dtw(a, b, w, params.align).distance
                         : dtw_distance(a, b, params.align);
    };

    const Series* teacher = candidates.front();
    double best_score = -std::numeric_limits<double>::infinity();
    for (const Series* c : candidates) {
        double inter = 0.0;
        for (const Series* o : negatives) inter += pair_distance(*c, *o);
        inter /= static_cast<double>(negatives.size());
        double intra = 0.0;
        for (const Series* s : candidates) {
            if (s != c) intra += pair_distance(*c, *s);
        }
        intra /= static_cast<double>(candidates.size());
        const double score = inter - intra;
        if (score > best_score) {
            best_score = score;
            teacher = c;
        }
    }

    const DtwResult alignment = use_shape
        ? shape_dtw(sample, *teacher, w, params.align)
        : dtw(sample, *teacher, params.align);
    return warp_onto(sample, *teacher, alignment);
}

Series spawner(const Series& x1, const Series& x2, const PatternParams& params,
               RandomStream& stream) {
    const std::size_t n = x1.size();
    if (x2.size() != n) throw std::invalid_argument("spawner: parents must have equal length");
    if (n < 4) throw std::invalid_argument("spawner: length must be >= 4");

    const auto band = static_cast<std::size_t>(std::max(
        1.0, std::ceil(params.spawner_band * static_cast<double>(n))));

    // A diagonal waypoint inside a Sakoe-Chiba band always admits a path,
    // so one draw suffices.
    const std::size_t waypoint = 1 + stream.uniform_index(n - 2);

    const LocalCost cost = params.align.local_cost;
    Series x1_head(x1.begin(), x1.begin() + static_cast<std::ptrdiff_t>(waypoint) + 1);
    Series x2_head(x2.begin(), x2.begin() + static_cast<std::ptrdiff_t>(waypoint) + 1);
    Series x1_tail(x1.begin() + static_cast<std::ptrdiff_t>(waypoint), x1.end());
    Series x2_tail(x2.begin() + static_cast<std::ptrdiff_t>(waypoint), x2.end());

    DtwResult head = dtw_abs_band(x1_head, x2_head, band, cost);
    DtwResult tail = dtw_abs_band(x1_tail, x2_tail, band, cost);

    Series averaged;
    averaged.reserve(head.path.pairs.size() + tail.path.pairs.size() - 1);
    for (const auto& [i, j] : head.path.pairs) {
        averaged.push_back((x1[i] + x2[j]) / 2.0);
    }
    bool first = true;
    for (const auto& [i, j] : tail.path.pairs) {
        if (first) { first = false; continue; } // (waypoint, waypoint) already emitted
        averaged.push_back((x1[waypoint + i] + x2[waypoint + j]) / 2.0);
    }

    Series out = averaged.size() == n ? std::move(averaged)
                                      : linear_resample(averaged, n);
    if (params.spawner_sigma > 0.0) {
        for (double& v : out) v += stream.gauss(0.0, params.spawner_sigma);
    }
    return out;
}

Series wdba(const std::vector<Series>& group, const PatternParams& params,
            RandomStream& stream, std::vector<double>* objective_trace) {
    if (group.empty()) throw std::invalid_argument("wdba: empty group");
    const std::size_t len = group.front().size();
    for (const auto& s : group) {
        if (s.size() != len) throw std::invalid_argument("wdba: members must have equal length");
    }
    const std::size_t ref_idx = stream.uniform_index(group.size());
    if (group.size() == 1) return group.front();

    // Average-Selected-with-Distance weights around the reference.
    std::vector<double> weights(group.size(), 1.0);
    if (group.size() >= 3) {
        std::vector<double> dist(group.size(), 0.0);
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < group.size(); ++s) {
            if (s == ref_idx) continue;
            dist[s] = dtw_distance(group[s], group[ref_idx], params.align);
            nearest = std::min(nearest, dist[s]);
        }
        if (nearest > 0.0 && std::isfinite(nearest)) {
            const double decay = std::log(0.5);
            for (std::size_t s = 0; s < group.size(); ++s) {
                if (s == ref_idx) continue;
                weights[s] = std::exp(decay * dist[s] / nearest);
            }
        }
    }

    Series barycenter = group[ref_idx];
    auto objective = [&]() {
        double acc = 0.0;
        for (std::size_t s = 0; s < group.size(); ++s) {
            acc += weights[s] * dtw_distance(group[s], barycenter, params.align);
        }
        return acc;
    };
    if (objective_trace) objective_trace->push_back(objective());

    Series sums(len);
    std::vector<double> den(len);
    for (std::size_t it = 0; it < params.wdba_iterations; ++it) {
        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(den.begin(), den.end(), 0.0);
        for (std::size_t s = 0; s < group.size(); ++s) {
            const DtwResult res = dtw(group[s], barycenter, params.align);
            for (const auto& [i, t] : res.path.pairs) {
                sums[t] += weights[s] * group[s][i];
                den[t] += weights[s];
            }
        }
        for (std::size_t t = 0; t < len; ++t) {
            if (den[t] > 0.0) barycenter[t] = sums[t] / den[t];
        }
        if (objective_trace) objective_trace->push_back(objective());
    }
    return barycenter;
}

Series dtw_merge(const Series& x1, const Series& x2, const PatternParams& params,
                 RandomStream& stream) {
    if (x1.size() < 2 || x2.size() < 2) {
        throw std::invalid_argument("dtw_merge: lengths must be >= 2");
    }
    const DtwResult res = dtw(x1, x2, params.align);
    const auto& pairs = res.path.pairs;
    const std::size_t cut = 1 + stream.uniform_index(pairs.size() - 1);

    Series merged;
    merged.reserve(x1.size() + x2.size());
    for (std::size_t p = 0; p < cut; ++p) {
        const std::size_t i = pairs[p].first;
        if (p > 0 && pairs[p - 1].first == i) continue; // repeated sample index
        merged.push_back(x1[i]);
    }
    for (std::size_t p = cut; p < pairs.size(); ++p) {
        const std::size_t j = pairs[p].second;
        if (p > cut && pairs[p - 1].second == j) continue;
        merged.push_back(x2[j]);
    }
    return merged.size() == x1.size() ? merged : linear_resample(merged, x1.size());
}

} // namespace tsaug
