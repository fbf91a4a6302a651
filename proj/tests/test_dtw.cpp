#include "tsaug/dtw.hpp"

#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace tsaug;
using test_support::random_series;

namespace {

void check_path_invariants(const DtwResult& res, std::size_t n, std::size_t m) {
    const auto& p = res.path.pairs;
    REQUIRE(!p.empty());
    CHECK(p.front() == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(p.back() == std::pair<std::size_t, std::size_t>{n - 1, m - 1});
    CHECK(p.size() <= n + m - 1);
    CHECK(p.size() >= std::max(n, m));
    for (std::size_t k = 1; k < p.size(); ++k) {
        const auto di = p[k].first - p[k - 1].first;
        const auto dj = p[k].second - p[k - 1].second;
        CHECK(di <= 1);
        CHECK(dj <= 1);
        CHECK(di + dj >= 1);
    }
}

Series random_int_series(RandomStream& rng, std::size_t n) {
    Series x(n);
    for (auto& v : x) v = static_cast<double>(rng.uniform_index(3)); // {0,1,2}
    return x;
}

} // namespace

TEST_CASE("dtw worked examples") {
    const auto self = dtw({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0});
    CHECK(self.distance == 0.0);
    CHECK(self.path.pairs == std::vector<std::pair<std::size_t, std::size_t>>{
                                 {0, 0}, {1, 1}, {2, 2}});

    // only one monotone path exists
    const auto forced = dtw({0.0, 0.0}, {1.0});
    CHECK(forced.distance == 2.0);
    CHECK(forced.path.pairs == std::vector<std::pair<std::size_t, std::size_t>>{
                                   {0, 0}, {1, 0}});

    // brute-force enumeration gives 1 for this pair with squared cost
    CHECK(dtw({1.0, 3.0, 4.0}, {1.0, 4.0}).distance == 1.0);
    CHECK(dtw_bruteforce({1.0, 3.0, 4.0}, {1.0, 4.0}) == 1.0);
}

TEST_CASE("dtw equals the brute-force oracle on 500 random pairs") {
    RandomStream gen(101);
    for (std::size_t trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + gen.uniform_index(6);
        const std::size_t m = 1 + gen.uniform_index(6);
        const Series x = random_int_series(gen, n);
        const Series y = random_int_series(gen, m);
        DtwParams params;
        params.local_cost = trial % 2 == 0 ? LocalCost::squared : LocalCost::absolute;
        const auto res = dtw(x, y, params);
        CHECK(res.distance == dtw_bruteforce(x, y, params)); // ints -> exact
        CHECK(dtw_distance(x, y, params) == res.distance);
        check_path_invariants(res, n, m);
    }
}

TEST_CASE("oracle sanity") {
    RandomStream gen(102);
    const Series x = random_int_series(gen, 6);
    const Series y = random_int_series(gen, 5);
    CHECK(dtw_bruteforce(x, x) == 0.0);
    CHECK(dtw_bruteforce(x, y) == dtw_bruteforce(y, x));
    CHECK_THROWS_AS((void)dtw_bruteforce(random_series(gen, 9), x),
                    std::invalid_argument);
}

TEST_CASE("dtw metric properties on random pairs") {
    RandomStream gen(103);
    for (std::size_t trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + gen.uniform_index(64);
        const std::size_t m = 1 + gen.uniform_index(64);
        const Series x = random_series(gen, n, -2.0, 2.0);
        const Series y = random_series(gen, m, -2.0, 2.0);
        CHECK(dtw(x, y).distance == dtw(y, x).distance); // exact symmetry
        CHECK(dtw(x, x).distance == 0.0);
    }
}

TEST_CASE("zero band with equal lengths forces the diagonal") {
    RandomStream gen(104);
    const Series x = random_series(gen, 24);
    const Series y = random_series(gen, 24);
    DtwParams params;
    params.window_fraction = 0.0;
    const auto res = dtw(x, y, params);

    double expected = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        expected += (x[i] - y[i]) * (x[i] - y[i]);
    }
    CHECK(res.distance == doctest::Approx(expected).epsilon(1e-12));
    for (std::size_t k = 0; k < res.path.pairs.size(); ++k) {
        CHECK(res.path.pairs[k].first == k);
        CHECK(res.path.pairs[k].second == k);
    }
}

TEST_CASE("band auto-widens for unequal lengths") {
    RandomStream gen(105);
    const Series x = random_series(gen, 40);
    const Series y = random_series(gen, 10);
    DtwParams params;
    params.window_fraction = 0.0; // would be empty without widening
    const auto res = dtw(x, y, params);
    CHECK(std::isfinite(res.distance));
    check_path_invariants(res, x.size(), y.size());
}

TEST_CASE("rolling-row distance equals the full DP under every band") {
    RandomStream gen(108);
    for (std::size_t trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + gen.uniform_index(60);
        const std::size_t m = 1 + gen.uniform_index(60);
        const Series x = random_series(gen, n);
        const Series y = random_series(gen, m);
        DtwParams params;
        const double fractions[] = {0.0, 0.05, 0.1, 0.3, 1.0};
        params.window_fraction = fractions[trial % 5];
        params.local_cost = trial % 2 == 0 ? LocalCost::squared : LocalCost::absolute;
        CHECK(dtw_distance(x, y, params) == dtw(x, y, params).distance);
    }
}

TEST_CASE("dtw_distance honors the early-abandon cutoff semantics") {
    RandomStream gen(106);
    for (std::size_t trial = 0; trial < 50; ++trial) {
        const Series x = random_series(gen, 30);
        const Series y = random_series(gen, 30);
        const double exact = dtw(x, y).distance;
        // generous cutoff -> exact value; tight cutoff -> +inf only if above
        CHECK(dtw_distance(x, y, {}, exact + 1.0) == exact);
        const double tight = exact * 0.5;
        const double abandoned = dtw_distance(x, y, {}, tight);
        if (std::isfinite(abandoned)) CHECK(abandoned == exact);
    }
}

TEST_CASE("shape descriptors") {
    const Series x{1.0, 2.0, 3.0, 4.0};
    const auto d1 = shape_descriptors(x, 1);
    REQUIRE(d1.size() == x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(d1[i] == std::vector<double>{x[i]});
    }

    const auto d3 = shape_descriptors(x, 3);
    CHECK(d3[0] == std::vector<double>{1.0, 1.0, 2.0}); // edge replication
    CHECK(d3[3] == std::vector<double>{3.0, 4.0, 4.0});

    const Series flat(5, 2.0);
    const auto df = shape_descriptors(flat, 3);
    for (const auto& d : df) CHECK(d == std::vector<double>{2.0, 2.0, 2.0});

    CHECK_THROWS_AS((void)shape_descriptors(x, 2), std::invalid_argument);
}

TEST_CASE("shape_dtw collapses to dtw at window 1 and is zero on self") {
    RandomStream gen(107);
    for (std::size_t trial = 0; trial < 20; ++trial) {
        const Series x = random_series(gen, 12);
        const Series y = random_series(gen, 15);
        const auto plain = dtw(x, y);
        const auto shaped = shape_dtw(x, y, 1);
        CHECK(shaped.distance == plain.distance);
        CHECK(shaped.path.pairs == plain.path.pairs);

        const auto self = shape_dtw(x, x, 5);
        CHECK(self.distance == 0.0);
        check_path_invariants(self, x.size(), x.size());
    }
}

TEST_CASE("default descriptor window is odd and floored at 3") {
    CHECK(default_descriptor_window(10) == 3);
    CHECK(default_descriptor_window(100) == 11); // round(10) -> 10 -> oddized
    CHECK(default_descriptor_window(128) == 13);
    CHECK(default_descriptor_window(5) == 3);
    for (std::size_t n : {7u, 31u, 100u, 999u}) {
        CHECK(default_descriptor_window(n) % 2 == 1);
    }
}
