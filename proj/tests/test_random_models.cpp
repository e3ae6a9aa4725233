#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lineperc/random_models.hpp"

using namespace lineperc;

namespace {

IncidencePlane pg(int q) { return IncidencePlane::build_pg2(Field::make(q)); }

} // namespace

TEST_CASE("degenerate sampling parameters") {
    IncidencePlane pl = pg(3);
    Rng rng(1);
    CHECK(sample_bernoulli(pl, 0.0, rng).none());
    CHECK(sample_bernoulli(pl, 1.0, rng) == PointSet::full(13));
    CHECK(sample_uniform_m(pl, 13, rng) == PointSet::full(13));
    CHECK(sample_uniform_m(pl, 0, rng).none());
    CHECK_THROWS_AS(sample_uniform_m(pl, 14, rng), BadRange);
    CHECK_THROWS_AS(sample_bernoulli(pl, 1.5, rng), BadRange);
}

TEST_CASE("bernoulli sample sizes follow binomial statistics") {
    IncidencePlane pl = pg(3);
    const int trials = 10000;
    double sum = 0;
    Rng rng(20240817);
    for (int i = 0; i < trials; ++i) sum += sample_bernoulli(pl, 0.5, rng).count();
    double mean = sum / trials;
    double sigma_mean = std::sqrt(13 * 0.25 / trials);
    CHECK(std::abs(mean - 6.5) <= 3 * sigma_mean);
}

TEST_CASE("uniform m-subsets have the right size and spread") {
    IncidencePlane pl = pg(3);
    Rng rng(99);
    std::vector<int> seen(13, 0);
    for (int i = 0; i < 2600; ++i) {
        PointSet a = sample_uniform_m(pl, 4, rng);
        CHECK(a.count() == 4);
        for (int p : a.to_vector()) ++seen[size_t(p)];
    }
    // each point should appear about 2600 * 4/13 = 800 times
    for (int p = 0; p < 13; ++p) CHECK(std::abs(seen[size_t(p)] - 800) < 150);
}

TEST_CASE("percolation probability endpoints") {
    IncidencePlane pl = pg(3);
    auto one = percolation_probability(pl, 2, 1.0, 50, 1);
    CHECK(one.estimate == 1.0);
    CHECK(one.ci_high == 1.0);
    auto zero = percolation_probability(pl, 2, 0.0, 50, 1);
    CHECK(zero.estimate == 0.0);
    CHECK(zero.ci_low == 0.0);
    CHECK(zero.ci_high < 0.1);
}

TEST_CASE("trial results are independent of thread count") {
    IncidencePlane pl = pg(5);
    auto serial = percolation_probability(pl, 2, 0.3, 64, 42, 1);
    auto parallel = percolation_probability(pl, 2, 0.3, 64, 42, 4);
    CHECK(serial.percolated == parallel.percolated);
    CHECK(serial.estimate == parallel.estimate);
}

TEST_CASE("bottleneck trials") {
    IncidencePlane pl = pg(5);
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        auto [tau_r, tau_perc] = bottleneck_trial(pl, 3, rng);
        CHECK(tau_r >= 3);
        CHECK(tau_r <= tau_perc);
        CHECK(tau_perc <= pl.num_points());
    }
    // r = 1: the first point infects its lines and everything follows
    auto [t1, t2] = bottleneck_trial(pl, 1, rng);
    CHECK(t1 == 1);
    CHECK(t2 == 1);
}

TEST_CASE("binary-search tau_perc equals a linear scan") {
    for (int q : {3, 5, 7}) {
        CAPTURE(q);
        IncidencePlane pl = pg(q);
        for (int trial = 0; trial < 12; ++trial) {
            uint64_t s = derive_seed(777, uint64_t(q * 100 + trial));
            Rng rng_a(s);
            auto [tau_r, tau_perc] = bottleneck_trial(pl, 3, rng_a);
            // rebuild the same permutation and scan linearly
            Rng rng_b(s);
            const int n = pl.num_points();
            auto perm = std::vector<int>(size_t(n));
            for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
            for (int i = n - 1; i > 0; --i) std::swap(perm[size_t(i)], perm[size_t(rng_b.below(i + 1))]);
            PointSet a(n);
            int linear = -1;
            for (int i = 0; i < n; ++i) {
                a.set(perm[size_t(i)]);
                if (percolates(pl, a, 3)) { linear = i + 1; break; }
            }
            CHECK(linear == tau_perc);
            CHECK(tau_r <= tau_perc);
        }
    }
}

TEST_CASE("percolation is monotone under adding points") {
    IncidencePlane pl = pg(5);
    Rng rng(5);
    for (int i = 0; i < 60; ++i) {
        PointSet a = sample_bernoulli(pl, 0.35, rng);
        if (!percolates(pl, a, 3)) continue;
        PointSet b = a;
        b.set(rng.below(pl.num_points()));
        CHECK(percolates(pl, b, 3));
    }
}

TEST_CASE("reproducibility: same master seed, identical records") {
    IncidencePlane pl = pg(5);
    auto a = bottleneck_experiment(pl, 3, 20, 123);
    auto b = bottleneck_experiment(pl, 3, 20, 123, 4);
    CHECK(bottleneck_csv(a) == bottleneck_csv(b));
    for (int i = 0; i < 20; ++i) {
        CHECK(a.records[size_t(i)].tau_r == b.records[size_t(i)].tau_r);
        CHECK(a.records[size_t(i)].tau_perc == b.records[size_t(i)].tau_perc);
        CHECK(a.records[size_t(i)].seed == b.records[size_t(i)].seed);
    }
}

TEST_CASE("threshold scan over the trivial grid") {
    IncidencePlane pl = pg(3);
    auto rows = threshold_scan(pl, 3, {0.0, 1.0}, 40, 9);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].estimate == 0.0);
    CHECK(rows[1].estimate == 1.0);
    CHECK_THROWS_AS(threshold_scan(pl, 3, {1.0, 0.0}, 10, 9), BadRange);

    std::string csv = scan_csv(rows);
    CHECK(csv.rfind("p,trials,percolated,estimate,ci_low,ci_high\n", 0) == 0);
    CHECK(csv.find("\n1,40,40,1.000000") != std::string::npos);
}

TEST_CASE("model equivalence spot check: Bernoulli vs uniform-m") {
    IncidencePlane pl = pg(5);
    const int trials = 300;
    double p = 0.30;
    auto bern = percolation_probability(pl, 3, p, trials, 31337);
    int m = int(std::lround(p * pl.num_points()));
    int perc = 0;
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(31338, uint64_t(i)));
        if (percolates(pl, sample_uniform_m(pl, m, rng), 3)) ++perc;
    }
    Estimate unif;
    unif.trials = trials;
    unif.percolated = perc;
    double phat = double(perc) / trials;
    // CI overlap between the two models
    CHECK(phat >= bern.ci_low - 0.12);
    CHECK(phat <= bern.ci_high + 0.12);
}
