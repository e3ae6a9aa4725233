#include "lineperc/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

namespace lineperc {

PointSet sample_bernoulli(const IncidencePlane& plane, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw BadRange("probability must be in [0,1]");
    PointSet a(plane.num_points());
    for (int i = 0; i < plane.num_points(); ++i)
        if (rng.unit() < p) a.set(i);
    return a;
}

PointSet sample_uniform_m(const IncidencePlane& plane, int m, Rng& rng) {
    const int n = plane.num_points();
    if (m < 0 || m > n) throw BadRange("subset size must be in [0, n]");
    auto idx = std::vector<int>(size_t(n));
    for (int i = 0; i < n; ++i) idx[size_t(i)] = i;
    PointSet a(n);
    for (int i = 0; i < m; ++i) {
        int j = i + rng.below(n - i);
        std::swap(idx[size_t(i)], idx[size_t(j)]);
        a.set(idx[size_t(i)]);
    }
    return a;
}

namespace {

constexpr double kZ95 = 1.959963984540054;

void wilson(Estimate& e) {
    if (e.trials == 0) return;
    double n = e.trials;
    double phat = double(e.percolated) / n;
    double z2 = kZ95 * kZ95;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = kZ95 * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    e.estimate = phat;
    e.ci_low = e.percolated == 0 ? 0.0 : std::max(0.0, center - half);
    e.ci_high = e.percolated == e.trials ? 1.0 : std::min(1.0, center + half);
}

// run `trials` jobs, reduced in index order regardless of thread count
template <typename Job>
void run_indexed(int trials, int threads, Job&& job) {
    threads = std::max(1, threads);
    if (threads == 1) {
        for (int i = 0; i < trials; ++i) job(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t]() {
            for (int i = t; i < trials; i += threads) job(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace

Estimate percolation_probability(const IncidencePlane& plane, int r, double p, int trials,
                                 uint64_t seed, int threads) {
    if (trials < 1) throw BadRange("need at least one trial");
    if (p < 0.0 || p > 1.0) throw BadRange("probability must be in [0,1]");
    std::vector<char> hit(size_t(trials), 0);
    run_indexed(trials, threads, [&](int i) {
        Rng rng(derive_seed(seed, uint64_t(i)));
        PointSet a = sample_bernoulli(plane, p, rng);
        hit[size_t(i)] = percolates(plane, a, r) ? 1 : 0;
    });
    Estimate e;
    e.p = p;
    e.trials = trials;
    for (char h : hit) e.percolated += h;
    wilson(e);
    return e;
}

std::pair<int, int> bottleneck_trial(const IncidencePlane& plane, int r, Rng& rng) {
    const int n = plane.num_points();
    if (r < 1 || r > plane.order() + 1) throw BadRange("need 1 <= r <= q+1");

    auto perm = std::vector<int>(size_t(n));
    for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[size_t(i)], perm[size_t(rng.below(i + 1))]);

    // tau_r: incremental per-line counters, O(1) amortized per point
    auto counter = std::vector<uint16_t>(size_t(plane.num_lines()), 0);
    int tau_r = -1;
    for (int i = 0; i < n && tau_r < 0; ++i)
        for (int32_t l : plane.lines_through_list(perm[size_t(i)]))
            if (++counter[size_t(l)] == r) {
                tau_r = i + 1;
                break;
            }
    if (tau_r < 0) throw VerificationError("no line ever reached the threshold");

    auto prefix = [&](int len) {
        PointSet a(n);
        for (int i = 0; i < len; ++i) a.set(perm[size_t(i)]);
        return a;
    };

    // smallest percolating prefix length in [tau_r, n]; percolation is
    // monotone in the prefix, so binary search is sound
    int lo = tau_r, hi = n;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (percolates(plane, prefix(mid), r))
            hi = mid;
        else
            lo = mid + 1;
    }
    int tau_perc = lo;

    // paranoia at the boundary: the found prefix percolates, its
    // predecessor does not
    if (!percolates(plane, prefix(tau_perc), r))
        throw VerificationError("bottleneck: found prefix does not percolate");
    if (tau_perc > tau_r && percolates(plane, prefix(tau_perc - 1), r))
        throw VerificationError("bottleneck: predecessor prefix percolates");
    if (tau_r > tau_perc) throw VerificationError("bottleneck: tau_r > tau_perc");
    return {tau_r, tau_perc};
}

BottleneckSummary bottleneck_experiment(const IncidencePlane& plane, int r, int trials,
                                        uint64_t seed, int threads) {
    if (trials < 1) throw BadRange("need at least one trial");
    BottleneckSummary out;
    out.records.resize(size_t(trials));
    run_indexed(trials, threads, [&](int i) {
        uint64_t s = derive_seed(seed, uint64_t(i));
        Rng rng(s);
        auto [tr, tp] = bottleneck_trial(plane, r, rng);
        TrialRecord rec;
        rec.seed = s;
        rec.model = "permutation";
        rec.sample_size = tp;
        rec.percolated = true;
        rec.tau_r = tr;
        rec.tau_perc = tp;
        out.records[size_t(i)] = rec;
    });
    int equal = 0;
    double sum = 0;
    for (const auto& rec : out.records) {
        if (rec.tau_r == rec.tau_perc) ++equal;
        sum += rec.tau_r;
    }
    out.equal_fraction = double(equal) / double(trials);
    out.mean_tau_r = sum / double(trials);
    return out;
}

std::vector<Estimate> threshold_scan(const IncidencePlane& plane, int r,
                                     const std::vector<double>& grid, int trials, uint64_t seed,
                                     int threads) {
    if (!std::is_sorted(grid.begin(), grid.end())) throw BadRange("grid must be sorted ascending");
    std::vector<Estimate> rows;
    rows.reserve(grid.size());
    for (size_t gi = 0; gi < grid.size(); ++gi)
        rows.push_back(percolation_probability(plane, r, grid[gi], trials,
                                               derive_seed(seed, 0x5ca0 + gi), threads));
    return rows;
}

std::string scan_csv(const std::vector<Estimate>& rows) {
    std::string out = "p,trials,percolated,estimate,ci_low,ci_high\n";
    char buf[160];
    for (const auto& e : rows) {
        std::snprintf(buf, sizeof buf, "%.10g,%d,%d,%.6f,%.6f,%.6f\n", e.p, e.trials,
                      e.percolated, e.estimate, e.ci_low, e.ci_high);
        out += buf;
    }
    return out;
}

std::string bottleneck_csv(const BottleneckSummary& summary) {
    std::string out = "trial,tau_r,tau_perc,equal\n";
    char buf[96];
    for (size_t i = 0; i < summary.records.size(); ++i) {
        const auto& rec = summary.records[i];
        std::snprintf(buf, sizeof buf, "%zu,%d,%d,%d\n", i, rec.tau_r, rec.tau_perc,
                      rec.tau_r == rec.tau_perc ? 1 : 0);
        out += buf;
    }
    return out;
}

} // namespace lineperc
