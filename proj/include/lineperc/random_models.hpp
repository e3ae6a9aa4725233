#ifndef LINEPERC_RANDOM_MODELS_HPP
#define LINEPERC_RANDOM_MODELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lineperc/percolation.hpp"
#include "lineperc/util.hpp"

namespace lineperc {

/// One randomized experiment outcome. tau_r / tau_perc are set only for
/// permutation trials; tau_r <= tau_perc always.
struct TrialRecord {
    uint64_t seed = 0;
    std::string model; // "bernoulli" | "uniform" | "permutation"
    int sample_size = 0;
    bool percolated = false;
    int tau_r = -1;
    int tau_perc = -1;
};

/// Each point independently with probability p.
PointSet sample_bernoulli(const IncidencePlane& plane, double p, Rng& rng);

/// Uniform m-subset via a seeded partial shuffle.
PointSet sample_uniform_m(const IncidencePlane& plane, int m, Rng& rng);

struct Estimate {
    double p = 0;
    int trials = 0;
    int percolated = 0;
    double estimate = 0;
    double ci_low = 0; // 95% Wilson interval
    double ci_high = 0;
};

/// Fraction of Bernoulli(p) samples that percolate. Per-trial generators
/// are seeded by hash(seed, index), so results are independent of trial
/// order and of the number of worker threads.
Estimate percolation_probability(const IncidencePlane& plane, int r, double p, int trials,
                                 uint64_t seed, int threads = 1);

/// Draws a uniform random point permutation; returns (tau_r, tau_perc):
/// the first prefix length at which some line holds r chosen points, and
/// the first whose prefix percolates. tau_perc is located by binary search
/// (percolation is monotone in the prefix) and re-verified by the engine
/// at the boundary.
std::pair<int, int> bottleneck_trial(const IncidencePlane& plane, int r, Rng& rng);

struct BottleneckSummary {
    std::vector<TrialRecord> records;
    double equal_fraction = 0;
    double mean_tau_r = 0;
};

BottleneckSummary bottleneck_experiment(const IncidencePlane& plane, int r, int trials,
                                        uint64_t seed, int threads = 1);

/// One percolation_probability row per grid entry; the grid must be
/// sorted ascending.
std::vector<Estimate> threshold_scan(const IncidencePlane& plane, int r,
                                     const std::vector<double>& grid, int trials, uint64_t seed,
                                     int threads = 1);

/// CSV: p,trials,percolated,estimate,ci_low,ci_high
std::string scan_csv(const std::vector<Estimate>& rows);
/// CSV: trial,tau_r,tau_perc,equal
std::string bottleneck_csv(const BottleneckSummary& summary);

} // namespace lineperc

#endif
