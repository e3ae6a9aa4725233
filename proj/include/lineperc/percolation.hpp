#ifndef LINEPERC_PERCOLATION_HPP
#define LINEPERC_PERCOLATION_HPP

#include <optional>
#include <span>
#include <vector>

#include "lineperc/plane.hpp"

namespace lineperc {

/// One synchronous round: the lines newly infected in this round and the
/// points they added.
struct RoundRecord {
    std::vector<int> lines;
    std::vector<int> points;
};

/// Full record of a percolation run from an initial set. Rounds are
/// recorded while they add points; the trace length is the closure time
/// (smallest k with A^k = A^{k+1}). `time` is set only when the closure is
/// the whole point set.
struct InfectionTrace {
    PointSet initial;
    int threshold = 0;
    std::vector<RoundRecord> rounds;
    PointSet closure_points;
    LineSet closure_lines;
    bool percolates = false;
    std::optional<int> time;

    int closure_round() const { return int(rounds.size()); }
};

/// Mutable infection state driven one synchronous round at a time.
/// Per-line counters of infected points are maintained incrementally, so
/// a full run costs O(initial + touched incidences). The plane is shared
/// read-only; the state itself is a value owned by one worker.
class InfectionState {
public:
    InfectionState(const IncidencePlane& plane, const PointSet& initial, int threshold);

    /// Runs one round: every uninfected line whose counter already reached
    /// the threshold is infected together with all its points. Returns true
    /// if new points were infected (the round counts), false at fixpoint.
    /// The round's new lines/points are exposed via last_round().
    bool step();

    /// Infect one more point outside any round (used by incremental
    /// searches); counters are updated, rounds are unaffected.
    void add_point(int point);

    /// step() until fixpoint; returns the number of recorded rounds.
    int run();

    const IncidencePlane& plane() const { return *plane_; }
    int threshold() const { return r_; }
    int round() const { return round_; }
    const PointSet& infected_points() const { return pts_; }
    const LineSet& infected_lines() const { return lines_; }
    int infected_point_count() const { return n_pts_; }
    int infected_line_count() const { return n_lines_; }
    int line_counter(int line) const { return counter_[size_t(line)]; }
    bool complete() const { return n_pts_ == plane_->num_points(); }
    const RoundRecord& last_round() const { return last_; }

private:
    void infect_point(int p);

    const IncidencePlane* plane_;
    int r_;
    PointSet pts_;
    LineSet lines_;
    std::vector<uint16_t> counter_;
    std::vector<int32_t> ripe_; // uninfected lines at/above threshold
    RoundRecord last_;
    int round_ = 0;
    int n_pts_ = 0, n_lines_ = 0;
};

InfectionTrace closure(const IncidencePlane& plane, const PointSet& a, int r);

/// Closure without trace bookkeeping; the cheap path for searches.
PointSet closure_points(const IncidencePlane& plane, const PointSet& a, int r);

bool percolates(const IncidencePlane& plane, const PointSet& a, int r);

/// Number of rounds to full infection, or nullopt if a does not percolate.
std::optional<int> percolation_time(const IncidencePlane& plane, const PointSet& a, int r);

/// a percolates and no single-point deletion of it does. (Single-removal
/// suffices: closures are monotone.)
bool is_minimal_percolating(const IncidencePlane& plane, const PointSet& a, int r);

/// One-by-one model: checks |(A u l_1 u ... u l_{i-1}) n l_i| >= r for
/// every line of the given order, which must be a permutation of all line
/// indices (NotAPermutation otherwise).
bool one_by_one_verify(const IncidencePlane& plane, const PointSet& a, int r,
                       std::span<const int> line_order);

/// Greedy one-by-one sequence (always appends the lowest-index currently
/// infectable line); a complete sequence exists iff a percolates, for
/// r <= q+1. Returns nullopt when the greedy run gets stuck.
std::optional<std::vector<int>> greedy_percolating_sequence(const IncidencePlane& plane,
                                                            const PointSet& a, int r);

/// Is a contained in the union of at most k lines? Exact for k <= 4 by
/// recursing on lines through a fixed uncovered point; for k > 4 falls
/// back to a greedy cover, which may miss covers but never claims a
/// nonexistent one.
bool covered_by_k_lines(const IncidencePlane& plane, const PointSet& a, int k);

/// Does some point lie on at least r lines fully contained in a?
bool contains_r_broom(const IncidencePlane& plane, const PointSet& a, int r);

/// Checks the "r infected lines finish next round" rule on a state that
/// satisfies its hypothesis: returns true iff C(r,2) <= q, the state has
/// at least r infected lines, and one more round infects every point.
bool r_lines_complete_next(const IncidencePlane& plane, const InfectionState& state, int r);

} // namespace lineperc

#endif
