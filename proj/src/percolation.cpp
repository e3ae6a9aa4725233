#include "lineperc/percolation.hpp"

#include <algorithm>
#include <string>

#include "lineperc/util.hpp"

namespace lineperc {

InfectionState::InfectionState(const IncidencePlane& plane, const PointSet& initial, int threshold)
    : plane_(&plane),
      r_(threshold),
      pts_(plane.num_points()),
      lines_(plane.num_lines()),
      counter_(size_t(plane.num_lines()), 0) {
    if (threshold < 1) throw BadRange("infection threshold must be >= 1");
    for (int p = initial.first(); p != IndexSet::npos; p = initial.next(p)) infect_point(p);
}

void InfectionState::infect_point(int p) {
    pts_.set(p);
    ++n_pts_;
    for (int32_t l : plane_->lines_through_list(p))
        if (++counter_[size_t(l)] == r_ && !lines_.test(l)) ripe_.push_back(l);
}

void InfectionState::add_point(int p) {
    if (!pts_.test(p)) infect_point(p);
}

bool InfectionState::step() {
    if (ripe_.empty()) return false;
    // Decide first whether this round adds any point: a round that would
    // only mark lines is already a fixpoint of the point recursion.
    bool adds = false;
    for (int32_t l : ripe_) {
        for (int32_t p : plane_->points_on_list(l))
            if (!pts_.test(p)) { adds = true; break; }
        if (adds) break;
    }
    if (!adds) return false;

    last_.lines.clear();
    last_.points.clear();
    std::vector<int32_t> firing;
    firing.swap(ripe_);
    for (int32_t l : firing) {
        lines_.set(l);
        ++n_lines_;
        last_.lines.push_back(l);
    }
    for (int32_t l : firing)
        for (int32_t p : plane_->points_on_list(l))
            if (!pts_.test(p)) {
                last_.points.push_back(p);
                infect_point(p);
            }
    ++round_;
    return true;
}

int InfectionState::run() {
    while (step()) {}
    return round_;
}

InfectionTrace closure(const IncidencePlane& plane, const PointSet& a, int r) {
    InfectionState st(plane, a, r);
    InfectionTrace tr;
    tr.initial = a;
    tr.threshold = r;
    while (st.step()) tr.rounds.push_back(st.last_round());
    tr.closure_points = st.infected_points();
    tr.closure_lines = st.infected_lines();
    tr.percolates = st.complete();
    if (tr.percolates) tr.time = st.round();
    return tr;
}

PointSet closure_points(const IncidencePlane& plane, const PointSet& a, int r) {
    InfectionState st(plane, a, r);
    st.run();
    return st.infected_points();
}

bool percolates(const IncidencePlane& plane, const PointSet& a, int r) {
    InfectionState st(plane, a, r);
    st.run();
    return st.complete();
}

std::optional<int> percolation_time(const IncidencePlane& plane, const PointSet& a, int r) {
    InfectionState st(plane, a, r);
    st.run();
    if (!st.complete()) return std::nullopt;
    return st.round();
}

bool is_minimal_percolating(const IncidencePlane& plane, const PointSet& a, int r) {
    if (!percolates(plane, a, r)) return false;
    for (int p = a.first(); p != IndexSet::npos; p = a.next(p)) {
        PointSet sub = a;
        sub.reset(p);
        if (percolates(plane, sub, r)) return false;
    }
    return true;
}

bool one_by_one_verify(const IncidencePlane& plane, const PointSet& a, int r,
                       std::span<const int> line_order) {
    const int n = plane.num_lines();
    if (int(line_order.size()) != n)
        throw NotAPermutation("line order has " + std::to_string(line_order.size()) +
                              " entries, expected " + std::to_string(n));
    IndexSet seen(n);
    for (int l : line_order) {
        if (l < 0 || l >= n || seen.test(l))
            throw NotAPermutation("line order is not a permutation of 0.." + std::to_string(n - 1));
        seen.set(l);
    }
    PointSet covered = a;
    for (int l : line_order) {
        if (plane.points_on(l).intersect_count(covered) < r) return false;
        covered |= plane.points_on(l);
    }
    return true;
}

std::optional<std::vector<int>> greedy_percolating_sequence(const IncidencePlane& plane,
                                                            const PointSet& a, int r) {
    const int n = plane.num_lines();
    PointSet covered = a;
    IndexSet used(n);
    std::vector<int> seq;
    seq.reserve(size_t(n));
    while (int(seq.size()) < n) {
        int pick = -1;
        for (int l = 0; l < n; ++l)
            if (!used.test(l) && plane.points_on(l).intersect_count(covered) >= r) {
                pick = l;
                break;
            }
        if (pick < 0) return std::nullopt;
        used.set(pick);
        covered |= plane.points_on(pick);
        seq.push_back(pick);
    }
    return seq;
}

namespace {

bool covered_exact(const IncidencePlane& plane, const PointSet& a, int k) {
    if (a.none()) return true;
    if (k == 0) return false;
    int p = a.first();
    for (int32_t l : plane.lines_through_list(p)) {
        PointSet rest = a;
        rest -= plane.points_on(l);
        if (covered_exact(plane, rest, k - 1)) return true;
    }
    return false;
}

} // namespace

bool covered_by_k_lines(const IncidencePlane& plane, const PointSet& a, int k) {
    if (k < 1) throw BadRange("k must be >= 1");
    if (a.none()) return true;
    if (k <= 4) return covered_exact(plane, a, k);
    // greedy under-approximation: a found cover is a real cover
    PointSet rest = a;
    for (int i = 0; i < k && rest.any(); ++i) {
        int best = -1, best_hit = -1;
        for (int l = 0; l < plane.num_lines(); ++l) {
            int hit = plane.points_on(l).intersect_count(rest);
            if (hit > best_hit) { best_hit = hit; best = l; }
        }
        rest -= plane.points_on(best);
    }
    return rest.none();
}

bool contains_r_broom(const IncidencePlane& plane, const PointSet& a, int r) {
    if (r < 1) throw BadRange("r must be >= 1");
    const int n = plane.num_lines();
    LineSet full(n);
    for (int l = 0; l < n; ++l)
        if (plane.points_on(l).is_subset_of(a)) full.set(l);
    if (full.count() < r) return false;
    for (int p = 0; p < plane.num_points(); ++p)
        if (plane.lines_through(p).intersect_count(full) >= r) return true;
    return false;
}

bool r_lines_complete_next(const IncidencePlane& plane, const InfectionState& state, int r) {
    if (binom_ull(r, 2) > (unsigned long long)plane.order()) return false;
    if (state.infected_line_count() < r) return false;
    InfectionState peek = state;
    peek.step();
    return peek.complete();
}

} // namespace lineperc
