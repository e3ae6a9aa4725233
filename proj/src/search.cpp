#include "lineperc/search.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

#include "lineperc/util.hpp"

namespace lineperc {

std::string SearchOutcome::to_json(bool include_seconds) const {
    nlohmann::json j;
    j["target"] = target;
    j["q"] = q;
    j["r"] = r;
    j["value"] = value;
    j["exact"] = exact;
    j["witness"] = witness.size() ? witness.to_vector() : std::vector<int>{};
    j["nodes"] = nodes;
    if (include_seconds) j["seconds"] = seconds;
    j["strategy"] = strategy;
    j["seed"] = seed;
    j["budget_exhausted"] = budget_exhausted;
    return j.dump(2) + "\n";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Ticker {
    const Budget* budget;
    Clock::time_point start = Clock::now();
    uint64_t nodes = 0;
    bool exhausted = false;

    explicit Ticker(const Budget& b) : budget(&b) {
        if (b.max_nodes == 0 || b.max_seconds <= 0) throw BadRange("budget limits must be positive");
    }
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
    // returns false once the budget is gone; cheap except every 2^16 nodes
    bool tick() {
        if (exhausted) return false;
        ++nodes;
        if (nodes > budget->max_nodes) { exhausted = true; return false; }
        if ((nodes & 0xffff) == 0 && elapsed() > budget->max_seconds) {
            exhausted = true;
            return false;
        }
        return true;
    }
};

void verify_witness(const IncidencePlane& plane, const SearchOutcome& out, int r) {
    if (out.value < 0 || out.witness.size() == 0) return;
    if (out.target == "min_perc" || out.target == "max_time") {
        auto t = percolation_time(plane, out.witness, r);
        if (!t) throw VerificationError(out.target + ": witness does not percolate");
        if (out.target == "max_time" && *t != out.value)
            throw VerificationError("max_time: witness time mismatch");
        if (out.target == "min_perc" && out.witness.count() != out.value)
            throw VerificationError("min_perc: witness size mismatch");
    } else if (out.target == "max_nonperc") {
        if (percolates(plane, out.witness, r))
            throw VerificationError("max_nonperc: witness percolates");
        if (out.witness.count() != out.value)
            throw VerificationError("max_nonperc: witness size mismatch");
    }
}

// depth-first over ascending-index s-subsets; returns true when a
// percolating subset was found (stored in `found`)
bool min_perc_dfs(const IncidencePlane& plane, int r, int s, int next, PointSet& acc,
                  Ticker& tick, PointSet& found) {
    if (!tick.tick()) return false;
    int have = acc.count();
    if (have == s) {
        // skip leaves that sit inside r-1 lines: they cannot percolate
        if (r >= 2 && r <= 5 && covered_by_k_lines(plane, acc, r - 1)) return false;
        if (percolates(plane, acc, r)) {
            found = acc;
            return true;
        }
        return false;
    }
    int n = plane.num_points();
    for (int p = next; p <= n - (s - have); ++p) {
        acc.set(p);
        if (min_perc_dfs(plane, r, s, p + 1, acc, tick, found)) return true;
        acc.reset(p);
        if (tick.exhausted) return false;
    }
    return false;
}

} // namespace

SearchOutcome find_min_percolating(const IncidencePlane& plane, int r, const Budget& budget) {
    if (r < 1 || r > plane.order() + 1) throw BadRange("need 1 <= r <= q+1");
    Ticker tick(budget);
    SearchOutcome out;
    out.target = "min_perc";
    out.q = plane.order();
    out.r = r;
    out.strategy = "exact";

    const int n = plane.num_points();
    int floor_size = int(binom_ull(r + 1, 2));
    for (int s = std::min(floor_size, n); s <= n; ++s) {
        PointSet acc(n);
        PointSet found(n);
        bool ok;
        if (budget.symmetry) {
            acc.set(0); // first point pinned to the least orbit representative
            ok = min_perc_dfs(plane, r, s, 1, acc, tick, found);
        } else {
            ok = min_perc_dfs(plane, r, s, 0, acc, tick, found);
        }
        if (ok) {
            out.value = s;
            out.witness = found;
            out.exact = !tick.exhausted;
            break;
        }
        if (tick.exhausted) break;
    }
    out.nodes = tick.nodes;
    out.seconds = tick.elapsed();
    out.budget_exhausted = tick.exhausted;
    verify_witness(plane, out, r);
    return out;
}

namespace {

void max_nonperc_dfs(const IncidencePlane& plane, int r, const PointSet& closed, int next,
                     Ticker& tick, SearchOutcome& best) {
    if (closed.count() > best.value) {
        best.value = closed.count();
        best.witness = closed;
    }
    const int n = plane.num_points();
    for (int x = next; x < n; ++x) {
        if (closed.test(x)) continue;
        if (!tick.tick()) return;
        PointSet grown = closed;
        grown.set(x);
        PointSet cl = closure_points(plane, grown, r);
        // canonical extension: the closure must not reach below x
        if (cl.count() == n || !cl.equal_below(closed, x)) continue;
        max_nonperc_dfs(plane, r, cl, x + 1, tick, best);
        if (tick.exhausted) return;
    }
}

} // namespace

SearchOutcome find_max_nonpercolating(const IncidencePlane& plane, int r, const Budget& budget) {
    if (r < 1 || r > plane.order() + 1) throw BadRange("need 1 <= r <= q+1");
    Ticker tick(budget);
    SearchOutcome out;
    out.target = "max_nonperc";
    out.q = plane.order();
    out.r = r;
    out.strategy = "exact";
    out.witness = PointSet(plane.num_points());
    out.value = 0; // the empty set never percolates

    const int n = plane.num_points();
    PointSet root = closure_points(plane, PointSet(n), r);
    if (budget.symmetry && !root.test(0)) {
        // point-transitive planes: some maximum closed set contains point 0,
        // so only the generator-0 subtree needs walking
        if (root.count() > out.value) {
            out.value = root.count();
            out.witness = root;
        }
        PointSet grown = root;
        grown.set(0);
        PointSet cl0 = closure_points(plane, grown, r);
        if (cl0.count() != n && cl0.equal_below(root, 0))
            max_nonperc_dfs(plane, r, cl0, 1, tick, out);
    } else {
        max_nonperc_dfs(plane, r, root, 0, tick, out);
    }
    out.exact = !tick.exhausted;
    out.nodes = tick.nodes;
    out.seconds = tick.elapsed();
    out.budget_exhausted = tick.exhausted;
    verify_witness(plane, out, r);
    return out;
}

namespace {

void consider_for_max_time(const IncidencePlane& plane, int r, const PointSet& a,
                           SearchOutcome& best) {
    auto t = percolation_time(plane, a, r);
    if (t && *t > best.value) {
        best.value = *t;
        best.witness = a;
    }
}

void max_time_exact(const IncidencePlane& plane, int r, Ticker& tick, SearchOutcome& best) {
    const int n = plane.num_points();
    if (n <= 63) {
        for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
            if (!tick.tick()) return;
            PointSet a(n);
            for (int p = 0; p < n; ++p)
                if (mask & (uint64_t(1) << p)) a.set(p);
            consider_for_max_time(plane, r, a, best);
        }
        return;
    }
    // planes too large for mask enumeration: walk subsets until the budget
    // runs out (exactness is then reported false)
    std::vector<int> stack;
    PointSet acc(n);
    auto rec = [&](auto&& self, int next) -> void {
        if (!tick.tick()) return;
        consider_for_max_time(plane, r, acc, best);
        for (int p = next; p < n && !tick.exhausted; ++p) {
            acc.set(p);
            self(self, p + 1);
            acc.reset(p);
        }
    };
    rec(rec, 0);
}

PointSet random_subset_of_size(const IncidencePlane& plane, int s, Rng& rng) {
    const int n = plane.num_points();
    auto idx = std::vector<int>(size_t(n));
    for (int i = 0; i < n; ++i) idx[size_t(i)] = i;
    PointSet a(n);
    for (int i = 0; i < s; ++i) {
        int j = i + rng.below(n - i);
        std::swap(idx[size_t(i)], idx[size_t(j)]);
        a.set(idx[size_t(i)]);
    }
    return a;
}

void max_time_random(const IncidencePlane& plane, int r, Ticker& tick, Rng& rng,
                     SearchOutcome& best) {
    const int n = plane.num_points();
    const int lo = std::min(n, int(binom_ull(r + 1, 2)));
    const int hi = std::min(n, 2 * lo);
    while (tick.tick()) {
        int s = lo + (hi > lo ? rng.below(hi - lo + 1) : 0);
        consider_for_max_time(plane, r, random_subset_of_size(plane, s, rng), best);
    }
}

void max_time_hillclimb(const IncidencePlane& plane, int r, Ticker& tick, Rng& rng,
                        SearchOutcome& best) {
    const int n = plane.num_points();
    const int lo = std::min(n, int(binom_ull(r + 1, 2)));
    const int hi = std::min(n, 2 * lo);

    auto fresh = [&]() -> PointSet {
        while (tick.tick()) {
            int s = lo + (hi > lo ? rng.below(hi - lo + 1) : 0);
            PointSet a = random_subset_of_size(plane, s, rng);
            if (percolates(plane, a, r)) return a;
        }
        return PointSet(n);
    };

    PointSet cur = fresh();
    if (tick.exhausted) return;
    int cur_time = percolation_time(plane, cur, r).value_or(0);
    consider_for_max_time(plane, r, cur, best);
    int stagnant = 0;
    const int restart_after = 400;

    while (tick.tick()) {
        PointSet prop = cur;
        int kind = rng.below(4);
        auto rand_member = [&]() {
            auto v = prop.to_vector();
            return v[size_t(rng.below(int(v.size())))];
        };
        if (kind == 0 && prop.count() > 1) {
            prop.reset(rand_member()); // shrink
        } else if (kind == 1 && prop.count() < n) {
            prop.set(rng.below(n)); // grow
        } else if (prop.count() >= 1) {
            prop.reset(rand_member()); // swap
            prop.set(rng.below(n));
        }
        auto t = percolation_time(plane, prop, r);
        if (t && *t >= cur_time) {
            bool improved = *t > cur_time;
            cur = prop;
            cur_time = *t;
            if (cur_time > best.value) {
                best.value = cur_time;
                best.witness = cur;
            }
            stagnant = improved ? 0 : stagnant + 1;
        } else {
            ++stagnant;
        }
        if (stagnant > restart_after) {
            cur = fresh();
            if (tick.exhausted) return;
            cur_time = percolation_time(plane, cur, r).value_or(0);
            consider_for_max_time(plane, r, cur, best);
            stagnant = 0;
        }
    }
}

} // namespace

SearchOutcome find_max_time(const IncidencePlane& plane, int r, const std::string& strategy,
                            const Budget& budget, uint64_t seed) {
    if (r < 1 || r > plane.order() + 1) throw BadRange("need 1 <= r <= q+1");
    if (strategy != "exact" && strategy != "random" && strategy != "hillclimb")
        throw BadRange("strategy must be exact, random or hillclimb");
    Ticker tick(budget);
    SearchOutcome out;
    out.target = "max_time";
    out.q = plane.order();
    out.r = r;
    out.strategy = strategy;
    out.seed = seed;
    out.witness = PointSet(plane.num_points());

    Rng rng(seed);
    if (strategy == "exact") {
        max_time_exact(plane, r, tick, out);
        out.exact = !tick.exhausted;
    } else if (strategy == "random") {
        max_time_random(plane, r, tick, rng, out);
    } else {
        max_time_hillclimb(plane, r, tick, rng, out);
    }
    out.nodes = tick.nodes;
    out.seconds = tick.elapsed();
    out.budget_exhausted = tick.exhausted;
    verify_witness(plane, out, r);
    return out;
}

MinimalEnumeration enumerate_minimal_percolating(const IncidencePlane& plane, int r,
                                                 const Budget& budget, int size_cap) {
    if (r < 1 || r > plane.order() + 1) throw BadRange("need 1 <= r <= q+1");
    if (size_cap < 1) throw BadRange("size cap must be positive");
    Ticker tick(budget);
    MinimalEnumeration out;
    const int n = plane.num_points();

    PointSet acc(n);
    bool truncated = false;
    auto rec = [&](auto&& self, int next, int s) -> void {
        if (truncated) return;
        if (!tick.tick()) { truncated = true; return; }
        if (acc.count() == s) {
            if (percolates(plane, acc, r) && is_minimal_percolating(plane, acc, r))
                out.sets.push_back(acc);
            return;
        }
        for (int p = next; p <= n - (s - acc.count()) && !truncated; ++p) {
            acc.set(p);
            self(self, p + 1, s);
            acc.reset(p);
        }
    };
    for (int s = 1; s <= std::min(size_cap, n) && !truncated; ++s) rec(rec, 0, s);
    out.complete = !truncated; // complete for the requested size range
    out.nodes = tick.nodes;
    return out;
}

} // namespace lineperc
