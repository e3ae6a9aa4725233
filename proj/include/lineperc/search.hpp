#ifndef LINEPERC_SEARCH_HPP
#define LINEPERC_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lineperc/percolation.hpp"

namespace lineperc {

/// Node and wall-clock limits for a search run; limits are checked every
/// 2^16 nodes so runs stay predictable. `symmetry` fixes the first chosen
/// point to index 0, which is sound on point-transitive planes (PG(2,q)).
struct Budget {
    uint64_t max_nodes = UINT64_C(50'000'000);
    double max_seconds = 120.0;
    bool symmetry = false;
};

struct SearchOutcome {
    std::string target; // "min_perc" | "max_nonperc" | "max_time"
    int q = 0;
    int r = 0;
    long long value = -1;
    bool exact = false;
    PointSet witness;
    uint64_t nodes = 0;
    double seconds = 0.0;
    std::string strategy; // "exact" | "random" | "hillclimb"
    uint64_t seed = 0;
    bool budget_exhausted = false;

    /// { target, q, r, value, exact, witness, nodes, seconds, strategy,
    ///   seed, budget_exhausted }; seconds can be omitted for byte-stable
    ///   comparisons.
    std::string to_json(bool include_seconds = true) const;
};

/// Smallest percolating set: iterative deepening on the size starting at
/// the C(r+1,2) floor, depth-first over subsets in ascending index order.
/// Leaves covered by at most r-1 lines are skipped without running the
/// engine (they cannot percolate); the cover test is exact for r <= 5 and
/// a sound under-approximation beyond.
SearchOutcome find_min_percolating(const IncidencePlane& plane, int r, const Budget& budget);

/// Largest non-percolating set. Maximal non-percolating sets are closed
/// (one more round adds nothing), so the search walks the closure lattice:
/// branch on adding a point, replace the working set by its closure, keep
/// only canonical extensions, prune complete closures. Exact when the walk
/// finishes within budget.
SearchOutcome find_max_nonpercolating(const IncidencePlane& plane, int r, const Budget& budget);

/// Largest percolation time over percolating sets. "exact" enumerates all
/// subsets (feasible for q <= 3); "random" samples seeded uniform subsets
/// with sizes around the minimum-size floor; "hillclimb" mutates a witness
/// by point moves, accepting non-decreasing times, with restarts on
/// stagnation. Heuristic strategies never report exact.
SearchOutcome find_max_time(const IncidencePlane& plane, int r, const std::string& strategy,
                            const Budget& budget, uint64_t seed);

struct MinimalEnumeration {
    std::vector<PointSet> sets;
    bool complete = false; // false when truncated by budget or size cap
    uint64_t nodes = 0;
};

/// All inclusion-minimal percolating sets of size <= size_cap, in
/// ascending size and lexicographic order, each verified minimal.
MinimalEnumeration enumerate_minimal_percolating(const IncidencePlane& plane, int r,
                                                 const Budget& budget, int size_cap);

} // namespace lineperc

#endif
