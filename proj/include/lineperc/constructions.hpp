#ifndef LINEPERC_CONSTRUCTIONS_HPP
#define LINEPERC_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lineperc/percolation.hpp"

namespace lineperc {

struct CheckResult {
    std::string name;
    bool pass = false;
};

/// A named point/line configuration together with the verification checks
/// it ran before being emitted. Builders throw ConstructionFailed when a
/// mandatory check fails, so an emitted result always verifies.
struct ConstructionResult {
    std::string name;
    int q = 0;
    int r = 0;
    PointSet points;
    std::vector<int> lines; // line indices, when the construction is line-based
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    /// { name, q, r, point_indices: sorted, checks: [{name, pass}] }
    std::string to_json() const;
};

namespace constructions {

/// Union of the first m lines (ascending index) through `center`; mq+1
/// points. BadArity unless 1 <= m <= q+1.
PointSet r_broom(const IncidencePlane& plane, int center, int m);

/// The conic x^2 = yz: {(t, t^2, 1)} u {(0,1,0)}, q+1 points, no 3
/// collinear. Requires coordinates.
ConstructionResult conic_oval(const IncidencePlane& plane);

/// Conic plus nucleus (1,0,0); q+2 points, every line meets it in 0 or 2
/// points. Requires coordinates and even q.
ConstructionResult hyperoval(const IncidencePlane& plane);

/// k lines, no three concurrent: the duals {[t, t^2, 1]} u {[0,1,0]} of the
/// conic. TooMany if k > q+1; requires coordinates.
std::vector<int> general_position_lines(const IncidencePlane& plane, int k);

/// Percolating set of the minimum size r(r+1)/2: parts of size r-i+1 on
/// line i of a family in general position, each part avoiding the earlier
/// lines. Inclusion-minimal because it meets the size floor. Requires
/// 2r <= q+1 or r^2 < 2q.
ConstructionResult min_percolating_from_general_position(const IncidencePlane& plane, int r,
                                                         std::optional<uint64_t> shuffle_seed = {});

/// Inclusion-minimal percolating set with percolation time exactly 3, of
/// size 3 + 2(r-1) + (r-3)^2, for 4 <= r <= (q+7)/3.
///
/// For r >= 5 this is a broom construction: r lines through P; two
/// transversals l'_1, l'_2 through a point of l_1 meeting every l_i in a
/// marked point; a free point on l_3; and (r-3) extra points per line
/// l_4..l_r placed at crossings with auxiliary lines through the free
/// point. Each auxiliary line hosts at most r-4 extra points: letting any
/// of them carry more leaves single-point deletions that still percolate,
/// which the final verification would reject. For r = 4 a staircase of
/// parts 4+3+2+1 on four lines in general position is used instead, with
/// the crossing of the first two lines in part one and the crossing of the
/// last two in part three; the broom layout cannot reach time 3 at r = 4
/// because the line joining P and the free point always holds exactly four
/// initial points and fires in round one.
///
/// All free picks are lowest-index admissible; verification (size,
/// percolation, time, minimality) gates every emitted result.
ConstructionResult minimal_t3_set(const IncidencePlane& plane, int r,
                                  std::optional<uint64_t> shuffle_seed = {});

/// Percolating set of size r(r+1)/2 with percolation time exactly r+1,
/// for r >= 5 and C(r,2) <= q. Parts of size r+1-i on lines in general
/// position; the largest part's line is derived last so that it crosses
/// line 2 on q_1 and line 3 on q_2, the two lines joining the singleton
/// part to the pair part. Exactly one new line is infected in each of the
/// first r-1 rounds.
ConstructionResult slow_percolating_set(const IncidencePlane& plane, int r,
                                        std::optional<uint64_t> shuffle_seed = {});

/// Union of q+2 lines no three concurrent (dual hyperoval), q even:
/// (q+2)(q+1)/2 points, every other line meets it in exactly q/2+1 points,
/// hence non-percolating at r = q/2+2. A custom r only reports the
/// non-percolation check instead of enforcing it.
ConstructionResult dual_hyperoval_union(const IncidencePlane& plane,
                                        std::optional<int> custom_r = {});

/// Complement of a hyperoval, q even: (q+1)(q-1) points, every line holds
/// exactly two uninfected points, hence non-percolating at r = q.
ConstructionResult hyperoval_complement(const IncidencePlane& plane,
                                        std::optional<int> custom_r = {});

} // namespace constructions

} // namespace lineperc

#endif
