#ifndef LINEPERC_BOUNDS_HPP
#define LINEPERC_BOUNDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "lineperc/rational.hpp"

namespace lineperc {

/// Closed-form bounds for one percolation parameter at (q, r), with
/// citation keys and an exactness condition when one applies.
struct BoundReport {
    std::string parameter; // "m_r" | "M_r" | "T_r"
    int q = 0;
    int r = 0;
    long long lower = 0;
    std::string lower_cite;
    long long upper = 0;
    std::string upper_cite;
    bool exact = false;
    std::string exact_condition;
    std::vector<std::pair<std::string, std::string>> notes;

    std::string to_json() const;
};

/// One candidate optimum of the linear program behind the sequence-counting
/// lower bound: j intersection-multiplicity sums f_1..f_j, the overflow sum
/// g, and the objective h = Nr - sum f_k - g.
struct LpPoint {
    int j = 0;
    long long N = 0;
    std::vector<Rational> f;
    Rational g;
    Rational h;
};

struct LpValue {
    Rational h_min;
    bool valid = false; // the closed form bounds m_r only inside the window
};

/// Closed form h_min = Nr - N(q+1)j/(j+2) - N(N-1)/((j+1)(j+2)); `valid`
/// reports whether j(q+1) <= N-1 <= 2(j+1)(q+1) holds, which is exactly
/// when the minimizing point is a vertex of the feasible polytope.
LpValue lp_h_min(long long q, long long r, long long j, long long N);

struct LpOracleResult {
    Rational min_h;
    LpPoint argmin;
    int feasible_vertices = 0;
    int degenerate_systems = 0; // singular equality subsets, skipped
};

/// Independent check of lp_h_min: enumerates every candidate vertex (each
/// choice of j+1 of the j+3 constraints tight), solves the equality system
/// in exact rationals, filters by feasibility and minimizes h. Requires
/// 1 <= j <= 6.
LpOracleResult lp_vertex_oracle(long long q, long long r, int j, long long N);

struct LpBest {
    long long bound = 0; // ceil of the best valid h_min
    int j = 0;
    long long N = 0;
    bool found = false;
};

/// Best valid sequence-counting bound over j = 1..q-1; for each j tries the
/// quadratic optimum in N (clamped to the validity window and to the line
/// count) together with the convenient choice N = (j+1)q.
LpBest best_lp_lower(long long q, long long r);

/// min percolating set size: max(C(r+1,2), LP) <= m_r <= (r-1)r + 1.
/// Exact at C(r+1,2) when r < sqrt(2q), or when 2r <= q+1 on a standard
/// plane (is_pg).
BoundReport m_r_bounds(int q, int r, bool is_pg = true);

/// max non-percolating set size: q(r-1)+1 <= M_r <= (q+1)(r-1); exact at
/// the lower value when r < q/2 + 2; for even q on a standard plane the
/// upper value is exact at r = q/2+2 and r = q.
BoundReport M_r_bounds(int q, int r, bool is_pg = true);

/// max percolation time: exact small-r values, r+1 when r >= 5 and
/// C(r,2) <= q, otherwise only the generic sandwich.
BoundReport T_r_bounds(int q, int r);

/// Percolation threshold q^(-(r+2)/r) for Bernoulli point sets.
double critical_p(int q, int r);
Rational threshold_exponent(int r);

} // namespace lineperc

#endif
