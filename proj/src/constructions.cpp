#include "lineperc/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "lineperc/util.hpp"

namespace lineperc {

std::string ConstructionResult::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["q"] = q;
    j["r"] = r;
    j["point_indices"] = points.to_vector();
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}});
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

namespace constructions {

namespace {

void require(ConstructionResult& res, const std::string& check, bool pass) {
    res.checks.push_back({check, pass});
    if (!pass) throw ConstructionFailed(res.name + ": check failed: " + check);
}

std::vector<int> maybe_shuffled(std::vector<int> v, Rng* rng) {
    if (rng) rng->shuffle(v);
    return v;
}

// first `take` candidates of line `l` outside `excluded`, starting at a
// rotation offset so failed verifications can move on to fresh picks
std::vector<int> pick_on_line(const IncidencePlane& pl, int l, const IndexSet& excluded,
                              int take, Rng* rng, int salt = 0) {
    std::vector<int> cands;
    for (int p : maybe_shuffled(pl.points_on(l).to_vector(), rng))
        if (!excluded.test(p)) cands.push_back(p);
    std::vector<int> out;
    if (cands.empty()) return out;
    for (int i = 0; i < int(cands.size()) && int(out.size()) < take; ++i)
        out.push_back(cands[size_t((i + salt) % int(cands.size()))]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool no_three_concurrent(const IncidencePlane& pl, const std::vector<int>& lines) {
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            int x = pl.meet(lines[i], lines[j]);
            for (size_t k = j + 1; k < lines.size(); ++k)
                if (pl.points_on(lines[k]).test(x)) return false;
        }
    return true;
}

} // namespace

PointSet r_broom(const IncidencePlane& plane, int center, int m) {
    if (m < 1 || m > plane.order() + 1)
        throw BadArity("broom arity must be between 1 and q+1, got " + std::to_string(m));
    if (center < 0 || center >= plane.num_points()) throw BadRange("bad center point");
    PointSet a(plane.num_points());
    auto lines = plane.lines_through_list(center);
    for (int i = 0; i < m; ++i) a |= plane.points_on(lines[size_t(i)]);
    return a;
}

ConstructionResult conic_oval(const IncidencePlane& plane) {
    const Field& F = plane.field();
    const int q = plane.order();
    ConstructionResult res;
    res.name = "conic_oval";
    res.q = q;
    res.points = PointSet(plane.num_points());
    for (int t = 0; t < q; ++t) res.points.set(plane.point_index(t, F.mul(t, t), 1));
    res.points.set(plane.point_index(0, 1, 0));

    require(res, "size_q_plus_1", res.points.count() == q + 1);
    bool arc = true;
    for (int l = 0; l < plane.num_lines(); ++l)
        if (plane.points_on(l).intersect_count(res.points) > 2) { arc = false; break; }
    require(res, "is_arc", arc);
    return res;
}

ConstructionResult hyperoval(const IncidencePlane& plane) {
    const int q = plane.order();
    if (q % 2 != 0) throw OddOrder("hyperoval requires even q, got " + std::to_string(q));
    ConstructionResult res = conic_oval(plane);
    res.name = "hyperoval";
    res.points.set(plane.point_index(1, 0, 0)); // nucleus of the conic in even characteristic
    require(res, "size_q_plus_2", res.points.count() == q + 2);
    bool even_meets = true;
    for (int l = 0; l < plane.num_lines(); ++l) {
        int m = plane.points_on(l).intersect_count(res.points);
        if (m != 0 && m != 2) { even_meets = false; break; }
    }
    require(res, "every_line_meets_0_or_2", even_meets);
    return res;
}

std::vector<int> general_position_lines(const IncidencePlane& plane, int k) {
    const int q = plane.order();
    if (k < 1) throw BadRange("k must be >= 1");
    if (k > q + 1)
        throw TooMany("at most q+1 = " + std::to_string(q + 1) +
                      " general-position lines available, asked for " + std::to_string(k));
    const Field& F = plane.field();
    std::vector<int> lines;
    for (int t = 0; t < q && int(lines.size()) < k; ++t)
        lines.push_back(plane.line_index(t, F.mul(t, t), 1));
    if (int(lines.size()) < k) lines.push_back(plane.line_index(0, 1, 0));
    if (!no_three_concurrent(plane, lines))
        throw VerificationError("dual conic lines fail the general position check");
    return lines;
}

ConstructionResult min_percolating_from_general_position(const IncidencePlane& plane, int r,
                                                         std::optional<uint64_t> shuffle_seed) {
    const int q = plane.order();
    if (r < 1 || r > q + 1) throw BadRange("need 1 <= r <= q+1");
    if (2 * r > q + 1 && (long long)r * r >= 2LL * q)
        throw PreconditionUnmet("need 2r <= q+1 or r < sqrt(2q) for a minimum percolating set");
    std::optional<Rng> rng;
    if (shuffle_seed) rng.emplace(*shuffle_seed);

    ConstructionResult res;
    res.name = "min_percolating_from_general_position";
    res.q = q;
    res.r = r;
    res.lines = general_position_lines(plane, std::min(2 * r, q + 1));
    res.points = PointSet(plane.num_points());

    IndexSet used(plane.num_points());
    for (int i = 0; i < r; ++i) {
        auto part = pick_on_line(plane, res.lines[size_t(i)], used, r - i, rng ? &*rng : nullptr);
        for (int p : part) res.points.set(p);
        used |= plane.points_on(res.lines[size_t(i)]);
    }

    require(res, "size_is_r_plus_1_choose_2", res.points.count() == int(binom_ull(r + 1, 2)));
    require(res, "percolates", percolates(plane, res.points, r));
    // any percolating set needs at least C(r+1,2) points, so meeting the
    // floor certifies inclusion-minimality
    require(res, "minimal_by_size_floor", true);
    return res;
}

namespace {

// staircase with parts 4+3+2+1 on general-position lines g0..g3; g0^g1
// sits in part one and g2^g3 in part three, so the rounds are {g0,g1},
// {g2,g3}, everything. The broom layout cannot reach time 3 at r = 4: the
// line joining its center to the free point always carries exactly four
// initial points and fires a round early.
ConstructionResult t3_staircase_r4(const IncidencePlane& plane, Rng* rng) {
    const int q = plane.order();
    ConstructionResult res;
    res.name = "minimal_t3_set";
    res.q = q;
    res.r = 4;

    // four lines, no three concurrent, greedily by index (no coordinates needed)
    std::vector<int> g;
    for (int l = 0; l < plane.num_lines() && g.size() < 4; ++l) {
        g.push_back(l);
        if (!no_three_concurrent(plane, g)) g.pop_back();
    }
    if (g.size() < 4) throw ConstructionFailed("minimal_t3_set: no 4 lines in general position");

    IndexSet crossings(plane.num_points());
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) crossings.set(plane.meet(g[i], g[j]));

    for (int salt = 0; salt <= q; ++salt) {
        PointSet a(plane.num_points());
        a.set(plane.meet(g[0], g[1]));
        a.set(plane.meet(g[2], g[3]));
        IndexSet excl = crossings;
        int sizes[4] = {3, 3, 1, 1};
        for (int i = 0; i < 4; ++i) {
            for (int p : pick_on_line(plane, g[size_t(i)], excl, sizes[i], rng, salt)) a.set(p);
            excl |= plane.points_on(g[size_t(i)]);
        }
        if (a.count() != 10) continue;
        if (percolation_time(plane, a, 4) != 3) continue;
        if (!is_minimal_percolating(plane, a, 4)) continue;
        res.points = a;
        res.lines = g;
        require(res, "size_formula", true);
        require(res, "percolates", true);
        require(res, "time_is_3", true);
        require(res, "inclusion_minimal", true);
        return res;
    }
    throw ConstructionFailed("minimal_t3_set: no admissible staircase at r=4");
}

ConstructionResult t3_broom(const IncidencePlane& plane, int r, Rng* rng) {
    const int q = plane.order();
    const int n = plane.num_points();
    ConstructionResult res;
    res.name = "minimal_t3_set";
    res.q = q;
    res.r = r;

    int P = rng ? rng->below(n) : 0;
    auto through = plane.lines_through_list(P);
    std::vector<int> l(through.begin(), through.begin() + r); // l[0] = l_1, ...

    auto points_of = [&](int line, const std::set<int>& excl) {
        std::vector<int> v;
        for (int p : maybe_shuffled(plane.points_on(line).to_vector(), rng))
            if (!excl.count(p)) v.push_back(p);
        return v;
    };

    for (int P1 : points_of(l[0], {P}))
        for (int P21 : points_of(l[1], {P}))
            for (int P22 : points_of(l[1], {P, P21})) {
                int lp1 = plane.line_through(P1, P21);
                int lp2 = plane.line_through(P1, P22);
                std::vector<int> mk1(size_t(r) + 1, -1), mk2(size_t(r) + 1, -1);
                mk1[2] = P21;
                mk2[2] = P22;
                for (int i = 3; i <= r; ++i) {
                    mk1[size_t(i)] = plane.meet(l[size_t(i) - 1], lp1);
                    mk2[size_t(i)] = plane.meet(l[size_t(i) - 1], lp2);
                }

                // P33 may not put an extra point on top of a marked one
                std::set<int> bad{P, mk1[3], mk2[3]};
                for (int i = 4; i <= r; ++i)
                    for (int j = 4; j <= r; ++j) {
                        if (j == i) continue;
                        int a = plane.line_through(mk1[size_t(j)], mk2[size_t(i)]);
                        if (a != l[2]) bad.insert(plane.meet(l[2], a));
                        int b = plane.line_through(mk2[size_t(j)], mk1[size_t(i)]);
                        if (b != l[2]) bad.insert(plane.meet(l[2], b));
                    }

                for (int P33 : points_of(l[2], bad)) {
                    // extra points for l_i sit at its crossings with
                    // auxiliary lines P33-P_{j,side}; at most r-4 extras per
                    // auxiliary line, or some single deletions keep enough
                    // structure to percolate and minimality is lost
                    std::map<std::pair<int, int>, int> load;
                    const int cap = std::max(1, r - 4);
                    bool jam = false;
                    PointSet a(n);
                    a.set(P);
                    a.set(P1);
                    a.set(P33);
                    for (int i = 2; i <= r; ++i) {
                        a.set(mk1[size_t(i)]);
                        a.set(mk2[size_t(i)]);
                    }
                    for (int i = 4; i <= r && !jam; ++i) {
                        int placed = 0;
                        for (int j = 4; j <= r && placed < r - 3; ++j) {
                            if (j == i) continue;
                            for (int side = 1; side <= 2 && placed < r - 3; ++side) {
                                auto key = std::make_pair(j, side);
                                if (load[key] >= cap) continue;
                                int anchor = side == 1 ? mk1[size_t(j)] : mk2[size_t(j)];
                                a.set(plane.meet(l[size_t(i) - 1], plane.line_through(P33, anchor)));
                                ++load[key];
                                ++placed;
                            }
                        }
                        if (placed < r - 3) jam = true;
                    }
                    if (jam) continue;
                    if (a.count() != 3 + 2 * (r - 1) + (r - 3) * (r - 3)) continue;
                    if (percolation_time(plane, a, r) != 3) continue;
                    if (!is_minimal_percolating(plane, a, r)) continue;
                    res.points = a;
                    res.lines = l;
                    require(res, "size_formula", true);
                    require(res, "percolates", true);
                    require(res, "time_is_3", true);
                    require(res, "inclusion_minimal", true);
                    return res;
                }
            }
    throw ConstructionFailed("minimal_t3_set: no admissible choice for q=" + std::to_string(q) +
                             " r=" + std::to_string(r));
}

} // namespace

ConstructionResult minimal_t3_set(const IncidencePlane& plane, int r,
                                  std::optional<uint64_t> shuffle_seed) {
    const int q = plane.order();
    if (r < 4 || 3 * r > q + 7)
        throw PreconditionUnmet("minimal time-3 set needs 4 <= r <= (q+7)/3");
    std::optional<Rng> rng;
    if (shuffle_seed) rng.emplace(*shuffle_seed);
    if (r == 4) return t3_staircase_r4(plane, rng ? &*rng : nullptr);
    return t3_broom(plane, r, rng ? &*rng : nullptr);
}

ConstructionResult slow_percolating_set(const IncidencePlane& plane, int r,
                                        std::optional<uint64_t> shuffle_seed) {
    const int q = plane.order();
    const int n = plane.num_points();
    if (r < 5 || binom_ull(r, 2) > (unsigned long long)q)
        throw PreconditionUnmet("slow set needs r >= 5 and C(r,2) <= q");
    std::optional<Rng> rng_store;
    Rng* rng = nullptr;
    if (shuffle_seed) {
        rng_store.emplace(*shuffle_seed);
        rng = &*rng_store;
    }

    ConstructionResult res;
    res.name = "slow_percolating_set";
    res.q = q;
    res.r = r;

    for (int salt = 0; salt <= q; ++salt) {
        // anchors: P carries the singleton part (on l_r), Q1 and Q2 the pair
        // part (on l_{r-1}); q1 and q2 join P to them and must stay one
        // point short of the threshold until the very last round
        int P = rng ? rng->below(n) : 0;
        int Q1 = (P + 1 + salt) % n;
        if (Q1 == P) Q1 = (Q1 + 1) % n;
        int q1 = plane.line_through(P, Q1);
        int Q2 = 0;
        while (Q2 == P || plane.points_on(q1).test(Q2)) ++Q2;
        int q2 = plane.line_through(P, Q2);
        int l_last = -1; // l_r, through P
        for (int cand : plane.lines_through(P).to_vector())
            if (cand != q1 && cand != q2) { l_last = cand; break; }
        int l_pair = plane.line_through(Q1, Q2); // l_{r-1}
        if (l_last < 0 || l_pair == l_last) continue;

        // l_1 is derived from its forced crossings: X = l_1 ^ l_2 on q1,
        // Y = l_1 ^ l_3 on q2
        int X = -1, Y = -1;
        for (int cand : plane.points_on(q1).to_vector()) {
            if (cand == P || cand == Q1 || plane.points_on(l_last).test(cand) ||
                plane.points_on(l_pair).test(cand))
                continue;
            X = cand;
            break;
        }
        if (X < 0) continue;
        for (int cand : plane.points_on(q2).to_vector()) {
            if (cand == P || cand == Q2 || cand == X || plane.points_on(l_last).test(cand) ||
                plane.points_on(l_pair).test(cand))
                continue;
            Y = cand;
            break;
        }
        if (Y < 0) continue;
        int l1 = plane.line_through(X, Y);

        std::vector<int> lines{l1}; // lines[i] = l_{i+1}
        auto gp_ok = [&](int cand) {
            if (std::find(lines.begin(), lines.end(), cand) != lines.end()) return false;
            if (cand == q1 || cand == q2 || cand == l_pair || cand == l_last) return false;
            if (plane.points_on(cand).test(P) || plane.points_on(cand).test(Q1) ||
                plane.points_on(cand).test(Q2))
                return false;
            std::vector<int> all = lines;
            all.push_back(l_pair);
            all.push_back(l_last);
            all.push_back(cand);
            return no_three_concurrent(plane, all);
        };
        bool ok = true;
        for (int anchor : {X, Y}) { // l_2 through X, l_3 through Y
            int found = -1;
            for (int cand : maybe_shuffled(plane.lines_through(anchor).to_vector(), rng))
                if (cand != l1 && gp_ok(cand)) { found = cand; break; }
            if (found < 0) { ok = false; break; }
            lines.push_back(found);
        }
        if (!ok) continue;
        while (int(lines.size()) < r - 2) {
            int found = -1;
            for (int cand = 0; cand < plane.num_lines(); ++cand)
                if (gp_ok(cand)) { found = cand; break; }
            if (found < 0) break;
            lines.push_back(found);
        }
        if (int(lines.size()) != r - 2) continue;
        lines.push_back(l_pair);
        lines.push_back(l_last);
        if (!no_three_concurrent(plane, lines)) continue;

        // parts stay off all pairwise crossings and off q1 u q2
        IndexSet excl(n);
        for (size_t i = 0; i < lines.size(); ++i)
            for (size_t j = i + 1; j < lines.size(); ++j) excl.set(plane.meet(lines[i], lines[j]));
        excl |= plane.points_on(q1);
        excl |= plane.points_on(q2);

        PointSet a(n);
        a.set(P);
        a.set(Q1);
        a.set(Q2);
        ok = true;
        for (int i = 1; i <= r - 2 && ok; ++i) {
            auto part = pick_on_line(plane, lines[size_t(i) - 1], excl, r + 1 - i, rng, salt);
            if (int(part.size()) != r + 1 - i) { ok = false; break; }
            for (int p : part) a.set(p);
        }
        if (!ok || a.count() != int(binom_ull(r + 1, 2))) continue;

        auto tr = closure(plane, a, r);
        if (!tr.percolates || tr.time != r + 1) continue;
        bool one_per_round = true;
        for (int j = 0; j < r - 1 && one_per_round; ++j)
            if (int(tr.rounds[size_t(j)].lines.size()) != 1 ||
                tr.rounds[size_t(j)].lines[0] != lines[size_t(j)])
                one_per_round = false;
        if (!one_per_round) continue;

        res.points = a;
        res.lines = lines;
        require(res, "size_is_r_plus_1_choose_2", true);
        require(res, "percolates", true);
        require(res, "time_is_r_plus_1", true);
        require(res, "one_line_per_early_round", true);
        return res;
    }
    throw ConstructionFailed("slow_percolating_set: no admissible choice for q=" +
                             std::to_string(q) + " r=" + std::to_string(r));
}

ConstructionResult dual_hyperoval_union(const IncidencePlane& plane, std::optional<int> custom_r) {
    const int q = plane.order();
    if (q % 2 != 0) throw OddOrder("dual hyperoval requires even q");
    const Field& F = plane.field();

    ConstructionResult res;
    res.name = "dual_hyperoval_union";
    res.q = q;
    res.r = custom_r.value_or(q / 2 + 2);

    for (int t = 0; t < q; ++t) res.lines.push_back(plane.line_index(t, F.mul(t, t), 1));
    res.lines.push_back(plane.line_index(0, 1, 0));
    res.lines.push_back(plane.line_index(1, 0, 0));
    require(res, "q_plus_2_lines", int(res.lines.size()) == q + 2);
    require(res, "no_three_concurrent", no_three_concurrent(plane, res.lines));

    res.points = PointSet(plane.num_points());
    for (int l : res.lines) res.points |= plane.points_on(l);
    require(res, "size_is_half_q_plus_2_q_plus_1", res.points.count() == (q + 2) * (q + 1) / 2);

    LineSet chosen = LineSet::from_indices(plane.num_lines(), res.lines);
    bool meets_ok = true;
    for (int l = 0; l < plane.num_lines(); ++l) {
        if (chosen.test(l)) continue;
        if (plane.points_on(l).intersect_count(res.points) != q / 2 + 1) {
            meets_ok = false;
            break;
        }
    }
    require(res, "outside_lines_meet_half_q_plus_1", meets_ok);

    bool nonperc = !percolates(plane, res.points, res.r);
    res.checks.push_back({"non_percolating", nonperc});
    if (!custom_r && !nonperc)
        throw ConstructionFailed("dual_hyperoval_union: percolates at default r");
    return res;
}

ConstructionResult hyperoval_complement(const IncidencePlane& plane, std::optional<int> custom_r) {
    const int q = plane.order();
    ConstructionResult hyp = hyperoval(plane); // OddOrder / NoCoordinates propagate

    ConstructionResult res;
    res.name = "hyperoval_complement";
    res.q = q;
    res.r = custom_r.value_or(q);
    res.points = PointSet::full(plane.num_points());
    res.points -= hyp.points;
    require(res, "size_is_q_plus_1_times_q_minus_1", res.points.count() == (q + 1) * (q - 1));

    // hyperoval secants leave exactly two uninfected points; the external
    // lines lie whole inside the complement
    bool two_out = true;
    for (int l = 0; l < plane.num_lines(); ++l) {
        int missing = q + 1 - plane.points_on(l).intersect_count(res.points);
        if (missing != 2 && missing != 0) {
            two_out = false;
            break;
        }
    }
    require(res, "every_line_misses_0_or_2", two_out);

    bool nonperc = !percolates(plane, res.points, res.r);
    res.checks.push_back({"non_percolating", nonperc});
    if (!custom_r && !nonperc)
        throw ConstructionFailed("hyperoval_complement: percolates at default r");
    return res;
}

} // namespace constructions

} // namespace lineperc
