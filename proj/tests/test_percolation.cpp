#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "lineperc/percolation.hpp"
#include "lineperc/util.hpp"

using namespace lineperc;

namespace {

IncidencePlane pg(int q) { return IncidencePlane::build_pg2(Field::make(q)); }

// m lines through point `center`, lowest line indices first
PointSet broom(const IncidencePlane& pl, int center, int m) {
    PointSet a(pl.num_points());
    auto lines = pl.lines_through_list(center);
    for (int i = 0; i < m; ++i) a |= pl.points_on(lines[size_t(i)]);
    return a;
}

PointSet random_subset(const IncidencePlane& pl, Rng& rng, double density) {
    PointSet a(pl.num_points());
    for (int p = 0; p < pl.num_points(); ++p)
        if (rng.unit() < density) a.set(p);
    return a;
}

} // namespace

TEST_CASE("one full line is a fixpoint at r=3 on the Fano plane") {
    IncidencePlane fano = pg(2);
    PointSet a = fano.points_on(0);
    InfectionState st(fano, a, 3);
    // line 0 itself fires (3 infected points) but adds nothing
    CHECK(!st.step());
    CHECK(st.infected_points() == a);
    auto tr = closure(fano, a, 3);
    CHECK(!tr.percolates);
    CHECK(tr.closure_round() == 0);
    CHECK(tr.closure_points == a);
}

TEST_CASE("a 3-broom percolates in one round at r=3") {
    for (int q : {3, 5}) {
        CAPTURE(q);
        IncidencePlane pl = pg(q);
        PointSet a = broom(pl, 0, 3);
        CHECK(a.count() == 3 * q + 1);
        auto tr = closure(pl, a, 3);
        CHECK(tr.percolates);
        CHECK(tr.time == 1);
    }
}

TEST_CASE("r = q+2 spreads nothing") {
    IncidencePlane pl = pg(3);
    PointSet a = broom(pl, 0, 3);
    auto tr = closure(pl, a, pl.order() + 2);
    CHECK(!tr.percolates);
    CHECK(tr.closure_points == a);
}

TEST_CASE("closure of the full plane percolates in zero rounds") {
    IncidencePlane pl = pg(3);
    auto tr = closure(pl, PointSet::full(pl.num_points()), 3);
    CHECK(tr.percolates);
    CHECK(tr.time == 0);
}

TEST_CASE("two full lines never percolate at r=3") {
    IncidencePlane pl = pg(3);
    PointSet a = pl.points_on(0);
    a |= pl.points_on(1);
    CHECK(covered_by_k_lines(pl, a, 2));
    CHECK(!percolates(pl, a, 3));
}

TEST_CASE("threshold 1: a single point floods the plane") {
    IncidencePlane pl = pg(5);
    PointSet a(pl.num_points());
    a.set(7);
    CHECK(percolates(pl, a, 1));
    CHECK(!percolates(pl, PointSet(pl.num_points()), 1)); // empty set
}

TEST_CASE("three non-collinear points percolate at r=2 in exactly two rounds") {
    for (int q : {3, 5, 7}) {
        CAPTURE(q);
        IncidencePlane pl = pg(q);
        // find a non-collinear triple
        int p1 = 0, p2 = 1;
        int l = pl.line_through(p1, p2);
        int p3 = 0;
        while (pl.points_on(l).test(p3)) ++p3;
        PointSet a(pl.num_points());
        a.set(p1);
        a.set(p2);
        a.set(p3);
        CHECK(percolation_time(pl, a, 2) == 2);
        CHECK(is_minimal_percolating(pl, a, 2));
    }
}

TEST_CASE("four points in general position are not minimal at r=2") {
    IncidencePlane pl = pg(5);
    // quadrilateral: no three collinear
    std::vector<int> pts;
    for (int p = 0; p < pl.num_points() && pts.size() < 4; ++p) {
        bool ok = true;
        for (size_t i = 0; i < pts.size() && ok; ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                if (pl.points_on(pl.line_through(pts[i], pts[j])).test(p)) { ok = false; break; }
        if (ok) pts.push_back(p);
    }
    REQUIRE(pts.size() == 4);
    PointSet a = PointSet::from_indices(pl.num_points(), pts);
    CHECK(percolates(pl, a, 2));
    CHECK(!is_minimal_percolating(pl, a, 2));
}

TEST_CASE("an r-broom percolates but is not minimal for r=3, q >= 3") {
    for (int q : {3, 5}) {
        CAPTURE(q);
        IncidencePlane pl = pg(q);
        PointSet a = broom(pl, 0, 3);
        CHECK(contains_r_broom(pl, a, 3));
        CHECK(percolates(pl, a, 3));
        CHECK(!is_minimal_percolating(pl, a, 3));
    }
}

TEST_CASE("one-by-one verification") {
    IncidencePlane pl = pg(3);
    const int n = pl.num_lines();
    PointSet a(pl.num_points());
    a.set(4);

    // lines through the seed point first, then the rest: valid at r=1
    std::vector<int> order;
    for (int l : pl.lines_through(4).to_vector()) order.push_back(l);
    for (int l = 0; l < n; ++l)
        if (!pl.lines_through(4).test(l)) order.push_back(l);
    CHECK(one_by_one_verify(pl, a, 1, order));

    // a sequence starting with a line missing the seed fails immediately
    std::vector<int> bad = order;
    std::swap(bad.front(), bad.back());
    CHECK(!one_by_one_verify(pl, a, 1, bad));

    std::vector<int> not_perm(size_t(n), 0);
    CHECK_THROWS_AS(one_by_one_verify(pl, a, 1, not_perm), NotAPermutation);
    std::vector<int> short_seq(3, 0);
    CHECK_THROWS_AS(one_by_one_verify(pl, a, 1, short_seq), NotAPermutation);
}

TEST_CASE("agreement: a greedy one-by-one sequence exists iff the set percolates") {
    Rng rng(20240817);
    for (int q : {3, 5}) {
        IncidencePlane pl = pg(q);
        for (int trial = 0; trial < 60; ++trial) {
            int r = 1 + rng.below(q + 1);
            PointSet a = random_subset(pl, rng, rng.unit());
            bool perc = percolates(pl, a, r);
            auto seq = greedy_percolating_sequence(pl, a, r);
            CAPTURE(q);
            CAPTURE(r);
            CHECK(perc == seq.has_value());
            if (seq) CHECK(one_by_one_verify(pl, a, r, *seq));
        }
    }
}

TEST_CASE("covered_by_k_lines exact cases") {
    IncidencePlane pl = pg(3);
    PointSet two_lines = pl.points_on(0);
    two_lines |= pl.points_on(5);
    CHECK(!covered_by_k_lines(pl, two_lines, 1));
    CHECK(covered_by_k_lines(pl, two_lines, 2));

    // three non-collinear points need two lines
    PointSet tri = PointSet::from_indices(pl.num_points(), {0, 1, 4});
    int l01 = pl.line_through(0, 1);
    if (!pl.points_on(l01).test(4)) {
        CHECK(!covered_by_k_lines(pl, tri, 1));
        CHECK(covered_by_k_lines(pl, tri, 2));
    }

    // greedy fallback (k > 4) still finds easy covers
    PointSet five = pl.points_on(0);
    for (int l : {1, 2, 3, 4}) five |= pl.points_on(l);
    CHECK(covered_by_k_lines(pl, five, 5));
}

TEST_CASE("broom rule: sets containing an r-broom percolate") {
    Rng rng(99);
    for (int q : {3, 5}) {
        IncidencePlane pl = pg(q);
        for (int trial = 0; trial < 50; ++trial) {
            int r = 1 + rng.below(q + 1);
            int center = rng.below(pl.num_points());
            PointSet a = broom(pl, center, r);
            // sprinkle extra points; percolation is monotone
            for (int extra = rng.below(5); extra > 0; --extra) a.set(rng.below(pl.num_points()));
            CHECK(contains_r_broom(pl, a, r));
            CHECK(percolates(pl, a, r));
        }
    }
}

TEST_CASE("r infected lines finish the plane next round when C(r,2) <= q") {
    Rng rng(7);
    for (int q : {5, 7}) {
        IncidencePlane pl = pg(q);
        int checked = 0;
        for (int trial = 0; trial < 400 && checked < 50; ++trial) {
            int r = 2 + rng.below(3); // C(r,2) in {1,3,6} <= q
            if (int(binom_ull(r, 2)) > q) continue;
            PointSet a = random_subset(pl, rng, 0.25 + 0.15 * rng.unit());
            InfectionState st(pl, a, r);
            while (st.infected_line_count() < r && st.step()) {}
            if (st.infected_line_count() < r) continue;
            CAPTURE(q);
            CAPTURE(r);
            CHECK(r_lines_complete_next(pl, st, r));
            ++checked;
        }
        CHECK(checked >= 20);
    }
}

TEST_CASE("closure is monotone and idempotent") {
    Rng rng(123);
    for (int q : {3, 5, 7}) {
        IncidencePlane pl = pg(q);
        for (int trial = 0; trial < 60; ++trial) {
            int r = 1 + rng.below(q + 1);
            PointSet a = random_subset(pl, rng, rng.unit() * 0.6);
            PointSet b = a;
            for (int extra = 1 + rng.below(6); extra > 0; --extra) b.set(rng.below(pl.num_points()));
            PointSet ca = closure_points(pl, a, r);
            PointSet cb = closure_points(pl, b, r);
            CHECK(ca.is_subset_of(cb));
            CHECK(closure_points(pl, ca, r) == ca);
        }
    }
}

TEST_CASE("round progress bounds the percolation time") {
    Rng rng(5150);
    IncidencePlane pl = pg(5);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + rng.below(6);
        PointSet a = random_subset(pl, rng, 0.4);
        auto tr = closure(pl, a, r);
        CHECK(tr.closure_round() <= pl.num_lines());
        for (const auto& round : tr.rounds) {
            CHECK(!round.lines.empty());
            CHECK(!round.points.empty());
        }
        // every point of every infected line ended up infected
        for (int l = tr.closure_lines.first(); l != IndexSet::npos; l = tr.closure_lines.next(l))
            CHECK(pl.points_on(l).is_subset_of(tr.closure_points));
    }
}
