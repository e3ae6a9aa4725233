#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lineperc/constructions.hpp"
#include "lineperc/util.hpp"

using namespace lineperc;
using namespace lineperc::constructions;

namespace {

IncidencePlane pg(int q) { return IncidencePlane::build_pg2(Field::make(q)); }

// independent arc oracle: enumerate all point triples
bool oracle_is_arc(const IncidencePlane& pl, const PointSet& a) {
    auto pts = a.to_vector();
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            int l = pl.line_through(pts[i], pts[j]);
            for (size_t k = j + 1; k < pts.size(); ++k)
                if (pl.points_on(l).test(pts[k])) return false;
        }
    return true;
}

} // namespace

TEST_CASE("r_broom sizes and behavior") {
    IncidencePlane pl = pg(5);
    for (int m = 1; m <= 6; ++m) CHECK(r_broom(pl, 0, m).count() == 5 * m + 1);
    CHECK(percolates(pl, r_broom(pl, 0, 3), 3));
    CHECK(!percolates(pl, r_broom(pl, 0, 2), 3)); // (r-1)-broom, size q(r-1)+1
    CHECK(r_broom(pl, 0, 2).count() == 5 * (3 - 1) + 1);
    CHECK(r_broom(pl, 0, 6) == PointSet::full(pl.num_points()));
    CHECK_THROWS_AS(r_broom(pl, 0, 0), BadArity);
    CHECK_THROWS_AS(r_broom(pl, 0, 7), BadArity);
}

TEST_CASE("conic oval is an arc") {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        IncidencePlane pl = pg(q);
        auto res = conic_oval(pl);
        CHECK(res.points.count() == q + 1);
        CHECK(res.all_pass());
        CHECK(oracle_is_arc(pl, res.points));
    }
}

TEST_CASE("hyperoval for even q") {
    for (int q : {2, 4, 8}) {
        CAPTURE(q);
        IncidencePlane pl = pg(q);
        auto res = hyperoval(pl);
        CHECK(res.points.count() == q + 2);
        CHECK(oracle_is_arc(pl, res.points));
        for (int l = 0; l < pl.num_lines(); ++l) {
            int m = pl.points_on(l).intersect_count(res.points);
            CHECK((m == 0 || m == 2));
        }
    }
    CHECK_THROWS_AS(hyperoval(pg(5)), OddOrder);
}

TEST_CASE("coordinate constructions refuse planes without coordinates") {
    IncidencePlane imported = plane_from_json(plane_to_json(pg(4)));
    CHECK_THROWS_AS(conic_oval(imported), NoCoordinates);
    CHECK_THROWS_AS(general_position_lines(imported, 3), NoCoordinates);
}

TEST_CASE("general position lines") {
    IncidencePlane pl = pg(5);
    auto lines = general_position_lines(pl, 6);
    CHECK(lines.size() == 6);
    // oracle: every triple of lines has three distinct pairwise meets
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            for (size_t k = j + 1; k < lines.size(); ++k) {
                int a = pl.meet(lines[i], lines[j]);
                int b = pl.meet(lines[i], lines[k]);
                int c = pl.meet(lines[j], lines[k]);
                CHECK(a != b);
                CHECK(a != c);
                CHECK(b != c);
            }
    CHECK(general_position_lines(pl, 2).size() == 2);
    CHECK_THROWS_AS(general_position_lines(pg(4), 6), TooMany);
}

TEST_CASE("a k-arc in the dual is k lines in general position in the primal") {
    IncidencePlane pl = pg(5);
    IncidencePlane d = pl.dual();
    auto lines = general_position_lines(pl, 6);
    // the same indices, read as points of the dual plane, form an arc
    PointSet dual_points = PointSet::from_indices(d.num_points(), lines);
    CHECK(oracle_is_arc(d, dual_points));
}

TEST_CASE("minimum percolating set from lines in general position") {
    struct Case { int q, r; };
    for (auto [q, r] : {Case{5, 3}, Case{11, 4}, Case{13, 5}, Case{9, 3}}) {
        CAPTURE(q);
        CAPTURE(r);
        IncidencePlane pl = pg(q);
        auto res = min_percolating_from_general_position(pl, r);
        CHECK(res.points.count() == int(binom_ull(r + 1, 2)));
        CHECK(res.all_pass());
        CHECK(percolates(pl, res.points, r));
    }
    CHECK_THROWS_AS(min_percolating_from_general_position(pg(5), 5), PreconditionUnmet);
}

TEST_CASE("randomized variant still verifies") {
    IncidencePlane pl = pg(11);
    auto res = min_percolating_from_general_position(pl, 4, 12345);
    CHECK(res.all_pass());
    auto res2 = min_percolating_from_general_position(pl, 4, 12345);
    CHECK(res.points == res2.points); // same seed, same picks
}

TEST_CASE("minimal time-3 sets") {
    struct Case { int q, r; };
    for (auto [q, r] : {Case{11, 4}, Case{11, 5}, Case{11, 6}, Case{13, 4}}) {
        CAPTURE(q);
        CAPTURE(r);
        IncidencePlane pl = pg(q);
        auto res = minimal_t3_set(pl, r);
        CHECK(res.points.count() == 3 + 2 * (r - 1) + (r - 3) * (r - 3));
        CHECK(res.all_pass());
        CHECK(percolation_time(pl, res.points, r) == 3);
        CHECK(is_minimal_percolating(pl, res.points, r));
    }
    CHECK_THROWS_AS(minimal_t3_set(pg(11), 7), PreconditionUnmet); // (q+7)/3 = 6
    CHECK_THROWS_AS(minimal_t3_set(pg(11), 3), PreconditionUnmet);
}

TEST_CASE("slow percolating sets take exactly r+1 rounds") {
    struct Case { int q, r; };
    for (auto [q, r] : {Case{11, 5}, Case{13, 5}}) {
        CAPTURE(q);
        CAPTURE(r);
        IncidencePlane pl = pg(q);
        auto res = slow_percolating_set(pl, r);
        CHECK(res.points.count() == int(binom_ull(r + 1, 2)));
        CHECK(res.all_pass());
        auto tr = closure(pl, res.points, r);
        CHECK(tr.percolates);
        CHECK(tr.time == r + 1);
        // exactly one new line in each of the first r-1 rounds
        for (int j = 0; j < r - 1; ++j) CHECK(tr.rounds[size_t(j)].lines.size() == 1);
    }
    CHECK_THROWS_AS(slow_percolating_set(pg(7), 5), PreconditionUnmet); // C(5,2)=10 > 7
    CHECK_THROWS_AS(slow_percolating_set(pg(11), 4), PreconditionUnmet);
}

TEST_CASE("dual hyperoval union is maximal-style non-percolating") {
    IncidencePlane p4 = pg(4);
    auto res = dual_hyperoval_union(p4);
    CHECK(res.points.count() == 15); // (q+2)(q+1)/2
    CHECK(res.r == 4);               // q/2 + 2
    CHECK(res.all_pass());
    CHECK(!percolates(p4, res.points, 4));
    // size matches the exact bound (q+1)(r-1) here
    CHECK(res.points.count() == (4 + 1) * (4 - 1));

    CHECK_THROWS_AS(dual_hyperoval_union(pg(5)), OddOrder);
}

TEST_CASE("hyperoval complement is non-percolating at r=q") {
    IncidencePlane p4 = pg(4);
    auto res = hyperoval_complement(p4);
    CHECK(res.points.count() == 15); // (q+1)(q-1)
    CHECK(res.all_pass());
    CHECK(!percolates(p4, res.points, 4));
}

TEST_CASE("q=8 hyperoval constructions") {
    IncidencePlane p8 = pg(8);
    auto dual = dual_hyperoval_union(p8);
    CHECK(dual.points.count() == 45);
    CHECK(dual.r == 6);
    CHECK(dual.all_pass());
    auto comp = hyperoval_complement(p8);
    CHECK(comp.points.count() == 63);
    CHECK(comp.all_pass());
}

TEST_CASE("construction JSON shape") {
    auto res = conic_oval(pg(4));
    std::string js = res.to_json();
    CHECK(js.find("\"name\"") != std::string::npos);
    CHECK(js.find("\"point_indices\"") != std::string::npos);
    CHECK(js.find("\"checks\"") != std::string::npos);
}

TEST_CASE("the general-position line prefix is a percolating sequence") {
    IncidencePlane pl = pg(11);
    int r = 4;
    auto res = min_percolating_from_general_position(pl, r);
    // order: the 2r general-position lines first, then everything else
    std::vector<int> order = res.lines;
    IndexSet used = IndexSet::from_indices(pl.num_lines(), res.lines);
    for (int l = 0; l < pl.num_lines(); ++l)
        if (!used.test(l)) order.push_back(l);
    CHECK(one_by_one_verify(pl, res.points, r, order));
}
