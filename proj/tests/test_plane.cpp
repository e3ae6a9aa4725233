#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lineperc/plane.hpp"

using namespace lineperc;

namespace {

IncidencePlane pg(int q) { return IncidencePlane::build_pg2(Field::make(q)); }

std::vector<std::vector<int>> line_lists(const IncidencePlane& pl) {
    std::vector<std::vector<int>> v;
    for (int l = 0; l < pl.num_lines(); ++l) v.push_back(pl.points_on(l).to_vector());
    return v;
}

// the classic 7-point plane, written down by hand
const std::vector<std::vector<int>> kFanoLines = {
    {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5},
};

} // namespace

TEST_CASE("build_pg2 basic counts") {
    IncidencePlane fano = pg(2);
    CHECK(fano.num_points() == 7);
    CHECK(fano.num_lines() == 7);
    for (int l = 0; l < 7; ++l) CHECK(fano.points_on(l).count() == 3);

    IncidencePlane p4 = pg(4);
    CHECK(p4.num_points() == 21);
    for (int l = 0; l < 21; ++l) CHECK(p4.points_on(l).count() == 5);
}

TEST_CASE("incidence by coordinates in PG(2,5)") {
    IncidencePlane p5 = pg(5);
    CHECK(p5.num_points() == 31);
    int pt = p5.point_index(1, 2, 1);
    int ln = p5.line_index(3, 1, 0);
    CHECK(p5.points_on(ln).test(pt)); // 3*1 + 1*2 + 0*1 = 5 = 0 mod 5
}

TEST_CASE("axioms pass for built planes") {
    for (int q : {2, 3, 4, 5}) {
        CAPTURE(q);
        auto rep = pg(q).validate();
        CHECK(rep.ok());
    }
}

TEST_CASE("flipping one incidence breaks unique joins") {
    IncidencePlane p4 = pg(4);
    auto lines = line_lists(p4);
    // swap one point of line 0 for a point not on it
    int victim = lines[0][0];
    int replacement = 0;
    while (p4.points_on(0).test(replacement)) ++replacement;
    lines[0][0] = replacement;
    std::sort(lines[0].begin(), lines[0].end());
    auto rep = validate_axioms(4, p4.num_points(), lines);
    CHECK(!rep.ok());
    CHECK((!rep.unique_join_ok || !rep.point_degrees_ok));
    (void)victim;
}

TEST_CASE("a 4-point line in a q=2 candidate fails regularity") {
    auto lines = kFanoLines;
    lines[0].push_back(3);
    std::sort(lines[0].begin(), lines[0].end());
    auto rep = validate_axioms(2, 7, lines);
    CHECK(!rep.line_sizes_ok);
    CHECK(rep.bad_line == 0);
}

TEST_CASE("incidence queries") {
    IncidencePlane fano = pg(2);
    for (int p1 = 0; p1 < 7; ++p1)
        for (int p2 = p1 + 1; p2 < 7; ++p2) {
            int l = fano.line_through(p1, p2);
            CHECK(l == fano.line_through(p2, p1));
            CHECK(fano.points_on(l).test(p1));
            CHECK(fano.points_on(l).test(p2));
        }
    IncidencePlane p3 = pg(3);
    for (int l1 = 0; l1 < p3.num_lines(); ++l1)
        for (int l2 = l1 + 1; l2 < p3.num_lines(); ++l2) {
            int pt = p3.meet(l1, l2);
            CHECK(p3.points_on(l1).test(pt));
            CHECK(p3.points_on(l2).test(pt));
            CHECK(p3.points_on(l1).intersect_count(p3.points_on(l2)) == 1);
        }
    CHECK_THROWS_AS(fano.line_through(3, 3), IdenticalArguments);
    CHECK_THROWS_AS(fano.meet(5, 5), IdenticalArguments);
}

TEST_CASE("double counting and dual") {
    for (int q : {2, 3, 4}) {
        CAPTURE(q);
        IncidencePlane pl = pg(q);
        long sum_lines = 0, sum_points = 0;
        for (int l = 0; l < pl.num_lines(); ++l) sum_lines += pl.points_on(l).count();
        for (int p = 0; p < pl.num_points(); ++p) sum_points += pl.lines_through(p).count();
        CHECK(sum_lines == long(pl.num_points()) * (q + 1));
        CHECK(sum_points == sum_lines);

        IncidencePlane d = pl.dual();
        CHECK(d.validate().ok());
        IncidencePlane dd = d.dual();
        for (int l = 0; l < pl.num_lines(); ++l) CHECK(dd.points_on(l) == pl.points_on(l));
    }
}

TEST_CASE("every point index appears in exactly q+1 line bitsets") {
    IncidencePlane p5 = pg(5);
    std::vector<int> appearances(size_t(p5.num_points()), 0);
    for (int l = 0; l < p5.num_lines(); ++l)
        for (int p : p5.points_on(l).to_vector()) ++appearances[size_t(p)];
    for (int p = 0; p < p5.num_points(); ++p) CHECK(appearances[size_t(p)] == 6);
}

TEST_CASE("json round trip") {
    IncidencePlane p3 = pg(3);
    std::string tmp = "roundtrip_plane.json";
    save_plane(p3, tmp);
    IncidencePlane back = load_plane(tmp);
    CHECK(back.order() == 3);
    CHECK(!back.has_coordinates()); // imported planes carry no coordinates
    for (int l = 0; l < p3.num_lines(); ++l) CHECK(back.points_on(l) == p3.points_on(l));
    std::remove(tmp.c_str());
}

TEST_CASE("loading rejects wrong counts and malformed files") {
    IncidencePlane p3 = pg(3);
    auto lines = line_lists(p3);
    lines.resize(12); // 12 lines for q=3
    std::string txt = "{\"q\":3,\"points\":13,\"lines\":[";
    for (size_t i = 0; i < lines.size(); ++i) {
        txt += i ? ",[" : "[";
        for (size_t j = 0; j < lines[i].size(); ++j)
            txt += (j ? "," : "") + std::to_string(lines[i][j]);
        txt += "]";
    }
    txt += "]}";
    CHECK_THROWS_AS(plane_from_json(txt), AxiomViolation);
    CHECK_THROWS_AS(plane_from_json("{not json"), ParseError);
    CHECK_THROWS_AS(plane_from_json("{\"q\":3}"), ParseError);
}

TEST_CASE("hand-written Fano plane file loads and matches parameters") {
    std::string txt = "{\"q\":2,\"points\":7,\"lines\":[";
    for (size_t i = 0; i < kFanoLines.size(); ++i) {
        txt += i ? ",[" : "[";
        for (size_t j = 0; j < kFanoLines[i].size(); ++j)
            txt += (j ? "," : "") + std::to_string(kFanoLines[i][j]);
        txt += "]";
    }
    txt += "]}";
    IncidencePlane imported = plane_from_json(txt);
    CHECK(imported.order() == 2);
    CHECK(imported.validate().ok());
    IncidencePlane native = pg(2);
    CHECK(imported.num_points() == native.num_points());
    CHECK(imported.num_lines() == native.num_lines());
    CHECK_THROWS_AS(imported.field(), NoCoordinates);
}

TEST_CASE("coordinate round trip") {
    for (int q : {2, 3, 4, 5, 9}) {
        CAPTURE(q);
        IncidencePlane pl = pg(q);
        for (int p = 0; p < pl.num_points(); ++p) {
            auto c = pl.point_coords(p);
            CHECK(pl.point_index(c[0], c[1], c[2]) == p);
        }
    }
}
