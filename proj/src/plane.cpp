#include "lineperc/plane.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lineperc {

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << "q=" << q;
    if (ok()) {
        os << " all axioms pass";
        return os.str();
    }
    if (!point_count_ok) os << "; point count != q^2+q+1";
    if (!line_count_ok) os << "; line count != q^2+q+1";
    if (!line_sizes_ok) os << "; line " << bad_line << " does not have q+1 points";
    if (!point_degrees_ok) os << "; point " << bad_point << " not on q+1 lines";
    if (!unique_join_ok)
        os << "; points " << join_witness[0] << "," << join_witness[1]
           << " not on exactly one common line";
    if (!unique_meet_ok)
        os << "; lines " << meet_witness[0] << "," << meet_witness[1]
           << " do not meet in exactly one point";
    return os.str();
}

ValidationReport validate_axioms(int q, int declared_points,
                                 const std::vector<std::vector<int>>& lines) {
    ValidationReport rep;
    rep.q = q;
    if (q < 2) return rep;
    const int n = q * q + q + 1;
    rep.point_count_ok = declared_points == n;
    rep.line_count_ok = int(lines.size()) == n;
    if (!rep.point_count_ok || !rep.line_count_ok) return rep;

    rep.line_sizes_ok = true;
    std::vector<PointSet> line_pts;
    line_pts.reserve(size_t(n));
    for (int l = 0; l < n; ++l) {
        PointSet s(n);
        bool bad = int(lines[l].size()) != q + 1;
        for (int p : lines[l]) {
            if (p < 0 || p >= n || s.test(p)) { bad = true; break; }
            s.set(p);
        }
        if (bad && rep.line_sizes_ok) {
            rep.line_sizes_ok = false;
            rep.bad_line = l;
        }
        line_pts.push_back(std::move(s));
    }
    if (!rep.line_sizes_ok) return rep;

    auto pt_lines = std::vector<LineSet>(size_t(n), LineSet(n));
    for (int l = 0; l < n; ++l)
        for (int p : lines[l]) pt_lines[size_t(p)].set(l);

    rep.point_degrees_ok = true;
    for (int p = 0; p < n; ++p)
        if (pt_lines[size_t(p)].count() != q + 1) {
            rep.point_degrees_ok = false;
            rep.bad_point = p;
            break;
        }

    rep.unique_join_ok = true;
    for (int p1 = 0; p1 < n && rep.unique_join_ok; ++p1)
        for (int p2 = p1 + 1; p2 < n; ++p2)
            if (pt_lines[size_t(p1)].intersect_count(pt_lines[size_t(p2)]) != 1) {
                rep.unique_join_ok = false;
                rep.join_witness = {p1, p2};
                break;
            }

    rep.unique_meet_ok = true;
    for (int l1 = 0; l1 < n && rep.unique_meet_ok; ++l1)
        for (int l2 = l1 + 1; l2 < n; ++l2)
            if (line_pts[size_t(l1)].intersect_count(line_pts[size_t(l2)]) != 1) {
                rep.unique_meet_ok = false;
                rep.meet_witness = {l1, l2};
                break;
            }
    return rep;
}

void IncidencePlane::finish(std::vector<std::vector<int>> lines) {
    n_ = q_ * q_ + q_ + 1;
    line_pts_.assign(size_t(n_), PointSet(n_));
    pt_lines_.assign(size_t(n_), LineSet(n_));
    line_pts_flat_.assign(size_t(n_) * (q_ + 1), 0);
    for (int l = 0; l < n_; ++l) {
        auto& pts = lines[size_t(l)];
        std::sort(pts.begin(), pts.end());
        for (int i = 0; i <= q_; ++i) {
            int p = pts[size_t(i)];
            line_pts_flat_[size_t(l) * (q_ + 1) + i] = p;
            line_pts_[size_t(l)].set(p);
            pt_lines_[size_t(p)].set(l);
        }
    }
    pt_lines_flat_.reserve(size_t(n_) * (q_ + 1));
    for (int p = 0; p < n_; ++p)
        for (int l : pt_lines_[size_t(p)].to_vector()) pt_lines_flat_.push_back(l);
}

int IncidencePlane::point_index(int x, int y, int z) const {
    const Field& F = field();
    if (z != 0) {
        int s = F.inv(z);
        return 1 + q_ + F.mul(y, s) * q_ + F.mul(x, s);
    }
    if (y != 0) return 1 + F.mul(x, F.inv(y));
    if (x != 0) return 0;
    throw BadRange("zero homogeneous triple");
}

int IncidencePlane::line_index(int a, int b, int c) const { return point_index(a, b, c); }

std::array<int, 3> IncidencePlane::point_coords(int point) const {
    field(); // throws if absent
    if (point == 0) return {1, 0, 0};
    if (point <= q_) return {point - 1, 1, 0};
    int t = point - 1 - q_;
    return {t % q_, t / q_, 1};
}

std::array<int, 3> IncidencePlane::line_coords(int line) const { return point_coords(line); }

const Field& IncidencePlane::field() const {
    if (!field_) throw NoCoordinates("plane has no coordinates (imported or dualized import)");
    return *field_;
}

IncidencePlane IncidencePlane::build_pg2(const Field& field) {
    IncidencePlane pl;
    pl.q_ = field.q();
    pl.field_ = std::make_shared<Field>(field);
    const Field& F = *pl.field_;
    const int q = pl.q_;
    const int n = q * q + q + 1;

    auto lines = std::vector<std::vector<int>>(size_t(n));
    for (int l = 0; l < n; ++l) {
        auto [a, b, c] = pl.line_coords(l);
        // two independent points spanning the line ax+by+cz = 0
        std::array<int, 3> u{}, v{};
        if (a != 0) {
            int ia = F.inv(a);
            u = {F.neg(F.mul(b, ia)), 1, 0};
            v = {F.neg(F.mul(c, ia)), 0, 1};
        } else if (b != 0) {
            int ib = F.inv(b);
            u = {1, 0, 0};
            v = {0, F.neg(F.mul(c, ib)), 1};
        } else {
            u = {1, 0, 0};
            v = {0, 1, 0};
        }
        auto& pts = lines[size_t(l)];
        pts.reserve(size_t(q + 1));
        pts.push_back(pl.point_index(u[0], u[1], u[2]));
        for (int t = 0; t < q; ++t)
            pts.push_back(pl.point_index(F.add(v[0], F.mul(t, u[0])),
                                         F.add(v[1], F.mul(t, u[1])),
                                         F.add(v[2], F.mul(t, u[2]))));
    }
    pl.finish(std::move(lines));
    return pl;
}

IncidencePlane IncidencePlane::from_lines(int q, const std::vector<std::vector<int>>& lines) {
    if (q < 2) throw BadRange("plane order must be >= 2");
    IncidencePlane pl;
    pl.q_ = q;
    pl.finish(lines);
    return pl;
}

IncidencePlane IncidencePlane::dual() const {
    IncidencePlane d;
    d.q_ = q_;
    d.n_ = n_;
    d.field_ = field_;
    d.line_pts_ = pt_lines_;
    d.pt_lines_ = line_pts_;
    d.line_pts_flat_ = pt_lines_flat_;
    d.pt_lines_flat_ = line_pts_flat_;
    return d;
}

int IncidencePlane::line_through(int p1, int p2) const {
    if (p1 == p2) throw IdenticalArguments("line_through requires distinct points");
    LineSet s = pt_lines_[size_t(p1)];
    s &= pt_lines_[size_t(p2)];
    return s.first();
}

int IncidencePlane::meet(int l1, int l2) const {
    if (l1 == l2) throw IdenticalArguments("meet requires distinct lines");
    PointSet s = line_pts_[size_t(l1)];
    s &= line_pts_[size_t(l2)];
    return s.first();
}

ValidationReport IncidencePlane::validate() const {
    std::vector<std::vector<int>> lines;
    lines.reserve(size_t(n_));
    for (int l = 0; l < n_; ++l) lines.push_back(line_pts_[size_t(l)].to_vector());
    return validate_axioms(q_, n_, lines);
}

std::string plane_to_json(const IncidencePlane& plane) {
    nlohmann::json j;
    j["q"] = plane.order();
    j["points"] = plane.num_points();
    auto lines = nlohmann::json::array();
    for (int l = 0; l < plane.num_lines(); ++l)
        lines.push_back(plane.points_on(l).to_vector());
    j["lines"] = std::move(lines);
    if (plane.has_coordinates()) {
        auto coords = nlohmann::json::array();
        for (int p = 0; p < plane.num_points(); ++p) {
            auto c = plane.point_coords(p);
            coords.push_back(std::vector<int>{c[0], c[1], c[2]});
        }
        j["coordinates"] = std::move(coords);
    }
    return j.dump(2) + "\n";
}

IncidencePlane plane_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("q") || !j.contains("points") || !j.contains("lines"))
        throw ParseError("plane file must be an object with keys q, points, lines");

    int q = 0, declared = 0;
    std::vector<std::vector<int>> lines;
    try {
        q = j.at("q").get<int>();
        declared = j.at("points").get<int>();
        lines = j.at("lines").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad field type: ") + e.what());
    }
    if (q < 2) throw ParseError("q must be >= 2");
    for (const auto& ln : lines)
        if (!std::is_sorted(ln.begin(), ln.end()))
            throw ParseError("line arrays must be sorted ascending");

    ValidationReport rep = validate_axioms(q, declared, lines);
    if (!rep.ok()) throw AxiomViolation("not a projective plane: " + rep.summary());
    return IncidencePlane::from_lines(q, lines);
}

void save_plane(const IncidencePlane& plane, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << plane_to_json(plane);
}

IncidencePlane load_plane(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return plane_from_json(ss.str());
}

} // namespace lineperc
