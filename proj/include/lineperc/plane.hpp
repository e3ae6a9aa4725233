#ifndef LINEPERC_PLANE_HPP
#define LINEPERC_PLANE_HPP

#include <array>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lineperc/bitset.hpp"
#include "lineperc/errors.hpp"
#include "lineperc/gf.hpp"

namespace lineperc {

/// Per-axiom outcome of checking a candidate incidence structure against
/// the projective-plane axioms. Failures carry a concrete witness.
struct ValidationReport {
    int q = 0;
    bool point_count_ok = false;  // q^2+q+1 points declared
    bool line_count_ok = false;   // q^2+q+1 lines
    bool line_sizes_ok = false;   // every line has q+1 distinct points
    bool point_degrees_ok = false; // every point on q+1 lines
    bool unique_join_ok = false;  // every point pair on exactly one line
    bool unique_meet_ok = false;  // every line pair meets in exactly one point

    int bad_line = -1;                      // witness for line_sizes_ok
    int bad_point = -1;                     // witness for point_degrees_ok
    std::array<int, 2> join_witness{-1, -1}; // point pair
    std::array<int, 2> meet_witness{-1, -1}; // line pair

    bool ok() const {
        return point_count_ok && line_count_ok && line_sizes_ok &&
               point_degrees_ok && unique_join_ok && unique_meet_ok;
    }
    std::string summary() const;
};

/// A projective plane of order q as an indexed incidence structure:
/// q^2+q+1 points and lines, incidence stored both ways as bitsets plus
/// flat ascending index lists for iteration.
///
/// Planes built from a field carry homogeneous coordinates: points are
/// nonzero triples (x,y,z) over GF(q) normalized so that the last nonzero
/// coordinate is 1, indexed in lexicographic order of the key (z,y,x);
/// lines are triples [a,b,c] normalized and indexed the same way; a point
/// lies on a line iff ax+by+cz = 0. Imported planes have no coordinates.
///
/// Immutable after construction.
class IncidencePlane {
public:
    /// The standard (Galois) plane PG(2,q) over the given field.
    static IncidencePlane build_pg2(const Field& field);

    /// Wrap explicit line point-lists (no coordinates). The caller is
    /// responsible for having validated the structure.
    static IncidencePlane from_lines(int q, const std::vector<std::vector<int>>& lines);

    /// Points and lines swap roles; incidence is preserved. Coordinates,
    /// if present, survive with their roles swapped.
    IncidencePlane dual() const;

    int order() const { return q_; }
    int num_points() const { return n_; }
    int num_lines() const { return n_; }

    const PointSet& points_on(int line) const { return line_pts_[line]; }
    const LineSet& lines_through(int point) const { return pt_lines_[point]; }
    std::span<const int32_t> points_on_list(int line) const {
        return {line_pts_flat_.data() + size_t(line) * (q_ + 1), size_t(q_ + 1)};
    }
    std::span<const int32_t> lines_through_list(int point) const {
        return {pt_lines_flat_.data() + size_t(point) * (q_ + 1), size_t(q_ + 1)};
    }

    /// Unique line through two distinct points; throws IdenticalArguments.
    int line_through(int p1, int p2) const;
    /// Unique common point of two distinct lines; throws IdenticalArguments.
    int meet(int l1, int l2) const;

    bool has_coordinates() const { return field_ != nullptr; }
    /// Field of a coordinatized plane; throws NoCoordinates otherwise.
    const Field& field() const;
    std::array<int, 3> point_coords(int point) const;
    std::array<int, 3> line_coords(int line) const;
    /// Index of the point with homogeneous coordinates (x,y,z) != 0.
    int point_index(int x, int y, int z) const;
    int line_index(int a, int b, int c) const;

    ValidationReport validate() const;

private:
    IncidencePlane() = default;
    void finish(std::vector<std::vector<int>> lines);

    int q_ = 0, n_ = 0;
    std::vector<PointSet> line_pts_;
    std::vector<LineSet> pt_lines_;
    std::vector<int32_t> line_pts_flat_, pt_lines_flat_;
    std::shared_ptr<const Field> field_; // null for imported planes
};

/// Axiom check for an arbitrary candidate: `lines` lists each line's point
/// indices; `declared_points` is the claimed number of points.
ValidationReport validate_axioms(int q, int declared_points,
                                 const std::vector<std::vector<int>>& lines);

/// JSON plane format: { "q": int, "points": int, "lines": [[sorted point
/// indices], ...], "coordinates": [[x,y,z], ...] (optional) }.
std::string plane_to_json(const IncidencePlane& plane);
/// Parses and validates; throws ParseError on malformed input and
/// AxiomViolation (with the report summary) on a non-plane. The loaded
/// plane carries no coordinates.
IncidencePlane plane_from_json(const std::string& text);

void save_plane(const IncidencePlane& plane, const std::string& path);
IncidencePlane load_plane(const std::string& path);

} // namespace lineperc

#endif
