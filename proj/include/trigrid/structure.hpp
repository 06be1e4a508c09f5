#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "trigrid/grid.hpp"

namespace trigrid {

enum class SymmetryKind { vertical, rotational, slide };

std::string to_string(SymmetryKind k);

/// First label identity that fails for a symmetry check, kept precise so
/// harness reports can point at concrete counterexamples.
struct SymmetryViolation {
    SymmetryKind kind;
    EdgeRef edge;
    EdgeRef image;
    Rational value;
    Rational image_value;

    std::string describe() const;
};

/// Image of an edge slot under the vertical (left/right mirror) label map.
EdgeRef vertical_image(EdgeRef ref);

/// Image of an edge slot under the rotational label map of an n-row grid.
EdgeRef rotational_image(int n, EdgeRef ref);

std::optional<SymmetryViolation> find_symmetry_violation(const Grid& g, SymmetryKind kind);

bool is_vertically_symmetric(const Grid& g);
bool is_rotationally_symmetric(const Grid& g);
bool is_slide_symmetric(const Grid& g);

/// Full grid symmetry: vertical, rotational and slide all hold.
bool is_symmetric(const Grid& g);

/// Orbit of an edge slot under the group generated by the vertical and
/// rotational maps; a symmetric grid is constant on each orbit.
std::vector<EdgeRef> symmetry_orbit(int n, EdgeRef ref);

/// The triangle set that determines a symmetric n-row grid entirely:
/// {<r,d> : 1 <= d <= floor((n+2)/3), 2d-1 <= r <= floor((n+d)/2)}.
std::vector<TriRef> upper_left_half(int n);

/// Raised by complete_from_upper_left_half when the given labels clash
/// under the symmetry identities.
class ConstraintViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The unique symmetric grid whose upper-left-half triangles carry the
/// given labels. Throws std::invalid_argument when the given set is not
/// exactly the upper left half, and ConstraintViolation when two givens
/// disagree under a symmetry identity.
Grid complete_from_upper_left_half(int n, const std::map<TriRef, PreType>& given);

/// Concentric triangular subgrid of an n-row grid with corners <2s-1,s>,
/// <n+1-s,s>, <n+1-s,n+2-2s>; the rim is its boundary triangle set, the
/// boundary edges its perimeter, and interior edges everything else.
struct SubgridSpec {
    int s = 1;
    std::set<TriRef> triangles;
    std::set<TriRef> rim;
    std::set<EdgeRef> boundary_edges;
    std::set<EdgeRef> interior_edges;
};

/// Requires 1 <= s and 2s-1 <= n+1-s; the degenerate single-triangle case
/// (2s-1 = n+1-s) is valid.
SubgridSpec subgrid(int n, int s);

/// Inclusive row interval [s+d, n-2s] on diagonal d where, after s
/// reductions of an n-row uniform grid, all triangles share one type.
/// Requires n >= 4s and 1 <= d <= s.
struct RowRange {
    int first = 0;
    int last = -1;
    bool empty() const { return first > last; }
};
RowRange uniform_center_rows(int n, int s, int d);

/// The uniform-center triangles of diagonal d, materialized together with
/// their vertical mirror images. Addresses refer to the reduced
/// (n-s)-row grid.
std::vector<TriRef> uniform_center_triangles(int n, int s, int d);

}  // namespace trigrid
