#include "trigrid/structure.hpp"

#include <algorithm>
#include <queue>

namespace trigrid {

std::string to_string(SymmetryKind k) {
    switch (k) {
        case SymmetryKind::vertical: return "vertical";
        case SymmetryKind::rotational: return "rotational";
        default: return "slide";
    }
}

std::string SymmetryViolation::describe() const {
    return to_string(kind) + " symmetry fails: " + to_string(edge) + "=" + value.to_string() +
           " but " + to_string(image) + "=" + image_value.to_string();
}

EdgeRef vertical_image(EdgeRef ref) {
    const TriRef mirrored{ref.tri.r, ref.tri.r + 1 - ref.tri.d};
    switch (ref.e) {
        case Edge::left: return {mirrored, Edge::right};
        case Edge::right: return {mirrored, Edge::left};
        default: return {mirrored, Edge::base};
    }
}

EdgeRef rotational_image(int n, EdgeRef ref) {
    const TriRef rotated{n + ref.tri.d - ref.tri.r, n + 1 - ref.tri.r};
    switch (ref.e) {
        case Edge::left: return {rotated, Edge::right};
        case Edge::right: return {rotated, Edge::base};
        default: return {rotated, Edge::left};
    }
}

namespace {

EdgeRef slide_image(int n, EdgeRef ref) {
    // Defined on left edges only: <r,d,1> = <n+d-r,d,1>.
    return {{n + ref.tri.d - ref.tri.r, ref.tri.d}, Edge::left};
}

}  // namespace

std::optional<SymmetryViolation> find_symmetry_violation(const Grid& g, SymmetryKind kind) {
    const int n = g.n();
    for (const EdgeRef ref : all_edges(n)) {
        if (kind == SymmetryKind::slide && ref.e != Edge::left) continue;
        EdgeRef image;
        switch (kind) {
            case SymmetryKind::vertical: image = vertical_image(ref); break;
            case SymmetryKind::rotational: image = rotational_image(n, ref); break;
            default: image = slide_image(n, ref); break;
        }
        const Rational& a = g.edge(ref);
        const Rational& b = g.edge(image);
        if (a != b) return SymmetryViolation{kind, ref, image, a, b};
    }
    return std::nullopt;
}

bool is_vertically_symmetric(const Grid& g) {
    return !find_symmetry_violation(g, SymmetryKind::vertical).has_value();
}

bool is_rotationally_symmetric(const Grid& g) {
    return !find_symmetry_violation(g, SymmetryKind::rotational).has_value();
}

bool is_slide_symmetric(const Grid& g) {
    return !find_symmetry_violation(g, SymmetryKind::slide).has_value();
}

bool is_symmetric(const Grid& g) {
    return is_vertically_symmetric(g) && is_rotationally_symmetric(g) && is_slide_symmetric(g);
}

std::vector<EdgeRef> symmetry_orbit(int n, EdgeRef ref) {
    std::set<EdgeRef> seen{ref};
    std::queue<EdgeRef> work;
    work.push(ref);
    while (!work.empty()) {
        const EdgeRef cur = work.front();
        work.pop();
        for (const EdgeRef next : {vertical_image(cur), rotational_image(n, cur)}) {
            if (seen.insert(next).second) work.push(next);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<TriRef> upper_left_half(int n) {
    if (n < 1) throw std::invalid_argument("upper_left_half: n must be >= 1");
    std::vector<TriRef> out;
    for (int d = 1; d <= (n + 2) / 3; ++d)
        for (int r = 2 * d - 1; r <= (n + d) / 2; ++r) out.push_back({r, d});
    std::sort(out.begin(), out.end());
    return out;
}

Grid complete_from_upper_left_half(int n, const std::map<TriRef, PreType>& given) {
    const std::vector<TriRef> half = upper_left_half(n);
    const std::set<TriRef> half_set(half.begin(), half.end());
    for (const TriRef t : half)
        if (!given.count(t))
            throw std::invalid_argument("complete_from_upper_left_half: missing triangle " +
                                        to_string(t));
    for (const auto& [t, p] : given)
        if (!half_set.count(t))
            throw std::invalid_argument("complete_from_upper_left_half: triangle " + to_string(t) +
                                        " is not in the upper left half");

    std::vector<PreType> labels(static_cast<size_t>(n) * (n + 1) / 2);
    for (const EdgeRef ref : all_edges(n)) {
        std::optional<std::pair<EdgeRef, Rational>> chosen;
        for (const EdgeRef member : symmetry_orbit(n, ref)) {
            const auto it = given.find(member.tri);
            if (it == given.end()) continue;
            const Rational& v = it->second.edge(member.e);
            if (!chosen) {
                chosen = {member, v};
            } else if (chosen->second != v) {
                throw ConstraintViolation(
                    "complete_from_upper_left_half: symmetry identity forces " +
                    to_string(chosen->first) + " = " + to_string(member) + " but the givens are " +
                    chosen->second.to_string() + " and " + v.to_string());
            }
        }
        if (!chosen)
            throw ConstraintViolation("complete_from_upper_left_half: edge " + to_string(ref) +
                                      " is not determined by the upper left half");
        const int idx = ref.tri.r * (ref.tri.r - 1) / 2 + ref.tri.d - 1;
        switch (ref.e) {
            case Edge::left: labels[idx].left = chosen->second; break;
            case Edge::right: labels[idx].right = chosen->second; break;
            case Edge::base: labels[idx].base = chosen->second; break;
        }
    }
    return Grid(n, std::move(labels));
}

SubgridSpec subgrid(int n, int s) {
    if (s < 1) throw std::invalid_argument("subgrid: s must be >= 1");
    const int top_row = 2 * s - 1;
    const int bottom_row = n + 1 - s;
    if (top_row > bottom_row)
        throw std::invalid_argument("subgrid: no " + std::to_string(s) + "-subgrid in a " +
                                    std::to_string(n) + "-row grid");
    SubgridSpec spec;
    spec.s = s;
    for (int r = top_row; r <= bottom_row; ++r) {
        const int d_max = r - s + 1;
        for (int d = s; d <= d_max; ++d) {
            const TriRef t{r, d};
            spec.triangles.insert(t);
            if (d == s || d == d_max || r == bottom_row) spec.rim.insert(t);
        }
    }
    // Perimeter of the subgrid region: the left side runs along diagonal s,
    // the right side along the trailing diagonal, the bottom along the last
    // row's bases.
    for (int r = top_row; r <= bottom_row; ++r) {
        spec.boundary_edges.insert({{r, s}, Edge::left});
        spec.boundary_edges.insert({{r, r - s + 1}, Edge::right});
    }
    for (int d = s; d <= n + 2 - 2 * s; ++d)
        spec.boundary_edges.insert({{bottom_row, d}, Edge::base});
    for (const TriRef t : spec.triangles)
        for (Edge e : {Edge::left, Edge::right, Edge::base}) {
            const EdgeRef ref{t, e};
            if (!spec.boundary_edges.count(ref)) spec.interior_edges.insert(ref);
        }
    return spec;
}

RowRange uniform_center_rows(int n, int s, int d) {
    if (s < 1 || d < 1 || d > s)
        throw std::invalid_argument("uniform_center_rows: requires 1 <= d <= s");
    if (n < 4 * s)
        throw std::invalid_argument("uniform_center_rows: requires n >= 4s, got n=" +
                                    std::to_string(n) + ", s=" + std::to_string(s));
    return {s + d, n - 2 * s};
}

std::vector<TriRef> uniform_center_triangles(int n, int s, int d) {
    const RowRange rows = uniform_center_rows(n, s, d);
    std::set<TriRef> out;
    for (int r = rows.first; r <= rows.last; ++r) {
        out.insert({r, d});
        out.insert({r, r + 1 - d});  // vertical mirror image
    }
    return {out.begin(), out.end()};
}

}  // namespace trigrid
