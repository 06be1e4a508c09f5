#pragma once

// Shared test helpers: an independent 64-bit fraction evaluator used as an
// oracle for expected values, and random grid generators.

#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "trigrid/grid.hpp"
#include "trigrid/structure.hpp"

namespace trigrid_test {

/// Minimal fraction arithmetic kept deliberately independent of the
/// library's Rational (no GMP): expected values computed with it
/// cross-check the real implementation.
struct Frac {
    long long p = 0;
    long long q = 1;
};

inline Frac reduce(Frac f) {
    const long long g = std::gcd(f.p < 0 ? -f.p : f.p, f.q < 0 ? -f.q : f.q);
    if (g != 0) {
        f.p /= g;
        f.q /= g;
    }
    if (f.q < 0) {
        f.p = -f.p;
        f.q = -f.q;
    }
    return f;
}

inline Frac frac(long long p, long long q) { return reduce({p, q}); }
inline Frac add(Frac a, Frac b) { return reduce({a.p * b.q + b.p * a.q, a.q * b.q}); }
inline Frac mul(Frac a, Frac b) { return reduce({a.p * b.p, a.q * b.q}); }
inline Frac div(Frac a, Frac b) { return reduce({a.p * b.q, a.q * b.p}); }

inline std::string to_string(Frac f) {
    f = reduce(f);
    return std::to_string(f.p) + "/" + std::to_string(f.q);
}

/// delta and wye recomputed from first principles on Frac.
inline Frac frac_delta(Frac x, Frac y, Frac z) { return div(mul(x, y), add(add(x, y), z)); }
inline Frac frac_wye(Frac x, Frac y, Frac z) {
    return div(add(add(mul(x, y), mul(y, z)), mul(z, x)), x);
}

inline trigrid::Rational random_rational(std::mt19937& rng, int max_num = 12, int max_den = 12) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return trigrid::Rational(num(rng), den(rng));
}

/// Grid with independently random positive labels (almost surely asymmetric).
inline trigrid::Grid random_grid(int n, std::mt19937& rng) {
    std::vector<trigrid::PreType> labels;
    labels.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n * (n + 1) / 2; ++i)
        labels.push_back({random_rational(rng), random_rational(rng), random_rational(rng)});
    return trigrid::Grid(n, std::move(labels));
}

namespace detail {

inline int edge_slot(int n, trigrid::EdgeRef ref) {
    (void)n;
    return 3 * (ref.tri.r * (ref.tri.r - 1) / 2 + ref.tri.d - 1) + static_cast<int>(ref.e) - 1;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(size) {
        for (int i = 0; i < size; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Random grid with the chosen label identities imposed exactly: edge
/// slots are merged under the selected symmetry maps and each class gets
/// one random value.
inline trigrid::Grid random_grid_with_symmetries(int n, std::mt19937& rng, bool vertical,
                                                 bool rotational, bool slide) {
    const auto edges = trigrid::all_edges(n);
    detail::UnionFind classes(3 * n * (n + 1) / 2);
    for (const trigrid::EdgeRef ref : edges) {
        const int slot = detail::edge_slot(n, ref);
        if (vertical) classes.unite(slot, detail::edge_slot(n, trigrid::vertical_image(ref)));
        if (rotational)
            classes.unite(slot, detail::edge_slot(n, trigrid::rotational_image(n, ref)));
        if (slide && ref.e == trigrid::Edge::left) {
            const trigrid::EdgeRef image{{n + ref.tri.d - ref.tri.r, ref.tri.d}, trigrid::Edge::left};
            classes.unite(slot, detail::edge_slot(n, image));
        }
    }
    std::map<int, trigrid::Rational> value_of_class;
    std::vector<trigrid::PreType> labels(n * (n + 1) / 2);
    for (const trigrid::EdgeRef ref : edges) {
        const int root = classes.find(detail::edge_slot(n, ref));
        auto it = value_of_class.find(root);
        if (it == value_of_class.end()) it = value_of_class.emplace(root, random_rational(rng)).first;
        trigrid::PreType& p = labels[ref.tri.r * (ref.tri.r - 1) / 2 + ref.tri.d - 1];
        switch (ref.e) {
            case trigrid::Edge::left: p.left = it->second; break;
            case trigrid::Edge::right: p.right = it->second; break;
            case trigrid::Edge::base: p.base = it->second; break;
        }
    }
    return trigrid::Grid(n, std::move(labels));
}

/// Random grid with full grid symmetry.
inline trigrid::Grid random_symmetric_grid(int n, std::mt19937& rng) {
    return random_grid_with_symmetries(n, rng, true, true, false);
}

}  // namespace trigrid_test
