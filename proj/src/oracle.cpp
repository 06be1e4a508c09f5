#include "trigrid/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <queue>

namespace trigrid {

namespace {

void require_query(const WeightedGraph& wg, Vertex u, Vertex v) {
    if (!wg.has_vertex(u)) throw std::invalid_argument("effective_resistance: unknown vertex " + to_string(u));
    if (!wg.has_vertex(v)) throw std::invalid_argument("effective_resistance: unknown vertex " + to_string(v));
    if (u == v) throw std::invalid_argument("effective_resistance: vertices must be distinct");
}

void require_connected(const WeightedGraph& wg) {
    if (wg.vertices().empty()) return;
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& [key, c] : wg.edges()) {
        adj[key.first].push_back(key.second);
        adj[key.second].push_back(key.first);
    }
    std::set<Vertex> seen{*wg.vertices().begin()};
    std::queue<Vertex> work;
    work.push(*seen.begin());
    while (!work.empty()) {
        const Vertex cur = work.front();
        work.pop();
        for (const Vertex next : adj[cur])
            if (seen.insert(next).second) work.push(next);
    }
    if (seen.size() != wg.vertex_count())
        throw NoPathError("effective_resistance: graph is not connected");
}

}  // namespace

std::array<Vertex, 3> corner_vertices(int n) {
    if (n < 1) throw std::invalid_argument("corner_vertices: n must be >= 1");
    return {Vertex{n, n}, Vertex{0, 0}, Vertex{2 * n, 0}};
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rational effective_resistance(const WeightedGraph& wg, Vertex u, Vertex v) {
    require_query(wg, u, v);
    require_connected(wg);

    // Index the non-grounded vertices (everything except v).
    std::map<Vertex, int> idx;
    int next = 0;
    for (const Vertex w : wg.vertices())
        if (w != v) idx.emplace(w, next++);
    const int dim = next;

    // Common denominator so the grounded Laplacian scales to integers.
    mpz_class scale = 1;
    for (const auto& [key, c] : wg.edges()) scale = lcm(scale, c.den());

    std::vector<std::vector<mpz_class>> a(dim, std::vector<mpz_class>(dim, mpz_class(0)));
    for (const auto& [key, c] : wg.edges()) {
        const mpz_class scaled = c.num() * (scale / c.den());
        const auto iu = idx.find(key.first);
        const auto iv = idx.find(key.second);
        if (iu != idx.end()) a[iu->second][iu->second] += scaled;
        if (iv != idx.end()) a[iv->second][iv->second] += scaled;
        if (iu != idx.end() && iv != idx.end()) {
            a[iu->second][iv->second] -= scaled;
            a[iv->second][iu->second] -= scaled;
        }
    }

    // x_u of L'x = e_u by Cramer: the numerator determinant reduces to the
    // minor with u's row and column removed.
    const int u_idx = idx.at(u);
    std::vector<std::vector<mpz_class>> minor;
    minor.reserve(dim - 1);
    for (int i = 0; i < dim; ++i) {
        if (i == u_idx) continue;
        std::vector<mpz_class> row;
        row.reserve(dim - 1);
        for (int j = 0; j < dim; ++j)
            if (j != u_idx) row.push_back(a[i][j]);
        minor.push_back(std::move(row));
    }
    const mpz_class det_minor = bareiss_determinant(std::move(minor));
    const mpz_class det_full = bareiss_determinant(std::move(a));
    if (det_full == 0)
        throw NoPathError("effective_resistance: singular grounded Laplacian");
    return Rational(scale * det_minor, det_full);
}

double float_effective_resistance(const WeightedGraph& wg, Vertex u, Vertex v) {
    require_query(wg, u, v);
    require_connected(wg);

    std::map<Vertex, int> idx;
    int next = 0;
    for (const Vertex w : wg.vertices())
        if (w != v) idx.emplace(w, next++);
    const int dim = next;

    std::vector<std::vector<double>> a(dim, std::vector<double>(dim, 0.0));
    std::vector<double> rhs(dim, 0.0);
    for (const auto& [key, c] : wg.edges()) {
        const double w = c.to_double();
        const auto iu = idx.find(key.first);
        const auto iv = idx.find(key.second);
        if (iu != idx.end()) a[iu->second][iu->second] += w;
        if (iv != idx.end()) a[iv->second][iv->second] += w;
        if (iu != idx.end() && iv != idx.end()) {
            a[iu->second][iv->second] -= w;
            a[iv->second][iu->second] -= w;
        }
    }
    rhs[idx.at(u)] = 1.0;

    // Gaussian elimination with partial pivoting.
    for (int k = 0; k < dim; ++k) {
        int pivot = k;
        for (int i = k + 1; i < dim; ++i)
            if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
        if (a[pivot][k] == 0.0)
            throw NoPathError("float_effective_resistance: singular grounded Laplacian");
        std::swap(a[k], a[pivot]);
        std::swap(rhs[k], rhs[pivot]);
        for (int i = k + 1; i < dim; ++i) {
            const double f = a[i][k] / a[k][k];
            if (f == 0.0) continue;
            for (int j = k; j < dim; ++j) a[i][j] -= f * a[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<double> x(dim, 0.0);
    for (int i = dim - 1; i >= 0; --i) {
        double sum = rhs[i];
        for (int j = i + 1; j < dim; ++j) sum -= a[i][j] * x[j];
        x[i] = sum / a[i][i];
    }
    return x[idx.at(u)];
}

}  // namespace trigrid
