#include "mgrecon/oracles.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace mgrecon::oracles {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double plain_distance(const Point& p, const Point& q)
{
    double s = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i)
        s += (p[i] - q[i]) * (p[i] - q[i]);
    return std::sqrt(s);
}

using DenseRow = std::vector<std::uint8_t>;

/// Rank over GF(2) of the given rows by textbook Gaussian elimination.
std::size_t dense_rank(std::vector<DenseRow> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c] != 0)
                for (std::size_t k = 0; k < cols; ++k)
                    rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

std::map<std::pair<Index, Index>, std::size_t> edge_lookup(const SimplicialComplex2& k)
{
    std::map<std::pair<Index, Index>, std::size_t> lookup;
    for (std::size_t e = 0; e < k.edges().size(); ++e)
        lookup[{k.edges()[e][0], k.edges()[e][1]}] = e;
    return lookup;
}

/// Rows are the triangle boundaries, as vectors over the edges.
std::vector<DenseRow> triangle_boundaries(const SimplicialComplex2& k)
{
    const auto lookup = edge_lookup(k);
    std::vector<DenseRow> rows;
    for (const auto& t : k.triangles()) {
        DenseRow row(k.edges().size(), 0);
        row[lookup.at({t[0], t[1]})] ^= 1;
        row[lookup.at({t[0], t[2]})] ^= 1;
        row[lookup.at({t[1], t[2]})] ^= 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

double gfs_bruteforce(const EmbeddedMetricGraph& graph, double fine_step)
{
    const std::size_t n = graph.vertices.size();
    const std::size_t m = graph.edges.size();
    if (m == 0)
        throw std::domain_error("gfs_bruteforce: graph has no edges");

    std::vector<double> length(m);
    double l = kInf;
    for (std::size_t e = 0; e < m; ++e) {
        length[e] = plain_distance(graph.vertices[graph.edges[e][0]], graph.vertices[graph.edges[e][1]]);
        l = std::min(l, length[e]);
    }
    if (!(fine_step > 0.0) || fine_step > 1e-3 * l)
        throw std::invalid_argument("gfs_bruteforce: fine_step must lie in (0, 1e-3 * l]");

    std::vector<std::vector<double>> dist(n, std::vector<double>(n, kInf));
    for (std::size_t v = 0; v < n; ++v)
        dist[v][v] = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
        const auto [u, v] = graph.edges[e];
        dist[u][v] = dist[v][u] = std::min(dist[u][v], length[e]);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);

    struct Discrete {
        std::size_t edge;  // m for an isolated vertex
        double t;
        Point at;
    };
    std::vector<Discrete> pts;
    std::vector<bool> touched(n, false);
    for (std::size_t e = 0; e < m; ++e) {
        const auto [u, v] = graph.edges[e];
        touched[u] = touched[v] = true;
        const auto pieces = static_cast<std::size_t>(std::ceil(length[e] / fine_step));
        for (std::size_t k = 0; k <= pieces; ++k) {
            const double frac = static_cast<double>(k) / static_cast<double>(pieces);
            Point p(graph.dim);
            for (std::size_t c = 0; c < graph.dim; ++c)
                p[c] = graph.vertices[u][c] + frac * (graph.vertices[v][c] - graph.vertices[u][c]);
            pts.push_back({e, frac * length[e], std::move(p)});
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!touched[v])
            pts.push_back({m, 0.0, graph.vertices[v]});

    const auto geodesic = [&](const Discrete& a, const Discrete& b) {
        if (a.edge == m || b.edge == m)
            return kInf;
        double best = kInf;
        if (a.edge == b.edge)
            best = std::abs(a.t - b.t);
        const auto [au, av] = graph.edges[a.edge];
        const auto [bu, bv] = graph.edges[b.edge];
        const double la = length[a.edge];
        const double lb = length[b.edge];
        best = std::min(best, a.t + dist[au][bu] + b.t);
        best = std::min(best, a.t + dist[au][bv] + (lb - b.t));
        best = std::min(best, (la - a.t) + dist[av][bu] + b.t);
        best = std::min(best, (la - a.t) + dist[av][bv] + (lb - b.t));
        return best;
    };

    double best = kInf;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (geodesic(pts[i], pts[j]) >= l - 1e-9)
                best = std::min(best, plain_distance(pts[i].at, pts[j].at));
    return 0.5 * best;
}

std::pair<std::size_t, std::size_t> betti_bruteforce(const SimplicialComplex2& complex)
{
    const std::size_t nv = complex.vertex_count();
    const std::size_t ne = complex.edges().size();
    if (ne > 2000)
        throw std::invalid_argument("betti_bruteforce: at most 2000 edges supported");

    // b0 from the transitive closure of the adjacency relation.
    std::vector<std::vector<bool>> reach(nv, std::vector<bool>(nv, false));
    for (std::size_t v = 0; v < nv; ++v)
        reach[v][v] = true;
    for (const auto& e : complex.edges())
        reach[e[0]][e[1]] = reach[e[1]][e[0]] = true;
    for (std::size_t k = 0; k < nv; ++k)
        for (std::size_t i = 0; i < nv; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < nv; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;
    std::size_t b0 = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        bool smallest = true;
        for (std::size_t u = 0; u < v && smallest; ++u)
            if (reach[v][u])
                smallest = false;
        if (smallest)
            ++b0;
    }

    std::vector<DenseRow> d1_rows;  // one row per edge, over vertices
    for (const auto& e : complex.edges()) {
        DenseRow row(nv, 0);
        row[e[0]] = 1;
        row[e[1]] = 1;
        d1_rows.push_back(std::move(row));
    }
    const std::size_t rank_d1 = dense_rank(d1_rows);
    const std::size_t rank_d2 = dense_rank(triangle_boundaries(complex));
    return {b0, (ne - rank_d1) - rank_d2};
}

std::size_t image_rank_bruteforce(const SimplicialComplex2& k1, const SimplicialComplex2& k2)
{
    const std::size_t e1 = k1.edges().size();
    if (e1 > 20)
        throw std::invalid_argument("image_rank_bruteforce: at most 20 edges supported in K1");
    const auto lookup2 = edge_lookup(k2);
    std::vector<std::size_t> image_of(e1);
    for (std::size_t e = 0; e < e1; ++e) {
        const auto it = lookup2.find({k1.edges()[e][0], k1.edges()[e][1]});
        if (it == lookup2.end())
            throw std::invalid_argument("image_rank_bruteforce: K1 is not a subcomplex of K2");
        image_of[e] = it->second;
    }

    const std::vector<DenseRow> boundaries = triangle_boundaries(k2);
    const std::size_t base_rank = dense_rank(boundaries);
    const std::size_t e2 = k2.edges().size();

    // Keep an echelon basis of everything seen so far so that the 2^E1
    // candidate images do not all have to be stored.
    std::vector<DenseRow> echelon;
    std::vector<std::size_t> pivots;
    const auto add = [&](DenseRow v) {
        for (std::size_t b = 0; b < echelon.size(); ++b)
            if (v[pivots[b]] != 0)
                for (std::size_t k = 0; k < e2; ++k)
                    v[k] ^= echelon[b][k];
        for (std::size_t k = 0; k < e2; ++k)
            if (v[k] != 0) {
                for (std::size_t b = 0; b < echelon.size(); ++b)
                    if (echelon[b][k] != 0)
                        for (std::size_t c = 0; c < e2; ++c)
                            echelon[b][c] ^= v[c];
                echelon.push_back(std::move(v));
                pivots.push_back(k);
                return;
            }
    };
    for (const auto& row : boundaries)
        add(row);

    const std::uint64_t total = std::uint64_t{1} << e1;
    std::vector<std::uint8_t> parity(k1.vertex_count());
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        std::fill(parity.begin(), parity.end(), 0);
        for (std::size_t e = 0; e < e1; ++e)
            if (mask >> e & 1U) {
                parity[k1.edges()[e][0]] ^= 1;
                parity[k1.edges()[e][1]] ^= 1;
            }
        bool is_cycle = true;
        for (std::uint8_t p : parity)
            if (p != 0) {
                is_cycle = false;
                break;
            }
        if (!is_cycle)
            continue;
        DenseRow image(e2, 0);
        for (std::size_t e = 0; e < e1; ++e)
            if (mask >> e & 1U)
                image[image_of[e]] ^= 1;
        add(std::move(image));
    }
    return echelon.size() - base_rank;
}

}  // namespace mgrecon::oracles
