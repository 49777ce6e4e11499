#include "mgrecon/complex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include <fmt/format.h>

namespace mgrecon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename T>
void sort_unique(std::vector<T>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

using Adjacency = std::vector<std::vector<Index>>;

Adjacency adjacency_of(std::size_t n, const std::vector<Edge>& edges)
{
    Adjacency adj(n);
    for (const auto& [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& row : adj)
        std::sort(row.begin(), row.end());
    return adj;
}

/// Calls f(k) for every common neighbour k > j of i and j.
template <typename F>
void for_common_upper_neighbours(const Adjacency& adj, Index i, Index j, F&& f)
{
    const auto& a = adj[i];
    const auto& b = adj[j];
    auto ia = std::upper_bound(a.begin(), a.end(), j);
    auto ib = std::upper_bound(b.begin(), b.end(), j);
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else {
            f(*ia);
            ++ia;
            ++ib;
        }
    }
}

std::vector<Edge> close_pairs(const std::vector<Point>& points, double reach)
{
    // Sweep along the first coordinate; only pairs within `reach` there can
    // be within `reach` overall.
    std::vector<Index> order(points.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        return points[a][0] < points[b][0] || (points[a][0] == points[b][0] && a < b);
    });
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < order.size(); ++a) {
        const Point& p = points[order[a]];
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            const Point& q = points[order[b]];
            if (q[0] - p[0] > reach)
                break;
            if (euclidean_distance(p, q) <= reach)
                edges.push_back(Edge{std::min(order[a], order[b]), std::max(order[a], order[b])});
        }
    }
    return edges;
}

}  // namespace

SimplicialComplex2::SimplicialComplex2(std::size_t n_vertices, std::vector<Edge> edges, std::vector<Triangle> triangles)
    : n_vertices_(n_vertices), edges_(std::move(edges)), triangles_(std::move(triangles))
{
    for (auto& e : edges_)
        std::sort(e.begin(), e.end());
    for (auto& t : triangles_)
        std::sort(t.begin(), t.end());
    sort_unique(edges_);
    sort_unique(triangles_);
    if (const std::string defect = check(); !defect.empty())
        throw std::invalid_argument("malformed simplicial complex: " + defect);
}

std::optional<std::size_t> SimplicialComplex2::edge_index(Index i, Index j) const
{
    const Edge key{std::min(i, j), std::max(i, j)};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

bool SimplicialComplex2::contains_triangle(const Triangle& t) const
{
    Triangle key = t;
    std::sort(key.begin(), key.end());
    return std::binary_search(triangles_.begin(), triangles_.end(), key);
}

std::string SimplicialComplex2::check() const
{
    for (const auto& [i, j] : edges_) {
        if (j >= n_vertices_)
            return fmt::format("edge ({},{}) references vertex >= {}", i, j, n_vertices_);
        if (i >= j)
            return fmt::format("edge ({},{}) is not a sorted pair of distinct vertices", i, j);
    }
    if (!std::is_sorted(edges_.begin(), edges_.end()) ||
        std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        return "edges are not sorted and unique";
    for (const auto& [i, j, k] : triangles_) {
        if (k >= n_vertices_)
            return fmt::format("triangle ({},{},{}) references vertex >= {}", i, j, k, n_vertices_);
        if (!(i < j && j < k))
            return fmt::format("triangle ({},{},{}) is not a sorted triple of distinct vertices", i, j, k);
        if (!contains_edge(i, j) || !contains_edge(i, k) || !contains_edge(j, k))
            return fmt::format("triangle ({},{},{}) is missing an edge", i, j, k);
    }
    if (!std::is_sorted(triangles_.begin(), triangles_.end()) ||
        std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end())
        return "triangles are not sorted and unique";
    return {};
}

bool SimplicialComplex2::is_subcomplex_of(const SimplicialComplex2& other) const
{
    return n_vertices_ <= other.n_vertices_ &&
           std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end()) &&
           std::includes(other.triangles_.begin(), other.triangles_.end(), triangles_.begin(), triangles_.end());
}

MetricMatrix::MetricMatrix(std::size_t n) : n_(n), d_(n * n, kInf)
{
    for (std::size_t i = 0; i < n; ++i)
        d_[i * n + i] = 0.0;
}

MetricMatrix MetricMatrix::euclidean(const std::vector<Point>& points)
{
    MetricMatrix m(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            m(i, j) = m(j, i) = euclidean_distance(points[i], points[j]);
    return m;
}

SimplicialComplex2 cech_nerve(const Sample& sample, double eps)
{
    if (sample.empty())
        throw std::invalid_argument("cech_nerve: empty sample");
    if (!(eps > 0.0))
        throw std::invalid_argument(fmt::format("cech_nerve: eps must be positive, got {}", eps));
    sample.check_dimension();

    const auto& pts = sample.points;
    std::vector<Edge> edges = close_pairs(pts, 2.0 * eps + kTolerance);
    std::sort(edges.begin(), edges.end());
    const Adjacency adj = adjacency_of(pts.size(), edges);

    std::vector<Triangle> triangles;
    for (const auto& [i, j] : edges)
        for_common_upper_neighbours(adj, i, j, [&](Index k) {
            if (min_enclosing_ball_3(pts[i], pts[j], pts[k]).radius <= eps + kTolerance)
                triangles.push_back(Triangle{i, j, k});
        });
    return SimplicialComplex2(pts.size(), std::move(edges), std::move(triangles));
}

NervePair nerve_pair(const Sample& sample, double eps, double xi)
{
    if (!(xi >= 1.0))
        throw std::invalid_argument(fmt::format("nerve_pair: xi must be >= 1, got {}", xi));
    NervePair pair{cech_nerve(sample, eps), cech_nerve(sample, xi * eps)};
    if (!pair.k1.is_subcomplex_of(pair.k2))
        throw std::logic_error("nerve_pair: K1 is not a subcomplex of K2");
    return pair;
}

MetricMatrix skeleton_geodesic_metric(const SimplicialComplex2& complex, const Sample& sample)
{
    if (sample.size() != complex.vertex_count())
        throw std::invalid_argument(fmt::format("skeleton_geodesic_metric: complex has {} vertices, sample has {}",
                                                complex.vertex_count(), sample.size()));
    const std::size_t n = complex.vertex_count();
    std::vector<std::vector<std::pair<Index, double>>> adj(n);
    for (const auto& [i, j] : complex.edges()) {
        const double w = euclidean_distance(sample.points[i], sample.points[j]);
        adj[i].emplace_back(j, w);
        adj[j].emplace_back(i, w);
    }

    MetricMatrix metric(n);
    using Item = std::pair<double, Index>;
    std::vector<double> dist(n);
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), kInf);
        dist[src] = 0.0;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        queue.emplace(0.0, static_cast<Index>(src));
        while (!queue.empty()) {
            const auto [d, u] = queue.top();
            queue.pop();
            if (d > dist[u])
                continue;
            for (const auto& [v, w] : adj[u])
                if (d + w < dist[v]) {
                    dist[v] = d + w;
                    queue.emplace(dist[v], v);
                }
        }
        for (std::size_t j = 0; j < n; ++j)
            metric(src, j) = dist[j];
    }
    // Symmetrise against rounding differences between the two directions.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            metric(i, j) = metric(j, i) = std::min(metric(i, j), metric(j, i));
    return metric;
}

SimplicialComplex2 vietoris_rips(const MetricMatrix& metric, double scale)
{
    if (!(scale > 0.0))
        throw std::invalid_argument(fmt::format("vietoris_rips: scale must be positive, got {}", scale));
    const std::size_t n = metric.size();
    const double reach = scale + kTolerance;
    std::vector<Edge> edges;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (metric(i, j) <= reach)
                edges.push_back(Edge{i, j});
    const Adjacency adj = adjacency_of(n, edges);
    std::vector<Triangle> triangles;
    for (const auto& [i, j] : edges)
        for_common_upper_neighbours(adj, i, j, [&](Index k) { triangles.push_back(Triangle{i, j, k}); });
    return SimplicialComplex2(n, std::move(edges), std::move(triangles));
}

}  // namespace mgrecon
