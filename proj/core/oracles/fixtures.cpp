#include "mgrecon/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mgrecon::fixtures {

namespace {

EmbeddedMetricGraph make(std::vector<Point> vertices, std::vector<GraphEdge> edges)
{
    return EmbeddedMetricGraph{2, std::move(vertices), std::move(edges)};
}

}  // namespace

EmbeddedMetricGraph unit_segment() { return make({{0, 0}, {1, 0}}, {{0, 1}}); }

EmbeddedMetricGraph unit_triangle()
{
    return make({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}, {{0, 1}, {1, 2}, {2, 0}});
}

EmbeddedMetricGraph unit_square() { return make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

EmbeddedMetricGraph square_with_diagonal()
{
    return make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

EmbeddedMetricGraph two_squares()
{
    return make({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}},
                {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}});
}

EmbeddedMetricGraph h_tree()
{
    return make({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}});
}

EmbeddedMetricGraph regular_hexagon()
{
    std::vector<Point> v;
    for (int k = 0; k < 6; ++k) {
        const double a = std::numbers::pi / 3 * k;
        v.push_back({std::cos(a), std::sin(a)});
    }
    return make(std::move(v), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

EmbeddedMetricGraph star_30()
{
    const double a = std::numbers::pi / 6;
    return make({{0, 0}, {1, 0}, {std::cos(a), std::sin(a)}, {-1, 0}}, {{0, 1}, {0, 2}, {0, 3}});
}

std::vector<NamedGraph> standard_suite()
{
    return {{"triangle", unit_triangle()},       {"square", unit_square()},
            {"square-diagonal", square_with_diagonal()}, {"two-squares", two_squares()},
            {"h-tree", h_tree()},                {"hexagon", regular_hexagon()}};
}

EmbeddedMetricGraph by_name(const std::string& name)
{
    if (name == "segment")
        return unit_segment();
    if (name == "star30")
        return star_30();
    for (auto& g : standard_suite())
        if (g.name == name)
            return g.graph;
    throw std::invalid_argument("unknown fixture graph: " + name);
}

EmbeddedMetricGraph random_planar_graph(std::mt19937_64& rng, double max_xi)
{
    std::uniform_real_distribution<double> coord(0.0, 3.0);
    std::uniform_int_distribution<std::size_t> vertex_count(3, 7);
    for (;;) {
        const std::size_t n = vertex_count(rng);
        std::vector<Point> vertices;
        for (int attempt = 0; vertices.size() < n && attempt < 200; ++attempt) {
            Point p{coord(rng), coord(rng)};
            const bool separated = std::all_of(vertices.begin(), vertices.end(),
                                               [&](const Point& q) { return euclidean_distance(p, q) >= 0.6; });
            if (separated)
                vertices.push_back(std::move(p));
        }

        EmbeddedMetricGraph g{2, vertices, {}};
        std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
        const std::size_t want = std::uniform_int_distribution<std::size_t>(1, 2 * vertices.size())(rng);
        for (int attempt = 0; g.edges.size() < want && attempt < 60; ++attempt) {
            const std::size_t u = pick(rng);
            const std::size_t v = pick(rng);
            if (u == v)
                continue;
            g.edges.push_back({u, v});
            if (!validate(g).ok())
                g.edges.pop_back();
        }
        // Drop isolated vertices; they only make the instance less interesting.
        std::vector<std::size_t> remap(vertices.size(), vertices.size());
        EmbeddedMetricGraph compact{2, {}, {}};
        for (auto& [u, v] : g.edges)
            for (std::size_t* w : {&u, &v})
                if (remap[*w] == vertices.size()) {
                    remap[*w] = compact.vertices.size();
                    compact.vertices.push_back(vertices[*w]);
                }
        for (const auto& [u, v] : g.edges)
            compact.edges.push_back({remap[u], remap[v]});
        if (compact.edges.empty())
            continue;

        const MetricGraph mg(compact);
        if (mg.xi() > max_xi || mg.shortest_edge_length() < 0.5)
            continue;
        return compact;
    }
}

SimplicialComplex2 random_complex(std::mt19937_64& rng, std::size_t n, double p_edge, double p_triangle)
{
    std::bernoulli_distribution edge_coin(p_edge);
    std::bernoulli_distribution tri_coin(p_triangle);
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (edge_coin(rng)) {
                edges.push_back({i, j});
                adj[i][j] = adj[j][i] = true;
            }
    std::vector<Triangle> triangles;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            for (Index k = j + 1; k < n; ++k)
                if (adj[i][j] && adj[i][k] && adj[j][k] && tri_coin(rng))
                    triangles.push_back({i, j, k});
    return SimplicialComplex2(n, std::move(edges), std::move(triangles));
}

NervePair random_nested_pair(std::mt19937_64& rng, std::size_t n, std::size_t max_k1_edges)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SimplicialComplex2 k1;
    do {
        k1 = random_complex(rng, n, 0.15 + 0.3 * unit(rng), 0.3 * unit(rng));
    } while (k1.edges().size() > max_k1_edges);

    std::bernoulli_distribution extra_edge(0.15);
    std::bernoulli_distribution extra_tri(0.5);
    std::vector<Edge> edges = k1.edges();
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (!k1.contains_edge(i, j) && extra_edge(rng))
                edges.push_back({i, j});
    std::sort(edges.begin(), edges.end());
    const auto has = [&](Index a, Index b) { return std::binary_search(edges.begin(), edges.end(), Edge{a, b}); };
    std::vector<Triangle> triangles = k1.triangles();
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            for (Index k = j + 1; k < n; ++k)
                if (has(i, j) && has(i, k) && has(j, k) && !k1.contains_triangle({i, j, k}) && extra_tri(rng))
                    triangles.push_back({i, j, k});
    SimplicialComplex2 k2(n, std::move(edges), std::move(triangles));
    return NervePair{std::move(k1), std::move(k2)};
}

std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, std::size_t dim, double side)
{
    std::uniform_real_distribution<double> coord(0.0, side);
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Point p(dim);
        for (std::size_t c = 0; c < dim; ++c)
            p[c] = coord(rng);
        pts.push_back(std::move(p));
    }
    return pts;
}

}  // namespace mgrecon::fixtures
