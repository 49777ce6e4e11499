#include "mgrecon/homology.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <queue>
#include <stdexcept>

#include <fmt/format.h>

namespace mgrecon {

Gf2Column gf2_add(const Gf2Column& a, const Gf2Column& b)
{
    Gf2Column out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Gf2Column Gf2Basis::reduce(Gf2Column v) const
{
    while (!v.empty()) {
        const Index low = v.back();
        if (low >= pivot_of_low_.size() || pivot_of_low_[low] == kNone)
            break;
        v = gf2_add(v, columns_[pivot_of_low_[low]]);
    }
    return v;
}

bool Gf2Basis::insert(Gf2Column v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    const Index low = v.back();
    if (low >= pivot_of_low_.size())
        pivot_of_low_.resize(low + 1, kNone);
    pivot_of_low_[low] = columns_.size();
    columns_.push_back(std::move(v));
    return true;
}

BoundaryMatrices boundary_matrices(const SimplicialComplex2& complex)
{
    BoundaryMatrices m;
    m.d1.reserve(complex.edges().size());
    for (const auto& [i, j] : complex.edges())
        m.d1.push_back(Gf2Column{i, j});
    m.d2.reserve(complex.triangles().size());
    for (const auto& [i, j, k] : complex.triangles()) {
        Gf2Column col{static_cast<Index>(*complex.edge_index(i, j)), static_cast<Index>(*complex.edge_index(i, k)),
                      static_cast<Index>(*complex.edge_index(j, k))};
        std::sort(col.begin(), col.end());
        m.d2.push_back(std::move(col));
    }
    return m;
}

Gf2Basis boundary_space(const SimplicialComplex2& complex)
{
    Gf2Basis basis(complex.edges().size());
    for (auto& col : boundary_matrices(complex).d2)
        basis.insert(std::move(col));
    return basis;
}

namespace {

std::size_t component_count(const SimplicialComplex2& complex)
{
    std::vector<Index> parent(complex.vertex_count());
    std::iota(parent.begin(), parent.end(), Index{0});
    const auto find = [&](Index x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = complex.vertex_count();
    for (const auto& [i, j] : complex.edges()) {
        const Index a = find(i);
        const Index b = find(j);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

}  // namespace

Betti betti_numbers(const SimplicialComplex2& complex)
{
    const std::size_t b0 = component_count(complex);
    const std::size_t cycle_rank = complex.edges().size() + b0 - complex.vertex_count();
    const std::size_t boundary_rank = boundary_space(complex).rank();
    return Betti{b0, cycle_rank - boundary_rank};
}

H1Basis h1_basis(const SimplicialComplex2& complex)
{
    const std::size_t n = complex.vertex_count();
    const auto& edges = complex.edges();

    std::vector<std::vector<std::pair<Index, Index>>> adj(n);  // (neighbour, edge index)
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e][0]].emplace_back(edges[e][1], static_cast<Index>(e));
        adj[edges[e][1]].emplace_back(edges[e][0], static_cast<Index>(e));
    }

    constexpr Index kUnset = static_cast<Index>(-1);
    std::vector<Index> parent_edge(n, kUnset);
    std::vector<Index> parent(n, kUnset);
    std::vector<std::size_t> depth(n, 0);
    std::vector<bool> seen(n, false);
    std::vector<bool> tree_edge(edges.size(), false);
    std::size_t components = 0;
    for (Index root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        ++components;
        std::queue<Index> queue;
        queue.push(root);
        while (!queue.empty()) {
            const Index u = queue.front();
            queue.pop();
            for (const auto& [v, e] : adj[u]) {
                if (seen[v])
                    continue;
                seen[v] = true;
                parent[v] = u;
                parent_edge[v] = e;
                depth[v] = depth[u] + 1;
                tree_edge[e] = true;
                queue.push(v);
            }
        }
    }

    Gf2Basis relations = boundary_space(complex);
    const std::size_t target = edges.size() + components - n - relations.rank();
    H1Basis basis;
    for (std::size_t e = 0; e < edges.size() && basis.cycles.size() < target; ++e) {
        if (tree_edge[e])
            continue;
        Gf2Column cycle{static_cast<Index>(e)};
        Index a = edges[e][0];
        Index b = edges[e][1];
        while (a != b) {
            if (depth[a] < depth[b])
                std::swap(a, b);
            cycle.push_back(parent_edge[a]);
            a = parent[a];
        }
        std::sort(cycle.begin(), cycle.end());
        if (relations.insert(cycle))
            basis.cycles.push_back(std::move(cycle));
    }
    return basis;
}

Gf2Column push_forward(const Gf2Column& chain, const SimplicialComplex2& from, const SimplicialComplex2& to)
{
    Gf2Column out;
    out.reserve(chain.size());
    for (Index e : chain) {
        const auto& [i, j] = from.edges().at(e);
        const auto target = to.edge_index(i, j);
        if (!target)
            throw std::invalid_argument(fmt::format("push_forward: edge ({},{}) missing from target complex", i, j));
        out.push_back(static_cast<Index>(*target));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t image_rank(const SimplicialComplex2& k1, const SimplicialComplex2& k2)
{
    if (!k1.is_subcomplex_of(k2))
        throw std::invalid_argument("image_rank: K1 is not a subcomplex of K2");
    Gf2Basis span = boundary_space(k2);
    const std::size_t boundary_rank = span.rank();
    for (const auto& cycle : h1_basis(k1).cycles)
        span.insert(push_forward(cycle, k1, k2));
    return span.rank() - boundary_rank;
}

Algorithm1Result algorithm1(const NervePair& nerves, double eps, double xi, Algorithm1Method method)
{
    const auto& [k1, k2] = nerves;
    Algorithm1Result result;
    result.method = method;
    result.eps = eps;
    result.xi = xi;
    result.k1_edges = k1.edges().size();
    result.k1_triangles = k1.triangles().size();
    result.k2_edges = k2.edges().size();
    result.k2_triangles = k2.triangles().size();
    result.b1_k1 = betti_numbers(k1).b1;
    result.b1_k2 = betti_numbers(k2).b1;

    if (method == Algorithm1Method::ImageRank) {
        result.b1_estimate = image_rank(k1, k2);
    } else {
        if (!k1.is_subcomplex_of(k2))
            throw std::invalid_argument("algorithm1: K1 is not a subcomplex of K2");
        std::vector<Gf2Column> cycles = h1_basis(k1).cycles;
        std::sort(cycles.begin(), cycles.end(), [](const Gf2Column& a, const Gf2Column& b) {
            return a.front() != b.front() ? a.front() < b.front() : a < b;
        });
        const Gf2Basis boundaries = boundary_space(k2);
        Gf2Basis surviving = boundaries;
        for (const auto& cycle : cycles) {
            Gf2Column pushed = push_forward(cycle, k1, k2);
            if (boundaries.contains(pushed))
                continue;  // bounds in K2: collapse
            if (surviving.insert(std::move(pushed)))
                result.survivors.push_back(cycle);
        }
        result.b1_estimate = result.survivors.size();
    }
    result.collapsed = result.b1_k1 - result.b1_estimate;
    return result;
}

Algorithm1Result algorithm1(const Sample& sample, double eps, double xi, Algorithm1Method method,
                            std::optional<double> eps_threshold)
{
    Algorithm1Result result = algorithm1(nerve_pair(sample, eps, xi), eps, xi, method);
    if (eps_threshold && !(eps < *eps_threshold))
        result.warnings.push_back(fmt::format(
            "eps = {} is not below gfs/xi = {}; the reconstruction guarantee does not apply", eps, *eps_threshold));
    return result;
}

const char* to_string(Algorithm1Method method)
{
    return method == Algorithm1Method::Literal ? "literal" : "image-rank";
}

}  // namespace mgrecon
