#include "hrecol/graph.hpp"

#include "hrecol/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace hrecol {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges, bool all_loops)
{
    std::vector<std::vector<Vertex>> adj(vertex_count);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
        adj[u].push_back(v);
        if (u != v)
            adj[v].push_back(u);
    }
    if (all_loops)
        for (Vertex v = 0; v < vertex_count; ++v)
            adj[v].push_back(v);

    offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto& list = adj[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        offsets_[v + 1] = offsets_[v] + list.size();
    }
    targets_.reserve(offsets_.back());
    for (auto& list : adj)
        targets_.insert(targets_.end(), list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept
{
    auto n = neighbours(u);
    return std::binary_search(n.begin(), n.end(), v);
}

bool Graph::is_reflexive() const noexcept
{
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (!has_loop(v))
            return false;
    return true;
}

std::size_t Graph::proper_degree(Vertex v) const noexcept
{
    return neighbours(v).size() - (has_loop(v) ? 1 : 0);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> result;
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbours(u))
            if (u <= v)
                result.emplace_back(u, v);
    return result;
}

Graph Graph::with_all_loops() const
{
    auto e = edges();
    return Graph(vertex_count(), e, true);
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<Vertex> local(vertex_count(), kNoVertex);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<Vertex>(i);

    std::vector<Edge> e;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : neighbours(vertices[i]))
            if (local[w] != kNoVertex && local[w] >= i)
                e.emplace_back(static_cast<Vertex>(i), local[w]);
    return Graph(vertices.size(), e);
}

std::vector<std::size_t> component_ids(const Graph& g)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(g.vertex_count(), unset);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (id[s] != unset)
            continue;
        id[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(u))
                if (id[w] == unset) {
                    id[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return id;
}

std::vector<std::vector<Vertex>> components(const Graph& g)
{
    auto id = component_ids(g);
    std::size_t count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
    std::vector<std::vector<Vertex>> result(count);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        result[id[v]].push_back(v);
    return result;
}

HostReport validate_host(const Graph& h)
{
    HostReport report;
    report.is_reflexive = h.is_reflexive();
    report.components = components(h);

    const auto n = h.vertex_count();
    bool triangle = false;
    bool four_cycle = false;
    // Common-neighbour counts from u: two distinct middle vertices reaching
    // the same w close a 4-cycle u-x-w-y.
    std::vector<Vertex> seen_from(n, kNoVertex);
    for (Vertex u = 0; u < n && !(triangle && four_cycle); ++u) {
        for (Vertex x : h.neighbours(u)) {
            if (x == u)
                continue;
            for (Vertex w : h.neighbours(x)) {
                if (w == x || w == u)
                    continue;
                if (h.adjacent(u, w))
                    triangle = true;
                if (seen_from[w] == u)
                    four_cycle = true;
                seen_from[w] = u;
            }
        }
    }
    report.is_triangle_free = !triangle;
    report.girth_at_least_5 = !triangle && !four_cycle;
    return report;
}

std::vector<Vertex> SpanningTree::path_from_root(Vertex v) const
{
    std::vector<Vertex> path;
    for (Vertex x = v; x != kNoVertex; x = parent[x])
        path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

SpanningTree spanning_tree(const Graph& g, Vertex root, NeighbourOrder order)
{
    require(root < g.vertex_count(), "spanning_tree: root out of range");
    SpanningTree tree;
    tree.root = root;
    tree.parent.assign(g.vertex_count(), kNoVertex);
    std::vector<bool> seen(g.vertex_count(), false);
    seen[root] = true;
    tree.order.push_back(root);
    for (std::size_t head = 0; head < tree.order.size(); ++head) {
        Vertex u = tree.order[head];
        auto visit = [&](Vertex w) {
            if (!seen[w]) {
                seen[w] = true;
                tree.parent[w] = u;
                tree.order.push_back(w);
            }
        };
        auto nb = g.neighbours(u);
        if (order == NeighbourOrder::ascending)
            std::for_each(nb.begin(), nb.end(), visit);
        else
            std::for_each(nb.rbegin(), nb.rend(), visit);
    }
    return tree;
}

bool is_homomorphism(const Graph& g, const Graph& h, std::span<const Vertex> f)
{
    if (f.size() != g.vertex_count())
        throw InvalidInput("vertex map has " + std::to_string(f.size()) + " entries, expected " +
                           std::to_string(g.vertex_count()));
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] >= h.vertex_count())
            throw InvalidInput("vertex " + std::to_string(v) + " is mapped to " + std::to_string(f[v]) +
                               ", outside [0, " + std::to_string(h.vertex_count()) + ")");
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbours(u))
            if (u <= v && !h.adjacent(f[u], f[v]))
                return false;
    return true;
}

bool hom_adjacent(const Graph& g, const Graph& h, std::span<const Vertex> f, std::span<const Vertex> g_map)
{
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbours(u))
            if (!h.adjacent(f[u], g_map[v]))
                return false;
    return true;
}

std::vector<Vertex> shortest_walk(const Graph& h, Vertex a, Vertex b)
{
    require(a < h.vertex_count() && b < h.vertex_count(), "shortest_walk: endpoint out of range");
    if (a == b)
        return {a};
    std::vector<Vertex> parent(h.vertex_count(), kNoVertex);
    std::deque<Vertex> queue{a};
    parent[a] = a;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : h.neighbours(u)) {
            if (parent[w] != kNoVertex)
                continue;
            parent[w] = u;
            if (w == b) {
                std::vector<Vertex> walk{b};
                for (Vertex x = b; x != a; x = parent[x])
                    walk.push_back(parent[x]);
                std::reverse(walk.begin(), walk.end());
                return walk;
            }
            queue.push_back(w);
        }
    }
    return {};
}

} // namespace hrecol
