#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace hrecol {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

using Edge = std::pair<Vertex, Vertex>;

/// A vertex map G -> H, indexed by G-vertex.
using VertexMap = std::vector<Vertex>;

/// Finite undirected graph on vertices 0..n-1 with an explicit loop set.
///
/// Adjacency is stored as sorted, deduplicated neighbour lists (CSR). A loop
/// at v is represented by v appearing in its own neighbour list, so a single
/// `adjacent(u, v)` test covers both the edge and the loop case. Immutable
/// after construction.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list; (v, v) adds a loop. Duplicate edges are
    /// merged. Throws InvalidInput on out-of-range endpoints.
    Graph(std::size_t vertex_count, std::span<const Edge> edges, bool all_loops = false);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }

    /// Sorted neighbours of v, including v itself when v has a loop.
    std::span<const Vertex> neighbours(Vertex v) const noexcept
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    bool adjacent(Vertex u, Vertex v) const noexcept;
    bool has_loop(Vertex v) const noexcept { return adjacent(v, v); }
    bool is_reflexive() const noexcept;

    /// Number of neighbours other than v itself.
    std::size_t proper_degree(Vertex v) const noexcept;

    /// Each edge once as (u, v) with u <= v, in ascending order; loops included.
    std::vector<Edge> edges() const;

    /// Same vertex set and edges, with a loop added at every vertex.
    Graph with_all_loops() const;

    /// Subgraph induced by `vertices` (which must be distinct); vertex i of
    /// the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

struct HostReport {
    bool is_reflexive = false;
    bool is_triangle_free = false;
    bool girth_at_least_5 = false;
    std::vector<std::vector<Vertex>> components;
};

/// Checks the structural hypotheses the solver relies on. Loops are ignored
/// when looking for triangles and 4-cycles.
HostReport validate_host(const Graph& h);

/// Connected components, each sorted ascending, ordered by least vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Component index of every vertex, numbered as in components().
std::vector<std::size_t> component_ids(const Graph& g);

enum class NeighbourOrder { ascending, descending };

/// BFS spanning tree of the component of `root`.
struct SpanningTree {
    Vertex root = kNoVertex;
    std::vector<Vertex> parent; ///< kNoVertex for the root and for vertices outside the component
    std::vector<Vertex> order;  ///< BFS discovery order, root first

    bool contains(Vertex v) const { return v == root || parent[v] != kNoVertex; }

    /// Vertex sequence of the tree path root -> v.
    std::vector<Vertex> path_from_root(Vertex v) const;
};

SpanningTree spanning_tree(const Graph& g, Vertex root, NeighbourOrder order = NeighbourOrder::ascending);

/// Throws InvalidInput when f has the wrong size or an out-of-range image.
bool is_homomorphism(const Graph& g, const Graph& h, std::span<const Vertex> f);

/// Adjacency in Hom(G, H): f(u)g(v) is an edge of H for every edge uv of G,
/// loops included.
bool hom_adjacent(const Graph& g, const Graph& h, std::span<const Vertex> f, std::span<const Vertex> g_map);

/// Shortest (a, b)-walk in h by BFS with ascending-id neighbour order;
/// empty when b is unreachable from a.
std::vector<Vertex> shortest_walk(const Graph& h, Vertex a, Vertex b);

} // namespace hrecol
