#pragma once

// Test-only reference implementations. Deliberately naive and independent
// of the library's algorithms.

#include "hrecol/generators.hpp"
#include "hrecol/graph.hpp"
#include "hrecol/walk.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace brute {

using hrecol::Graph;
using hrecol::Rng;
using hrecol::Vertex;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random walk with `edges` steps; each step stays or moves to a uniform neighbour.
inline std::vector<Vertex> random_walk(const Graph& h, std::size_t edges, Rng& rng)
{
    std::vector<Vertex> w{static_cast<Vertex>(uniform(rng, 0, h.vertex_count() - 1))};
    for (std::size_t i = 0; i < edges; ++i) {
        auto nb = h.neighbours(w.back());
        w.push_back(nb[uniform(rng, 0, nb.size() - 1)]);
    }
    return w;
}

/// Applies shortening moves at uniformly random applicable positions until
/// none applies: drop one of two equal neighbours, or collapse a,b,a to a.
inline std::vector<Vertex> rewrite_to_fixpoint(std::vector<Vertex> w, Rng& rng)
{
    while (true) {
        std::vector<std::pair<std::size_t, int>> options;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == w[i + 1])
                options.emplace_back(i, 1);
        for (std::size_t i = 0; i + 2 < w.size(); ++i)
            if (w[i] == w[i + 2] && w[i] != w[i + 1])
                options.emplace_back(i, 2);
        if (options.empty())
            return w;
        auto [i, kind] = options[uniform(rng, 0, options.size() - 1)];
        auto at = w.begin() + static_cast<std::ptrdiff_t>(i);
        if (kind == 1)
            w.erase(at);
        else
            w.erase(at + 1, at + 3);
    }
}

/// Applies `moves` random lengthening moves (duplicate a vertex, or insert a
/// detour a -> b -> a).
inline std::vector<Vertex> expand(const Graph& h, std::vector<Vertex> w, std::size_t moves, Rng& rng)
{
    for (std::size_t m = 0; m < moves; ++m) {
        std::size_t i = uniform(rng, 0, w.size() - 1);
        Vertex a = w[i];
        if (uniform(rng, 0, 1) == 0) {
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), a);
        } else {
            auto nb = h.neighbours(a);
            Vertex b = nb[uniform(rng, 0, nb.size() - 1)];
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(i + 1), {b, a});
        }
    }
    return w;
}

inline bool has_triangle(const Graph& g)
{
    const auto n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
                    return true;
    return false;
}

inline bool has_four_cycle(const Graph& g)
{
    const auto n = g.vertex_count();
    std::vector<Vertex> p(4);
    std::function<bool(std::size_t)> extend = [&](std::size_t k) {
        if (k == 4)
            return g.adjacent(p[3], p[0]);
        for (Vertex v = 0; v < n; ++v) {
            if (std::find(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k), v) != p.begin() + static_cast<std::ptrdiff_t>(k))
                continue;
            if (k > 0 && !g.adjacent(p[k - 1], v))
                continue;
            p[k] = v;
            if (extend(k + 1))
                return true;
        }
        return false;
    };
    return extend(0);
}

/// Vertices lying on some closed walk of G whose phi-image is cyclically
/// reduced. Such walks are the cycles of the digraph on ordered G-edges
/// (a, b) with phi(a) != phi(b), with arcs (a, b) -> (b, c) when
/// phi(b) != phi(c) and phi(a) != phi(c).
inline std::vector<bool> tight_vertices(const Graph& g, const std::vector<Vertex>& phi)
{
    std::vector<std::pair<Vertex, Vertex>> states;
    for (Vertex a = 0; a < g.vertex_count(); ++a)
        for (Vertex b : g.neighbours(a))
            if (phi[a] != phi[b])
                states.emplace_back(a, b);
    const auto m = states.size();
    auto arc = [&](std::size_t i, std::size_t j) {
        auto [a, b] = states[i];
        auto [b2, c] = states[j];
        return b == b2 && phi[a] != phi[c];
    };
    // reach[i][j]: j reachable from i by at least one arc (Floyd-Warshall closure).
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            reach[i][j] = arc(i, j);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < m; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;
    std::vector<bool> out(g.vertex_count(), false);
    for (std::size_t i = 0; i < m; ++i)
        if (reach[i][i])
            out[states[i].first] = true;
    return out;
}

/// The colours each vertex passes through along a sequence of colourings.
inline std::vector<hrecol::Walk> traces(const std::vector<hrecol::VertexMap>& path)
{
    const auto n = path.front().size();
    std::vector<hrecol::Walk> out;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Vertex> seq{path.front()[v]};
        for (const auto& f : path)
            if (f[v] != seq.back())
                seq.push_back(f[v]);
        out.emplace_back(std::move(seq));
    }
    return out;
}

} // namespace brute
