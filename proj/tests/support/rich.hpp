#pragma once

// Larger random instances built to reach the later stages of the base-walk
// search: G is one or two cycles (glued at a vertex or joined by an edge)
// with an optional tail holding vertex 0, and phi, psi lay random
// non-backtracking closed walks along each cycle of G.

#include "hrecol/generators.hpp"
#include "hrecol/solver.hpp"

#include "support/brute.hpp"

#include <optional>

namespace brute {

using hrecol::Edge;
using hrecol::Instance;
using hrecol::VertexMap;

inline Graph rich_host(Rng& rng)
{
    std::vector<Edge> e;
    std::size_t n = 0;
    switch (uniform(rng, 0, 5)) {
    case 0: // two squares joined through two connectors
        e = {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5}, {0, 1}, {0, 5}, {9, 3}, {9, 7}};
        n = 10;
        break;
    case 1: // two squares sharing a vertex
        e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}};
        n = 7;
        break;
    case 2: // C5 with a pendant path of length 2
        e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}};
        n = 7;
        break;
    case 3: // K_{2,3}
        e = {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
        n = 5;
        break;
    case 4: // C6 with two pendants
        e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {3, 7}};
        n = 8;
        break;
    default: // square and pentagon sharing an edge
        e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 1}};
        n = 7;
        break;
    }
    return Graph(n, e, true);
}

/// Random closed walk of `len` edges at colour c: mostly non-backtracking
/// steps with occasional stays. nullopt when the walk fails to close.
inline std::optional<std::vector<Vertex>> closed_walk_at(const Graph& h, Vertex c, std::size_t len, Rng& rng)
{
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Vertex> w{c};
        Vertex prev = hrecol::kNoVertex;
        for (std::size_t i = 1; i < len; ++i) {
            Vertex x = w.back();
            if (uniform(rng, 0, 6) == 0) {
                w.push_back(x);
                continue;
            }
            std::vector<Vertex> options;
            for (Vertex y : h.neighbours(x))
                if (y != x && y != prev)
                    options.push_back(y);
            if (options.empty())
                options.push_back(x);
            Vertex y = options[uniform(rng, 0, options.size() - 1)];
            prev = x;
            w.push_back(y);
        }
        if (h.adjacent(w.back(), c))
            return w;
    }
    return std::nullopt;
}

struct RichShape {
    Graph g;
    std::size_t tail = 0;                    // vertices 0..tail-1, vertex tail-1 attached to `tail`
    std::vector<std::vector<Vertex>> cycles; // each listed in cyclic order, first vertex shared/attachment
};

inline RichShape rich_shape(Rng& rng)
{
    RichShape s;
    s.tail = uniform(rng, 0, 2);
    std::vector<Edge> e;
    Vertex next = 0;
    for (std::size_t i = 0; i < s.tail; ++i, ++next)
        if (i > 0)
            e.emplace_back(next - 1, next);
    const std::size_t count = uniform(rng, 1, 2);
    Vertex anchor = next;
    for (std::size_t c = 0; c < count; ++c) {
        std::size_t len = uniform(rng, 4, 8);
        std::vector<Vertex> cyc;
        if (c == 0 || uniform(rng, 0, 1) == 0) {
            cyc.push_back(c == 0 ? next++ : anchor); // glued at the anchor
        } else {
            cyc.push_back(next++); // joined to the anchor by an edge
            e.emplace_back(anchor, cyc.back());
        }
        while (cyc.size() < len)
            cyc.push_back(next++);
        for (std::size_t i = 0; i < len; ++i)
            e.emplace_back(cyc[i], cyc[(i + 1) % len]);
        s.cycles.push_back(cyc);
    }
    if (s.tail > 0)
        e.emplace_back(static_cast<Vertex>(s.tail - 1), anchor);
    s.g = Graph(next, e, true);
    return s;
}

inline std::optional<VertexMap> rich_map(const RichShape& s, const Graph& h, Rng& rng)
{
    VertexMap f(s.g.vertex_count(), hrecol::kNoVertex);
    f[s.cycles[0][0]] = static_cast<Vertex>(uniform(rng, 0, h.vertex_count() - 1));
    for (const auto& cyc : s.cycles) {
        if (f[cyc[0]] == hrecol::kNoVertex) {
            // Joined by an edge: start next to the anchor's colour.
            Vertex anchor = s.cycles[0][0];
            auto nb = h.neighbours(f[anchor]);
            f[cyc[0]] = nb[uniform(rng, 0, nb.size() - 1)];
        }
        auto w = closed_walk_at(h, f[cyc[0]], cyc.size(), rng);
        if (!w)
            return std::nullopt;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            f[cyc[i]] = (*w)[i];
    }
    // Tail: a random walk back from the anchor.
    Vertex at = f[s.cycles[0][0]];
    for (std::size_t i = s.tail; i-- > 0;) {
        auto nb = h.neighbours(at);
        at = nb[uniform(rng, 0, nb.size() - 1)];
        f[i] = at;
    }
    if (!hrecol::is_homomorphism(s.g, h, f))
        return std::nullopt;
    return f;
}

inline std::optional<Instance> rich_instance(std::uint64_t seed)
{
    Rng rng(seed);
    Instance inst;
    inst.h = rich_host(rng);
    auto shape = rich_shape(rng);
    inst.g = shape.g;
    auto phi = rich_map(shape, inst.h, rng);
    if (!phi)
        return std::nullopt;
    inst.phi = *phi;
    if (uniform(rng, 0, 3) == 0) {
        inst.psi = hrecol::random_hom_walk(inst.g, inst.h, inst.phi, uniform(rng, 1, 40), rng);
    } else {
        auto psi = rich_map(shape, inst.h, rng);
        if (!psi)
            return std::nullopt;
        inst.psi = *psi;
    }
    return inst;
}

} // namespace brute
