#include "hrecol/generators.hpp"

#include "hrecol/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hrecol {

Graph reflexive_cycle(std::size_t n)
{
    require(n >= 3, "reflexive_cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph(n, edges, true);
}

Graph reflexive_path(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return Graph(n, edges, true);
}

Instance cycle_wrap(std::size_t g_len, std::size_t h_len, std::size_t shift)
{
    if (h_len < 4)
        throw InvalidInput("cycle-wrap: h-len must be at least 4 (C3 is a triangle)");
    if (g_len < h_len + 1)
        throw InvalidInput("cycle-wrap: g-len must exceed h-len");
    Instance inst;
    inst.g = reflexive_cycle(g_len);
    inst.h = reflexive_cycle(h_len);
    const std::size_t wraps = (g_len - 1) / h_len;
    inst.phi.assign(g_len, 0);
    for (std::size_t i = 0; i < wraps * h_len; ++i)
        inst.phi[i] = static_cast<Vertex>(i % h_len);
    inst.psi.resize(g_len);
    for (std::size_t i = 0; i < g_len; ++i)
        inst.psi[i] = inst.phi[(i + g_len - shift % g_len) % g_len];
    return inst;
}

namespace {

Graph figure_eight_host()
{
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}};
    return Graph(7, edges, true);
}

} // namespace

Instance figure_eight(FigureEightVariant variant)
{
    Instance inst;
    inst.g = reflexive_cycle(5);
    inst.h = figure_eight_host();
    inst.phi = {0, 1, 2, 3, 0};
    if (variant == FigureEightVariant::y_wrap)
        inst.psi = {0, 4, 5, 6, 0};
    else
        inst.psi = {0, 0, 1, 2, 3};
    return inst;
}

Instance c5_rotation()
{
    Instance inst;
    inst.g = reflexive_cycle(5);
    inst.h = reflexive_cycle(5);
    inst.phi = {0, 1, 2, 3, 4};
    inst.psi = {1, 2, 3, 4, 0};
    return inst;
}

Instance linked_squares()
{
    // G: vertex 0 shared; 1..7 and 8..14 complete the two 8-cycles.
    std::vector<Edge> g_edges;
    for (Vertex base : {0u, 7u}) {
        Vertex prev = 0;
        for (Vertex i = 1; i <= 7; ++i) {
            g_edges.emplace_back(prev, base + i);
            prev = base + i;
        }
        g_edges.emplace_back(prev, 0);
    }
    // H: connectors 0 and 9, squares 1,2,3,4 and 5,6,7,8.
    std::vector<Edge> h_edges{{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5},
                              {0, 1}, {0, 5}, {9, 3}, {9, 7}};
    Instance inst;
    inst.g = Graph(15, g_edges, true);
    inst.h = Graph(10, h_edges, true);
    inst.phi = {0, 1, 2, 3, 4, 1, 0, 0, 5, 6, 7, 8, 5, 0, 0};
    inst.psi = {9, 3, 4, 1, 2, 3, 9, 9, 7, 8, 5, 6, 7, 9, 9};
    return inst;
}

namespace {

Graph random_tree(Rng& rng, std::size_t n, bool reflexive = true)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> parent(0, i - 1);
        edges.emplace_back(static_cast<Vertex>(parent(rng)), static_cast<Vertex>(i));
    }
    return Graph(n, edges, reflexive);
}

Graph cycle_with_pendants(std::size_t cycle, std::size_t pendants)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cycle; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % cycle));
    Vertex prev = 0;
    for (std::size_t j = 0; j < pendants; ++j) {
        auto v = static_cast<Vertex>(cycle + j);
        edges.emplace_back(prev, v);
        prev = v;
    }
    return Graph(cycle + pendants, edges, true);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

} // namespace

Graph random_catalogue_host(Rng& rng, std::size_t max_vertices)
{
    require(max_vertices >= 1, "random_catalogue_host: need at least one vertex");
    enum Kind { c4, c5, c6, path, tree, c5_pendant, square_tail };
    std::vector<Kind> kinds{path, tree};
    // Hosts with a cycle are listed twice: forests make every instance YES.
    if (max_vertices >= 4)
        kinds.insert(kinds.end(), {c4, c4});
    if (max_vertices >= 5)
        kinds.insert(kinds.end(), {c5, c5});
    if (max_vertices >= 6)
        kinds.insert(kinds.end(), {c6, c6, c5_pendant, c5_pendant, square_tail, square_tail});

    switch (kinds[pick(rng, 0, kinds.size() - 1)]) {
    case c4: return reflexive_cycle(4);
    case c5: return reflexive_cycle(5);
    case c6: return reflexive_cycle(6);
    case path: return reflexive_path(pick(rng, 1, max_vertices));
    case tree: return random_tree(rng, pick(rng, 1, max_vertices));
    case c5_pendant: return cycle_with_pendants(5, 1);
    case square_tail: return cycle_with_pendants(4, 2);
    }
    return reflexive_path(1);
}

Graph random_triangle_free_host(Rng& rng, std::size_t n)
{
    require(n >= 1, "random_triangle_free_host: need at least one vertex");
    auto tree = random_tree(rng, n);
    auto edges = tree.edges();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges)
        adj[u][v] = adj[v][u] = true;

    const std::size_t extra = pick(rng, 0, n);
    for (std::size_t attempt = 0; attempt < 4 * extra + 4 && extra > 0; ++attempt) {
        Vertex u = static_cast<Vertex>(pick(rng, 0, n - 1));
        Vertex v = static_cast<Vertex>(pick(rng, 0, n - 1));
        if (u == v || adj[u][v])
            continue;
        bool common = false;
        for (std::size_t w = 0; w < n && !common; ++w)
            common = w != u && w != v && adj[u][w] && adj[v][w];
        if (common)
            continue;
        adj[u][v] = adj[v][u] = true;
        edges.emplace_back(u, v);
    }
    return Graph(n, edges, true);
}

std::optional<VertexMap> random_homomorphism(const Graph& g, const Graph& h, Rng& rng)
{
    const auto n = g.vertex_count();
    VertexMap f(n, kNoVertex);
    if (n == 0)
        return f;
    if (h.vertex_count() == 0)
        return std::nullopt;

    std::vector<std::vector<Vertex>> choices(n);
    std::vector<std::size_t> next(n, 0);
    std::vector<Vertex> colours(h.vertex_count());
    std::iota(colours.begin(), colours.end(), 0);

    std::size_t i = 0;
    choices[0] = colours;
    std::shuffle(choices[0].begin(), choices[0].end(), rng);
    while (true) {
        auto v = static_cast<Vertex>(i);
        bool placed = false;
        while (next[i] < choices[i].size()) {
            Vertex c = choices[i][next[i]++];
            bool ok = true;
            for (Vertex w : g.neighbours(v))
                if (w <= v && !h.adjacent(c, w == v ? c : f[w])) {
                    ok = false;
                    break;
                }
            if (ok) {
                f[v] = c;
                placed = true;
                break;
            }
        }
        if (placed) {
            if (++i == n)
                return f;
            choices[i] = colours;
            std::shuffle(choices[i].begin(), choices[i].end(), rng);
            next[i] = 0;
        } else {
            f[v] = kNoVertex;
            if (i == 0)
                return std::nullopt;
            --i;
        }
    }
}

VertexMap random_hom_walk(const Graph& g, const Graph& h, VertexMap f, std::size_t steps, Rng& rng)
{
    const auto n = g.vertex_count();
    if (n == 0)
        return f;
    for (std::size_t s = 0; s < steps; ++s) {
        auto v = static_cast<Vertex>(pick(rng, 0, n - 1));
        std::vector<Vertex> options;
        for (Vertex c = 0; c < h.vertex_count(); ++c) {
            if (c == f[v] || (g.has_loop(v) && !h.adjacent(f[v], c)))
                continue;
            bool ok = true;
            for (Vertex w : g.neighbours(v))
                ok = ok && h.adjacent(c, w == v ? c : f[w]);
            if (ok)
                options.push_back(c);
        }
        if (!options.empty())
            f[v] = options[pick(rng, 0, options.size() - 1)];
    }
    return f;
}

namespace {

/// Random G; when `cyclic` comes back true, 0, 1, ..., n-1 is a Hamiltonian cycle.
Graph random_pattern(Rng& rng, std::size_t n, bool reflexive, double loop_probability, bool& cyclic)
{
    std::vector<Edge> edges;
    cyclic = n >= 3 && coin(rng, 0.6);
    if (cyclic) {
        for (std::size_t i = 0; i < n; ++i)
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 2; j < n; ++j)
                if (!(i == 0 && j == n - 1) && coin(rng, 0.1))
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    } else {
        const double p = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (coin(rng, p))
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    if (!reflexive)
        for (std::size_t i = 0; i < n; ++i)
            if (loop_probability > 0 && coin(rng, loop_probability))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i));
    return Graph(n, edges, reflexive);
}

/// A shortest cycle of H (loops ignored), as a vertex list; empty for forests.
std::vector<Vertex> shortest_cycle(const Graph& h)
{
    std::vector<Vertex> best;
    const auto n = h.vertex_count();
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> parent(n, kNoVertex), depth(n, kNoVertex);
        std::vector<Vertex> queue{s};
        depth[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex u = queue[qi];
            for (Vertex w : h.neighbours(u)) {
                if (w == u || w == parent[u])
                    continue;
                if (depth[w] == kNoVertex) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                    continue;
                }
                // Non-tree edge: the two tree paths close a cycle if they only share s.
                std::vector<Vertex> a{u}, b{w};
                while (a.back() != s)
                    a.push_back(parent[a.back()]);
                while (b.back() != s)
                    b.push_back(parent[b.back()]);
                if (a.size() >= 2 && b.size() >= 2 && a[a.size() - 2] == b[b.size() - 2])
                    continue;
                std::vector<Vertex> cycle(a.rbegin(), a.rend());
                cycle.insert(cycle.end(), b.begin(), b.end() - 1);
                if (best.empty() || cycle.size() < best.size())
                    best = std::move(cycle);
            }
        }
    }
    return best;
}

/// Lays `cycle` (traversed `wraps` times in a random direction from a random
/// start) around the Hamiltonian cycle 0..n-1 of G, parking the leftover
/// vertices at random positions. nullopt if a chord breaks the map.
std::optional<VertexMap> wrap_map(const Graph& g, const Graph& h, const std::vector<Vertex>& cycle, Rng& rng)
{
    const auto n = g.vertex_count();
    const auto k = cycle.size();
    if (k == 0 || n < k)
        return std::nullopt;
    const std::size_t wraps = pick(rng, 1, n / k);
    const std::size_t start = pick(rng, 0, k - 1);
    const bool forward = coin(rng, 0.5);
    std::vector<bool> park(n, false);
    for (std::size_t i = 0; i < n - k * wraps; ++i)
        park[pick(rng, 0, n - 1)] = true;

    VertexMap f(n);
    std::size_t pos = 0;
    std::size_t moves = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && !park[i] && moves < k * wraps - 1) {
            ++pos;
            ++moves;
        }
        std::size_t j = (start + (forward ? pos : k * wraps - pos)) % k;
        f[i] = cycle[j];
    }
    if (moves + 1 != k * wraps || !is_homomorphism(g, h, f))
        return std::nullopt;
    return f;
}

VertexMap pick_map(const Graph& g, const Graph& h, bool cyclic, const std::vector<Vertex>& cycle, Rng& rng)
{
    if (cyclic && !cycle.empty() && coin(rng, 0.6))
        if (auto f = wrap_map(g, h, cycle, rng))
            return *f;
    return *random_homomorphism(g, h, rng);
}

void choose_maps(Instance& inst, bool cyclic, Rng& rng)
{
    auto cycle = shortest_cycle(inst.h);
    inst.phi = pick_map(inst.g, inst.h, cyclic, cycle, rng);
    if (coin(rng, 0.5))
        inst.psi = pick_map(inst.g, inst.h, cyclic, cycle, rng);
    else
        inst.psi = random_hom_walk(inst.g, inst.h, inst.phi, pick(rng, 1, 4 * inst.g.vertex_count()), rng);
}

} // namespace

Instance random_instance(std::uint64_t seed, std::size_t gv, std::size_t hv)
{
    require(gv >= 1 && hv >= 1, "random_instance: sizes must be positive");
    Rng rng(seed);
    Instance inst;
    inst.h = random_catalogue_host(rng, hv);
    bool cyclic = false;
    inst.g = random_pattern(rng, coin(rng, 0.5) ? gv : pick(rng, 1, gv), true, 0.0, cyclic);
    choose_maps(inst, cyclic, rng);
    return inst;
}

Instance random_girth5_instance(std::uint64_t seed, std::size_t gv, double loop_probability)
{
    require(gv >= 1, "random_girth5_instance: size must be positive");
    Rng rng(seed);
    Instance inst;
    inst.mode = Mode::girth5;
    switch (pick(rng, 0, 2)) {
    case 0: inst.h = reflexive_cycle(5); break;
    case 1: inst.h = reflexive_cycle(6); break;
    default: inst.h = random_tree(rng, pick(rng, 2, 6)); break;
    }
    bool cyclic = false;
    inst.g = random_pattern(rng, coin(rng, 0.5) ? gv : pick(rng, 1, gv), false, loop_probability, cyclic);
    choose_maps(inst, cyclic, rng);
    return inst;
}

} // namespace hrecol
