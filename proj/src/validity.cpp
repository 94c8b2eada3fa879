#include "hrecol/validity.hpp"

#include "hrecol/errors.hpp"

#include <algorithm>
#include <array>

namespace hrecol {

std::size_t WalkSystem::total_length() const
{
    std::size_t total = 0;
    for (const auto& w : walks)
        total += w.length();
    return total;
}

Walk image_walk(std::span<const Vertex> map, std::span<const Vertex> g_sequence)
{
    std::vector<Vertex> v;
    v.reserve(g_sequence.size());
    for (Vertex x : g_sequence)
        v.push_back(map[x]);
    return Walk(std::move(v));
}

namespace {

Walk step(Vertex a, Vertex b)
{
    return Walk(std::vector<Vertex>{a, b});
}

/// reduce(X . Y . rev(X)) without materializing the concatenation twice.
ReducedWalk conjugate(const Walk& x, const Walk& y)
{
    return reduce_walk(concat(concat(x, y), reverse(x)));
}

Walk power(const Walk& closed, int d)
{
    if (d == 0)
        return Walk::constant(closed.first());
    Walk unit = d > 0 ? closed : reverse(closed);
    Walk result = unit;
    for (int i = 1; i < (d > 0 ? d : -d); ++i)
        result = concat(result, unit);
    return result;
}

} // namespace

bool edge_preserved(Vertex u, Vertex v, const Walk& walk_u, const Walk& walk_v, std::span<const Vertex> phi,
                    std::span<const Vertex> psi)
{
    require(walk_v.first() == phi[v] && walk_v.last() == psi[v], "edge_preserved: W_v is not a (phi(v), psi(v))-walk");
    auto transported = reduce_walk(concat(concat(step(phi[u], phi[v]), walk_v), step(psi[v], psi[u])));
    return transported == reduce_walk(walk_u);
}

bool closed_walk_preserved(std::span<const Vertex> cycle, const Walk& base_walk, std::span<const Vertex> phi,
                           std::span<const Vertex> psi)
{
    require(!cycle.empty() && cycle.front() == cycle.back(), "closed_walk_preserved: walk is not closed");
    require(base_walk.first() == phi[cycle.front()] && base_walk.last() == psi[cycle.front()],
            "closed_walk_preserved: base walk has the wrong endpoints");
    return reduce_walk(image_walk(phi, cycle)) == conjugate(base_walk, image_walk(psi, cycle));
}

ValidityOutcome generate_system(const Graph& g, const Graph& h, std::span<const Vertex> phi,
                                std::span<const Vertex> psi, Vertex root, const ReducedWalk& root_walk,
                                NeighbourOrder order)
{
    (void)h;
    const auto n = g.vertex_count();
    require(root < n, "generate_system: root out of range");
    require(root_walk.first() == phi[root] && root_walk.last() == psi[root],
            "generate_system: root walk is not a (phi(r), psi(r))-walk");
    auto tree = spanning_tree(g, root, order);
    require(tree.order.size() == n, "generate_system: G is not connected");

    std::vector<std::optional<ReducedWalk>> built(n);
    built[root] = root_walk;
    for (std::size_t i = 1; i < tree.order.size(); ++i) {
        Vertex v = tree.order[i];
        Vertex u = tree.parent[v];
        built[v] = reduce_walk(concat(concat(step(phi[v], phi[u]), *built[u]), step(psi[u], psi[v])));
    }

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : g.neighbours(u)) {
            if (v <= u || tree.parent[v] == u || tree.parent[u] == v)
                continue;
            if (!edge_preserved(u, v, *built[u], *built[v], phi, psi)) {
                auto cycle = tree.path_from_root(u);
                auto back = tree.path_from_root(v);
                cycle.insert(cycle.end(), back.rbegin(), back.rend());
                return InvalidityWitness{std::move(cycle)};
            }
        }
    }

    WalkSystem system;
    system.root = root;
    system.walks.reserve(n);
    for (auto& w : built)
        system.walks.push_back(std::move(*w));
    return system;
}

std::optional<int> stagger_offset(const Walk& a, const Walk& b)
{
    const auto la = static_cast<long>(a.vertices().size());
    const auto lb = static_cast<long>(b.vertices().size());
    for (int s : {0, 1, -1}) {
        bool ok = true;
        for (long i = std::max(0L, static_cast<long>(s)); ok && i < std::min(la, lb + s); ++i)
            ok = a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i - s)];
        if (ok)
            return s;
    }
    return std::nullopt;
}

bool is_staggered(const Graph& g, const WalkSystem& system)
{
    for (auto [u, v] : g.edges())
        if (u != v && !stagger_offset(system.walks[u], system.walks[v]))
            return false;
    return true;
}

namespace {

/// The walks W with [phi(C)] = [beta_W(psi(C))], all of the form
/// rho^d . w0 where rho = T . sqrt(A_f) . rev(T) is the based primitive root.
struct CandidateFamily {
    ReducedWalk tail;  // T
    Walk root_cycle;   // sqrt(A_f) as a closed walk at the start of the core
    Walk based_root;   // rho
    ReducedWalk w0;    // reduce(T . I . rev(S))

    ReducedWalk member(int d) const { return reduce_walk(concat(power(based_root, d), w0)); }
};

struct FamilyOrMismatch {
    std::optional<CandidateFamily> family;
    CyclicWord phi_core, psi_core;
};

FamilyOrMismatch family_for(std::span<const Vertex> cycle, std::span<const Vertex> phi, std::span<const Vertex> psi)
{
    auto a = free_decomposition(image_walk(phi, cycle));
    auto b = free_decomposition(image_walk(psi, cycle));
    FamilyOrMismatch out{std::nullopt, a.core, b.core};
    require(!(a.contractible() && b.contractible()), "witness cycle is contractible under both maps");
    if (a.contractible() || b.contractible())
        return out;
    auto k = shift_match(a.core, b.core);
    if (!k)
        return out;

    auto root = primitive_root(a.core).closed_walk();
    auto based_root = concat(concat(a.tail, root), reverse(a.tail));
    auto w0 = reduce_walk(concat(concat(a.tail, core_prefix(a.core, *k)), reverse(b.tail)));
    out.family = CandidateFamily{a.tail, std::move(root), std::move(based_root), std::move(w0)};
    return out;
}

/// Exponent d with [phi(C')] = [beta_{rho^d . w0}(psi(C'))], searched over
/// the range outside which the conjugate rho^d . b . rho^-d is provably
/// longer than phi(C'). At most one d can match unless every d does.
std::optional<int> exact_exponent(const CandidateFamily& fam, std::span<const Vertex> second,
                                  std::span<const Vertex> phi, std::span<const Vertex> psi)
{
    // Move everything to the start of the core so the root is cyclically
    // reduced at the basepoint.
    auto b = conjugate(fam.w0, image_walk(psi, second));
    auto rev_tail = reverse(fam.tail);
    auto h = conjugate(rev_tail, b);
    auto k = conjugate(rev_tail, image_walk(phi, second));
    const std::size_t period = fam.root_cycle.length();
    const int bound = static_cast<int>((k.length() + 2 * h.length()) / period) + 3;

    for (int sign : {1, -1}) {
        Walk g = sign > 0 ? fam.root_cycle : reverse(fam.root_cycle);
        ReducedWalk x = h;
        for (int d = 1; d <= bound; ++d) {
            x = conjugate(g, x);
            if (x == k)
                return sign * d;
        }
    }
    return std::nullopt;
}

struct Candidate {
    ReducedWalk walk;
    ValidityOutcome outcome;
};

} // namespace

BaseWalkSearch search_base_walk(const Graph& g, const Graph& h, std::span<const Vertex> phi,
                                std::span<const Vertex> psi, Vertex root)
{
    BaseWalkSearch result;
    auto succeed = [&](ReducedWalk w, WalkSystem s, int stage) {
        result.walk = std::move(w);
        result.system = std::move(s);
        result.stage = stage;
        result.failure = BaseWalkFailure::none;
        return result;
    };
    auto fail = [&](BaseWalkFailure why, int stage) {
        result.failure = why;
        result.stage = stage;
        return result;
    };

    auto shortest = shortest_walk(h, phi[root], psi[root]);
    if (shortest.empty())
        return fail(BaseWalkFailure::colours_disconnected, 1);
    auto first = reduce_walk(Walk(std::move(shortest)));
    auto outcome = generate_system(g, h, phi, psi, root, first);
    if (auto* s = std::get_if<WalkSystem>(&outcome))
        return succeed(std::move(first), std::move(*s), 1);
    result.cycle = std::get<InvalidityWitness>(outcome).cycle;

    auto from_c = family_for(result.cycle, phi, psi);
    if (!from_c.family) {
        result.phi_core = from_c.phi_core;
        result.psi_core = from_c.psi_core;
        return fail(BaseWalkFailure::class_mismatch, 2);
    }

    // Shortest valid candidate, ties by generation order.
    auto try_family = [&](const CandidateFamily& fam, std::vector<Candidate>& tried) -> std::optional<std::size_t> {
        std::optional<std::size_t> best;
        for (int d : {-1, 0, 1}) {
            auto w = fam.member(d);
            auto o = generate_system(g, h, phi, psi, root, w);
            tried.push_back({std::move(w), std::move(o)});
            const auto& c = tried.back();
            if (std::holds_alternative<WalkSystem>(c.outcome) &&
                (!best || c.walk.length() < tried[*best].walk.length()))
                best = tried.size() - 1;
        }
        return best;
    };

    std::vector<Candidate> tried;
    if (auto best = try_family(*from_c.family, tried))
        return succeed(tried[*best].walk, std::get<WalkSystem>(tried[*best].outcome), 3);

    // tried[1] is the d = 0 candidate.
    result.second_cycle = std::get<InvalidityWitness>(tried[1].outcome).cycle;
    auto from_second = family_for(result.second_cycle, phi, psi);
    if (!from_second.family) {
        result.cycle = result.second_cycle;
        result.second_cycle.clear();
        result.phi_core = from_second.phi_core;
        result.psi_core = from_second.psi_core;
        return fail(BaseWalkFailure::class_mismatch, 4);
    }
    tried.clear();
    if (auto best = try_family(*from_second.family, tried))
        return succeed(tried[*best].walk, std::get<WalkSystem>(tried[*best].outcome), 4);

    if (auto d = exact_exponent(*from_c.family, result.second_cycle, phi, psi)) {
        auto w = from_c.family->member(*d);
        auto o = generate_system(g, h, phi, psi, root, w);
        if (auto* s = std::get_if<WalkSystem>(&o))
            return succeed(std::move(w), std::move(*s), 5);
    }
    return fail(BaseWalkFailure::no_candidate, 5);
}

std::optional<ReducedWalk> find_valid_base_walk(const Graph& g, const Graph& h, std::span<const Vertex> phi,
                                                std::span<const Vertex> psi, Vertex root)
{
    return search_base_walk(g, h, phi, psi, root).walk;
}

} // namespace hrecol
