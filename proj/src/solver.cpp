#include "hrecol/solver.hpp"

#include "hrecol/errors.hpp"
#include "hrecol/validity.hpp"

#include <algorithm>
#include <thread>

namespace hrecol {

std::string to_string(ObstructionKind kind)
{
    switch (kind) {
    case ObstructionKind::no_valid_walk: return "no-valid-walk";
    case ObstructionKind::free_class_mismatch: return "free-class-mismatch";
    case ObstructionKind::frozen_mismatch: return "frozen-mismatch";
    case ObstructionKind::unrealizable: return "unrealizable";
    }
    return "unknown";
}

std::optional<ObstructionKind> obstruction_kind_from_string(const std::string& s)
{
    for (auto k : {ObstructionKind::no_valid_walk, ObstructionKind::free_class_mismatch,
                   ObstructionKind::frozen_mismatch, ObstructionKind::unrealizable})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

void validate_instance(const Instance& inst)
{
    if (!is_homomorphism(inst.g, inst.h, inst.phi))
        throw InvalidInput("phi is not a homomorphism G -> H");
    if (!is_homomorphism(inst.g, inst.h, inst.psi))
        throw InvalidInput("psi is not a homomorphism G -> H");
    auto report = validate_host(inst.h);
    if (!report.is_reflexive)
        throw InvalidInput("H must be reflexive");
    if (inst.mode == Mode::reflexive) {
        if (!inst.g.is_reflexive())
            throw InvalidInput("reflexive mode requires every vertex of G to have a loop");
        if (!report.is_triangle_free)
            throw InvalidInput("H contains a triangle");
    } else if (!report.girth_at_least_5) {
        throw InvalidInput("girth5 mode requires H to have girth at least 5");
    }
}

Girth5Reduction preprocess_girth5(const Instance& inst)
{
    require(inst.mode == Mode::girth5, "preprocess_girth5: instance is not in girth5 mode");
    validate_instance(inst);

    Girth5Reduction out;
    out.reflexive.g = inst.g.with_all_loops();
    out.reflexive.h = inst.h;
    out.reflexive.phi = inst.phi;
    out.reflexive.psi = inst.psi;
    out.reflexive.mode = Mode::reflexive;

    for (Vertex v = 0; v < inst.g.vertex_count(); ++v) {
        if (inst.g.proper_degree(v) != 0 || inst.phi[v] == inst.psi[v])
            continue;
        if (!inst.g.has_loop(v)) {
            out.prefix.push_back({v, inst.psi[v]});
        } else {
            auto walk = shortest_walk(inst.h, inst.phi[v], inst.psi[v]);
            if (walk.empty()) {
                Obstruction obs;
                obs.kind = ObstructionKind::no_valid_walk;
                obs.root = v;
                out.obstruction = std::move(obs);
                return out;
            }
            for (std::size_t i = 1; i < walk.size(); ++i)
                out.prefix.push_back({v, walk[i]});
        }
        out.reflexive.phi[v] = inst.psi[v];
    }
    return out;
}

namespace {

/// One connected component of G, relabelled to 0..k-1 in ascending order.
struct ComponentView {
    std::vector<Vertex> vertices; // local -> global
    Graph g;
    VertexMap phi, psi;

    std::vector<Vertex> globalize(std::span<const Vertex> local) const
    {
        std::vector<Vertex> out;
        out.reserve(local.size());
        for (Vertex v : local)
            out.push_back(vertices[v]);
        return out;
    }
};

ComponentView make_view(const Instance& inst, std::vector<Vertex> vertices)
{
    ComponentView view;
    view.g = inst.g.induced(vertices);
    for (Vertex v : vertices) {
        view.phi.push_back(inst.phi[v]);
        view.psi.push_back(inst.psi[v]);
    }
    view.vertices = std::move(vertices);
    return view;
}

struct ComponentResult {
    bool yes = false;
    std::vector<Move> moves;
    std::optional<Obstruction> obstruction;
};

ComponentResult solve_component(const ComponentView& c, const Graph& h)
{
    ComponentResult out;
    auto yes = [&](const std::vector<Move>& local) {
        out.yes = true;
        out.moves.reserve(local.size());
        for (auto m : local)
            out.moves.push_back({c.vertices[m.vertex], m.colour});
        return out;
    };
    auto no = [&](Obstruction obs) {
        out.obstruction = std::move(obs);
        return out;
    };

    const Vertex root = 0;
    auto search = search_base_walk(c.g, h, c.phi, c.psi, root);
    if (!search.walk) {
        Obstruction obs;
        obs.kind = search.failure == BaseWalkFailure::class_mismatch ? ObstructionKind::free_class_mismatch
                                                                      : ObstructionKind::no_valid_walk;
        obs.root = c.vertices[root];
        obs.cycle = c.globalize(search.cycle);
        obs.second_cycle = c.globalize(search.second_cycle);
        obs.phi_core = search.phi_core.linear();
        obs.psi_core = search.psi_core.linear();
        return no(std::move(obs));
    }

    auto first = schedule(c.g, h, *search.system);
    if (auto* moves = std::get_if<std::vector<Move>>(&first))
        return yes(*moves);

    // Every vertex of a tight walk is frozen for the whole Hom-component.
    const auto tight = std::get<TightWalkWitness>(first).cycle;
    for (std::size_t i = 0; i + 1 < tight.size(); ++i) {
        Vertex v = tight[i];
        if (c.phi[v] != c.psi[v]) {
            Obstruction obs;
            obs.kind = ObstructionKind::frozen_mismatch;
            obs.cycle = c.globalize(tight);
            obs.vertex = c.vertices[v];
            return no(std::move(obs));
        }
    }

    const Vertex fixed_root = *std::min_element(tight.begin(), tight.end());
    auto forced = generate_system(c.g, h, c.phi, c.psi, fixed_root, ReducedWalk::constant(c.phi[fixed_root]));
    if (auto* bad = std::get_if<InvalidityWitness>(&forced)) {
        Obstruction obs;
        obs.kind = ObstructionKind::no_valid_walk;
        obs.root = c.vertices[fixed_root];
        obs.cycle = c.globalize(bad->cycle);
        obs.tight_cycle = c.globalize(tight);
        return no(std::move(obs));
    }

    auto second = schedule(c.g, h, std::get<WalkSystem>(forced));
    if (auto* moves = std::get_if<std::vector<Move>>(&second))
        return yes(*moves);

    Obstruction obs;
    obs.kind = ObstructionKind::unrealizable;
    obs.root = c.vertices[fixed_root];
    obs.cycle = c.globalize(std::get<TightWalkWitness>(second).cycle);
    obs.tight_cycle = c.globalize(tight);
    return no(std::move(obs));
}

Verdict solve_reflexive(const Instance& inst, const SolveOptions& options)
{
    auto comps = components(inst.g);
    std::vector<ComponentResult> results(comps.size());
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < comps.size(); i += stride)
            results[i] = solve_component(make_view(inst, comps[i]), inst.h);
    };

    const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(comps.size(), 1));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(work, t, threads);
    }

    Verdict verdict;
    verdict.yes = true;
    for (auto& r : results) {
        if (!r.yes) {
            verdict.yes = false;
            verdict.moves.clear();
            verdict.obstruction = std::move(r.obstruction);
            return verdict;
        }
        verdict.moves.insert(verdict.moves.end(), r.moves.begin(), r.moves.end());
    }
    return verdict;
}

} // namespace

Verdict solve(const Instance& inst, const SolveOptions& options)
{
    validate_instance(inst);
    if (inst.mode == Mode::reflexive)
        return solve_reflexive(inst, options);

    auto reduced = preprocess_girth5(inst);
    if (reduced.obstruction) {
        Verdict v;
        v.obstruction = std::move(reduced.obstruction);
        return v;
    }
    auto verdict = solve_reflexive(reduced.reflexive, options);
    if (verdict.yes)
        verdict.moves.insert(verdict.moves.begin(), reduced.prefix.begin(), reduced.prefix.end());
    return verdict;
}

namespace {

WitnessCheck failure(std::size_t step, std::string reason)
{
    return {false, step, std::move(reason)};
}

/// Checks recolouring v from current[v] to c, leaving `current` unchanged.
std::optional<std::string> step_problem(const Instance& inst, std::span<const Vertex> current, Vertex v, Vertex c)
{
    if (v >= inst.g.vertex_count() || c >= inst.h.vertex_count())
        return "vertex or colour out of range";
    if (current[v] == c)
        return "move does not change the colour";
    if (inst.g.has_loop(v) && !inst.h.adjacent(current[v], c))
        return "looped vertex moves to a non-neighbour of its colour";
    for (Vertex w : inst.g.neighbours(v))
        if (!inst.h.adjacent(c, w == v ? c : current[w]))
            return "recolouring breaks the edge to vertex " + std::to_string(w);
    return std::nullopt;
}

std::optional<std::string> start_problem(const Instance& inst)
{
    try {
        if (!is_homomorphism(inst.g, inst.h, inst.phi) || !is_homomorphism(inst.g, inst.h, inst.psi))
            return "phi or psi is not a homomorphism";
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return std::nullopt;
}

} // namespace

WitnessCheck verify_witness(const Instance& inst, std::span<const Move> moves)
{
    if (auto p = start_problem(inst))
        return failure(0, *p);
    VertexMap current = inst.phi;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (auto p = step_problem(inst, current, moves[i].vertex, moves[i].colour))
            return failure(i, *p);
        current[moves[i].vertex] = moves[i].colour;
    }
    if (current != inst.psi)
        return failure(moves.size(), "final colouring differs from psi");
    return {true, moves.size(), {}};
}

WitnessCheck verify_colouring_sequence(const Instance& inst, std::span<const VertexMap> colourings)
{
    if (auto p = start_problem(inst))
        return failure(0, *p);
    if (colourings.empty() || colourings.front() != inst.phi)
        return failure(0, "sequence does not start at phi");
    for (std::size_t i = 0; i + 1 < colourings.size(); ++i) {
        const auto& a = colourings[i];
        const auto& b = colourings[i + 1];
        if (b.size() != a.size())
            return failure(i, "colouring has the wrong size");
        std::vector<Vertex> changed;
        for (Vertex v = 0; v < a.size(); ++v)
            if (a[v] != b[v])
                changed.push_back(v);
        if (changed.size() != 1)
            return failure(i, "step changes " + std::to_string(changed.size()) + " vertices");
        if (auto p = step_problem(inst, a, changed[0], b[changed[0]]))
            return failure(i, *p);
    }
    if (colourings.back() != inst.psi)
        return failure(colourings.size() - 1, "final colouring differs from psi");
    return {true, colourings.size() - 1, {}};
}

namespace {

bool is_closed_g_walk(const Graph& g, std::span<const Vertex> cycle)
{
    if (cycle.size() < 2 || cycle.front() != cycle.back())
        return false;
    for (Vertex v : cycle)
        if (v >= g.vertex_count())
            return false;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
        if (!g.adjacent(cycle[i], cycle[i + 1]))
            return false;
    return true;
}

bool contains(std::span<const Vertex> s, Vertex v)
{
    return std::find(s.begin(), s.end(), v) != s.end();
}

/// Component of `v` as a view, with `local` mapping global ids into it.
ComponentView component_of(const Instance& inst, Vertex v, std::vector<Vertex>& local)
{
    auto ids = component_ids(inst.g);
    std::vector<Vertex> members;
    for (Vertex u = 0; u < inst.g.vertex_count(); ++u)
        if (ids[u] == ids[v])
            members.push_back(u);
    local.assign(inst.g.vertex_count(), kNoVertex);
    for (std::size_t i = 0; i < members.size(); ++i)
        local[members[i]] = static_cast<Vertex>(i);
    return make_view(inst, std::move(members));
}

bool check_reflexive_obstruction(const Instance& inst, const Obstruction& obs)
{
    const auto& g = inst.g;
    const auto& h = inst.h;
    switch (obs.kind) {
    case ObstructionKind::free_class_mismatch: {
        if (!is_closed_g_walk(g, obs.cycle))
            return false;
        auto a = free_decomposition(image_walk(inst.phi, obs.cycle));
        auto b = free_decomposition(image_walk(inst.psi, obs.cycle));
        if (a.contractible() || b.contractible())
            return a.contractible() != b.contractible();
        return !shift_match(a.core, b.core).has_value();
    }
    case ObstructionKind::frozen_mismatch:
        return is_closed_g_walk(g, obs.cycle) && is_tight(g, h, inst.phi, obs.cycle) && contains(obs.cycle, obs.vertex) &&
               inst.phi[obs.vertex] != inst.psi[obs.vertex];
    case ObstructionKind::no_valid_walk: {
        if (obs.root >= g.vertex_count())
            return false;
        if (obs.cycle.empty()) {
            auto ids = component_ids(h);
            return ids[inst.phi[obs.root]] != ids[inst.psi[obs.root]];
        }
        if (!is_closed_g_walk(g, obs.cycle) || obs.cycle.front() != obs.root)
            return false;
        if (!obs.tight_cycle.empty()) {
            return is_closed_g_walk(g, obs.tight_cycle) && is_tight(g, h, inst.phi, obs.tight_cycle) &&
                   contains(obs.tight_cycle, obs.root) && inst.phi[obs.root] == inst.psi[obs.root] &&
                   !closed_walk_preserved(obs.cycle, Walk::constant(inst.phi[obs.root]), inst.phi, inst.psi);
        }
        std::vector<Vertex> local;
        auto view = component_of(inst, obs.root, local);
        auto search = search_base_walk(view.g, h, view.phi, view.psi, local[obs.root]);
        return !search.walk.has_value();
    }
    case ObstructionKind::unrealizable: {
        if (!is_closed_g_walk(g, obs.tight_cycle) || !is_tight(g, h, inst.phi, obs.tight_cycle) ||
            !contains(obs.tight_cycle, obs.root) || inst.phi[obs.root] != inst.psi[obs.root])
            return false;
        if (!is_closed_g_walk(g, obs.cycle) || !is_tight(g, h, inst.phi, obs.cycle))
            return false;
        std::vector<Vertex> local;
        auto view = component_of(inst, obs.root, local);
        auto forced = generate_system(view.g, h, view.phi, view.psi, local[obs.root],
                                      ReducedWalk::constant(inst.phi[obs.root]));
        const auto* system = std::get_if<WalkSystem>(&forced);
        if (!system)
            return false;
        // A frozen vertex keeps its colour, so the unique candidate system
        // must be constant on the tight walk.
        return std::any_of(obs.cycle.begin(), obs.cycle.end(),
                           [&](Vertex v) { return local[v] != kNoVertex && system->walks[local[v]].length() > 0; });
    }
    }
    return false;
}

} // namespace

bool check_obstruction(const Instance& inst, const Obstruction& obstruction)
{
    try {
        validate_instance(inst);
        if (inst.mode == Mode::reflexive)
            return check_reflexive_obstruction(inst, obstruction);
        auto reduced = preprocess_girth5(inst);
        if (reduced.obstruction)
            return obstruction.kind == ObstructionKind::no_valid_walk && obstruction.cycle.empty() &&
                   obstruction.root == reduced.obstruction->root;
        return check_reflexive_obstruction(reduced.reflexive, obstruction);
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace hrecol
