#include "hrecol/scheduler.hpp"

#include "hrecol/errors.hpp"

#include <functional>
#include <queue>

namespace hrecol {

bool is_tight(const Graph& g, const Graph& h, std::span<const Vertex> phi, std::span<const Vertex> cycle)
{
    (void)h;
    require(cycle.size() >= 1 && cycle.front() == cycle.back(), "is_tight: walk is not closed");
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
        require(g.adjacent(cycle[i], cycle[i + 1]), "is_tight: consecutive vertices are not adjacent in G");
    if (cycle.size() == 1)
        return false;
    auto fd = free_decomposition(image_walk(phi, cycle));
    return !fd.contractible() && fd.tail.length() == 0 && fd.core.size() + 1 == cycle.size();
}

ScheduleState::ScheduleState(const Graph& g, const Graph& h, const WalkSystem& system)
    : g_(&g), h_(&h), position_(g.vertex_count(), 0)
{
    require(system.walks.size() == g.vertex_count(), "ScheduleState: system size differs from |V(G)|");
    walks_.reserve(system.walks.size());
    for (const auto& w : system.walks)
        walks_.push_back(w.vertices());
}

bool ScheduleState::movable(Vertex u) const
{
    if (finished(u))
        return false;
    const Vertex target = next(u);
    for (Vertex w : g_->neighbours(u))
        if (w != u && !h_->adjacent(current(w), target))
            return false;
    return true;
}

bool ScheduleState::blocks(Vertex u, Vertex v) const
{
    return u != v && !finished(u) && !finished(v) && next(v) == current(u) && !h_->adjacent(current(v), next(u));
}

std::vector<Edge> ScheduleState::blocking_arcs() const
{
    std::vector<Edge> arcs;
    for (Vertex u = 0; u < g_->vertex_count(); ++u)
        for (Vertex v : g_->neighbours(u))
            if (blocks(u, v))
                arcs.emplace_back(u, v);
    return arcs;
}

Move ScheduleState::advance(Vertex u)
{
    require(movable(u), "advance: vertex is not movable");
    ++position_[u];
    return {u, current(u)};
}

std::vector<Vertex> ScheduleState::colouring() const
{
    std::vector<Vertex> c(walks_.size());
    for (Vertex v = 0; v < c.size(); ++v)
        c[v] = current(v);
    return c;
}

namespace {

TightWalkWitness extract_deadlock_cycle(const Graph& g, const ScheduleState& state)
{
    const auto n = g.vertex_count();
    Vertex start = kNoVertex;
    for (Vertex v = 0; v < n && start == kNoVertex; ++v)
        if (!state.finished(v))
            start = v;

    constexpr auto unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited);
    std::vector<Vertex> path;
    Vertex u = start;
    while (index[u] == unvisited) {
        index[u] = path.size();
        path.push_back(u);
        Vertex blocker = kNoVertex;
        for (Vertex v : g.neighbours(u))
            if (state.blocks(u, v)) {
                blocker = v;
                break;
            }
        require(blocker != kNoVertex, "schedule: blocked vertex has no blocking arc (system not valid)");
        u = blocker;
    }

    TightWalkWitness witness;
    witness.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(index[u]), path.end());
    witness.cycle.push_back(u);
    for (Vertex v : witness.cycle)
        witness.images.push_back(state.current(v));
    return witness;
}

template <typename Compare>
ScheduleResult run_schedule(const Graph& g, ScheduleState& state)
{
    const auto n = g.vertex_count();
    std::priority_queue<Vertex, std::vector<Vertex>, Compare> queue;
    std::vector<bool> queued(n, false);
    auto enqueue = [&](Vertex v) {
        if (!queued[v] && !state.finished(v)) {
            queued[v] = true;
            queue.push(v);
        }
    };
    for (Vertex v = 0; v < n; ++v)
        enqueue(v);

    std::vector<Move> moves;
    while (!queue.empty()) {
        Vertex v = queue.top();
        queue.pop();
        queued[v] = false;
        if (!state.movable(v))
            continue;
        moves.push_back(state.advance(v));
        for (Vertex w : g.neighbours(v))
            enqueue(w);
    }

    for (Vertex v = 0; v < n; ++v)
        if (!state.finished(v))
            return extract_deadlock_cycle(g, state);
    return moves;
}

} // namespace

ScheduleResult schedule(const Graph& g, const Graph& h, const WalkSystem& system, ScheduleOrder order)
{
    require(is_staggered(g, system), "schedule: walk system is not staggered along some edge");
    ScheduleState state(g, h, system);
    if (order == ScheduleOrder::ascending)
        return run_schedule<std::greater<Vertex>>(g, state);
    return run_schedule<std::less<Vertex>>(g, state);
}

} // namespace hrecol
