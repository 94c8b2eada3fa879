#pragma once

#include "hrecol/graph.hpp"
#include "hrecol/validity.hpp"

#include <span>
#include <variant>
#include <vector>

namespace hrecol {

/// Recolour `vertex` to `colour`.
struct Move {
    Vertex vertex = kNoVertex;
    Vertex colour = kNoVertex;

    friend bool operator==(const Move&, const Move&) = default;
};

/// A closed walk of G on which the current colouring is tight, found as a
/// cycle of blocking arcs. `cycle` is closed (first == last) and `images`
/// holds the colour of each entry at the time of the deadlock.
struct TightWalkWitness {
    std::vector<Vertex> cycle;
    std::vector<Vertex> images;
};

using ScheduleResult = std::variant<std::vector<Move>, TightWalkWitness>;

/// phi(C) is a nonempty cyclically reduced closed walk, i.e. free reduced.
/// `cycle` is a closed G-walk (first == last).
bool is_tight(const Graph& g, const Graph& h, std::span<const Vertex> phi, std::span<const Vertex> cycle);

/// Remaining per-vertex walks during scheduling. The current colour of v
/// is the head of its remaining walk.
class ScheduleState {
public:
    ScheduleState(const Graph& g, const Graph& h, const WalkSystem& system);

    Vertex current(Vertex v) const { return walks_[v][position_[v]]; }
    Vertex next(Vertex v) const { return walks_[v][position_[v] + 1]; }
    bool finished(Vertex v) const { return position_[v] + 1 == walks_[v].size(); }
    std::size_t remaining(Vertex v) const { return walks_[v].size() - 1 - position_[v]; }

    /// Every G-neighbour keeps a colour adjacent to next(u).
    bool movable(Vertex u) const;

    /// u -> v when W_v^1 = W_u^0 and W_v^0 is not adjacent to W_u^1:
    /// u cannot move before v does.
    bool blocks(Vertex u, Vertex v) const;
    std::vector<Edge> blocking_arcs() const;

    /// Moves u one step along its walk; u must be movable.
    Move advance(Vertex u);

    std::vector<Vertex> colouring() const;

private:
    const Graph* g_;
    const Graph* h_;
    std::vector<std::vector<Vertex>> walks_;
    std::vector<std::size_t> position_;
};

enum class ScheduleOrder { ascending, descending };

/// Executes moves (lowest-id movable vertex first) until every walk is
/// consumed, or extracts a tight closed walk from the blocking arcs when
/// nothing can move. The system must be topologically valid.
ScheduleResult schedule(const Graph& g, const Graph& h, const WalkSystem& system,
                        ScheduleOrder order = ScheduleOrder::ascending);

} // namespace hrecol
