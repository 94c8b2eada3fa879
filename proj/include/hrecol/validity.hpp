#pragma once

#include "hrecol/graph.hpp"
#include "hrecol/walk.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace hrecol {

/// Per-vertex reduced (phi(v), psi(v))-walks generated from a root walk.
struct WalkSystem {
    Vertex root = kNoVertex;
    std::vector<ReducedWalk> walks;

    std::size_t total_length() const;
};

/// A closed walk of G, based at the root, along which the system fails:
/// [phi(C)] != [beta_{W_r}(psi(C))]. Stored closed (first == last).
struct InvalidityWitness {
    std::vector<Vertex> cycle;
};

using ValidityOutcome = std::variant<WalkSystem, InvalidityWitness>;

/// Image of a G-vertex sequence under a vertex map, as a host walk.
Walk image_walk(std::span<const Vertex> map, std::span<const Vertex> g_sequence);

/// True iff the closed walk phi(uv) . W_v . rev(psi(uv)) . rev(W_u) is
/// contractible.
bool edge_preserved(Vertex u, Vertex v, const Walk& walk_u, const Walk& walk_v,
                    std::span<const Vertex> phi, std::span<const Vertex> psi);

/// [phi(C)] == [W . psi(C) . rev(W)] for a closed G-walk C based at the
/// start of W's G-vertex.
bool closed_walk_preserved(std::span<const Vertex> cycle, const Walk& base_walk,
                           std::span<const Vertex> phi, std::span<const Vertex> psi);

/// Builds the system generated by `root_walk` down a BFS spanning tree and
/// checks every non-tree edge. G must be connected.
ValidityOutcome generate_system(const Graph& g, const Graph& h, std::span<const Vertex> phi,
                                std::span<const Vertex> psi, Vertex root, const ReducedWalk& root_walk,
                                NeighbourOrder order = NeighbourOrder::ascending);

/// Relative offset s in {-1, 0, 1} with a[i] == b[i - s] on the common index
/// range, when one exists. Walks of a valid system are pairwise staggered
/// along every edge.
std::optional<int> stagger_offset(const Walk& a, const Walk& b);
bool is_staggered(const Graph& g, const WalkSystem& system);

enum class BaseWalkFailure {
    none,
    colours_disconnected, ///< phi(r), psi(r) lie in different host components
    class_mismatch,       ///< phi(C), psi(C) have different free classes
    no_candidate,         ///< every candidate compatible with C failed
};

/// Outcome of the staged search for a topologically valid root walk.
struct BaseWalkSearch {
    std::optional<ReducedWalk> walk;
    std::optional<WalkSystem> system; ///< the system `walk` generates
    BaseWalkFailure failure = BaseWalkFailure::none;
    std::vector<Vertex> cycle;        ///< first witness closed walk (when one was needed)
    std::vector<Vertex> second_cycle; ///< witness against the d = 0 candidate, if reached
    CyclicWord phi_core, psi_core;    ///< cores of the failing cycle on class mismatch
    int stage = 0;                    ///< 1..5, the stage that produced the answer
};

/// Staged search: shortest walk; then candidates sqrt(A)^d . T . I . rev(S)
/// from a witness cycle for d in {-1, 0, 1}; then those from a second
/// witness; then an exact bounded search over d against both witnesses.
BaseWalkSearch search_base_walk(const Graph& g, const Graph& h, std::span<const Vertex> phi,
                                std::span<const Vertex> psi, Vertex root);

std::optional<ReducedWalk> find_valid_base_walk(const Graph& g, const Graph& h, std::span<const Vertex> phi,
                                                std::span<const Vertex> psi, Vertex root);

} // namespace hrecol
