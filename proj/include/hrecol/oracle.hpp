#pragma once

#include "hrecol/graph.hpp"
#include "hrecol/walk.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hrecol {

enum class OracleAnswer { yes, no, budget_exceeded };

const char* to_string(OracleAnswer a);

struct HomGraphSearch {
    OracleAnswer answer = OracleAnswer::no;
    std::size_t states = 0;       ///< distinct homomorphisms discovered
    std::vector<VertexMap> path;  ///< phi ... psi, filled on yes when requested
};

/// Breadth-first search in the reconfiguration graph of Hom(G, H). A step
/// recolours one vertex; a looped vertex only moves to an H-neighbour of its
/// colour. The answer is exact unless more than `max_states` homomorphisms
/// are reached first.
HomGraphSearch hom_graph_bfs(const Graph& g, const Graph& h, std::span<const Vertex> phi,
                             std::span<const Vertex> psi, std::size_t max_states, bool want_path = false);

/// Lifts x into the universal cover of H, tracking the current cover vertex
/// as a non-backtracking walk from first(x), and returns that walk.
/// H must be reflexive and triangle-free; throws ContractViolation if x is
/// not a walk in H.
ReducedWalk reduce_via_cover(const Graph& h, const Walk& x);

enum class HomotopyAnswer { homotopic, not_homotopic, budget_exceeded };

struct HomotopySearch {
    HomotopyAnswer answer = HomotopyAnswer::not_homotopic;
    std::size_t states = 0;
};

/// Explores walks reachable from x1 by the elementary moves (drop a repeated
/// vertex; collapse a,b,a to a) and their inverses, never exceeding
/// `length_cap` edges. Exact when both inputs fit under the cap, since every
/// walk reduces by length-decreasing moves.
HomotopySearch brute_homotopy(const Graph& h, const Walk& x1, const Walk& x2, std::size_t length_cap,
                              std::size_t max_states = 1'000'000);

} // namespace hrecol
