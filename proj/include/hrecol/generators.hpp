#pragma once

#include "hrecol/solver.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace hrecol {

using Rng = std::mt19937_64;

Graph reflexive_cycle(std::size_t n);
Graph reflexive_path(std::size_t n);

/// Reflexive cycle G of length g_len wrapping the reflexive h_len-cycle
/// floor((g_len-1)/h_len) times, remaining vertices parked on colour 0;
/// psi is phi rotated by `shift` positions along G.
Instance cycle_wrap(std::size_t g_len, std::size_t h_len, std::size_t shift);

enum class FigureEightVariant {
    y_wrap,  ///< psi wraps the other square
    x_shift, ///< psi wraps the same square with the parked vertex rotated
};

/// Reflexive 5-cycle into two reflexive squares sharing vertex 0
/// (x = 0,1,2,3 and y = 0,4,5,6); phi wraps x.
Instance figure_eight(FigureEightVariant variant);

/// Reflexive 5-cycle onto itself, identity vs rotation by one.
Instance c5_rotation();

/// Two reflexive 8-cycles glued at vertex 0, mapped into two reflexive
/// squares joined through two connector vertices. Each 8-cycle wraps its
/// square once; psi shifts both wraps by half a turn and moves the shared
/// vertex to the other connector. Not reconfigurable.
Instance linked_squares();

/// Small reflexive triangle-free host: C4, C5, C6, a path, a random tree,
/// C5 with a pendant vertex or a square with a pendant path of length 2,
/// drawn among those with at most max_vertices vertices.
Graph random_catalogue_host(Rng& rng, std::size_t max_vertices);

/// Connected reflexive triangle-free graph on n vertices: a random tree plus
/// random edges that close no triangle.
Graph random_triangle_free_host(Rng& rng, std::size_t n);

/// Uniformly shuffled backtracking search for a homomorphism; nullopt if none.
std::optional<VertexMap> random_homomorphism(const Graph& g, const Graph& h, Rng& rng);

/// Applies `steps` random single-vertex moves in Hom(G, H) starting at f.
VertexMap random_hom_walk(const Graph& g, const Graph& h, VertexMap f, std::size_t steps, Rng& rng);

/// Reflexive-mode instance with |V(G)| <= gv and a catalogue host with
/// |V(H)| <= hv. psi is either independent of phi or a random walk from it.
Instance random_instance(std::uint64_t seed, std::size_t gv, std::size_t hv);

/// Girth-5 mode instance: G with |V(G)| <= gv, no loops unless
/// loop_probability > 0, H a reflexive C5, C6 or random tree.
Instance random_girth5_instance(std::uint64_t seed, std::size_t gv, double loop_probability = 0.0);

} // namespace hrecol
