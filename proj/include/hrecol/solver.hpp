#pragma once

#include "hrecol/graph.hpp"
#include "hrecol/scheduler.hpp"
#include "hrecol/walk.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hrecol {

enum class Mode {
    reflexive, ///< G and H fully reflexive, H triangle-free
    girth5,    ///< H reflexive with girth >= 5, G with arbitrary loops
};

struct Instance {
    Graph g;
    Graph h;
    VertexMap phi;
    VertexMap psi;
    Mode mode = Mode::reflexive;
};

/// Throws InvalidInput unless the maps are homomorphisms and the graphs meet
/// the hypotheses of the instance's mode.
void validate_instance(const Instance& inst);

enum class ObstructionKind {
    no_valid_walk,       ///< no topologically valid root walk (or the forced constant one fails)
    free_class_mismatch, ///< phi(C), psi(C) lie in different free homotopy classes
    frozen_mismatch,     ///< phi is tight on `cycle` but psi moves `vertex`
    unrealizable,        ///< the unique admissible system deadlocks again on `cycle`
};

std::string to_string(ObstructionKind kind);
std::optional<ObstructionKind> obstruction_kind_from_string(const std::string& s);

/// Certificate for a NO answer. All vertex ids refer to the input instance.
struct Obstruction {
    ObstructionKind kind = ObstructionKind::no_valid_walk;
    std::vector<Vertex> cycle;        ///< closed G-walk; empty when the colours of `root` are disconnected in H
    Vertex root = kNoVertex;          ///< base vertex of `cycle`
    Vertex vertex = kNoVertex;        ///< frozen vertex with phi != psi
    std::vector<Vertex> tight_cycle;  ///< tight closed walk that forced the root walk to be constant
    std::vector<Vertex> second_cycle; ///< second witness used by the base-walk search
    std::vector<Vertex> phi_core, psi_core;
};

struct Verdict {
    bool yes = false;
    std::vector<Move> moves;                ///< recolouring phi -> psi when yes
    std::optional<Obstruction> obstruction; ///< certificate when no
};

struct SolveOptions {
    unsigned threads = 1; ///< components solved concurrently; output is identical for any value
};

/// Girth-5 instance rewritten to reflexive mode: isolated vertices are
/// recoloured up front (and then agree with psi), every vertex gets a loop.
struct Girth5Reduction {
    Instance reflexive;
    std::vector<Move> prefix;
    std::optional<Obstruction> obstruction; ///< an isolated looped vertex whose colours are disconnected
};

Girth5Reduction preprocess_girth5(const Instance& inst);

Verdict solve(const Instance& inst, const SolveOptions& options = {});

/// Replay result; `failed_step` indexes the first bad move, or equals the
/// move count when only the final colouring differs from psi.
struct WitnessCheck {
    bool ok = false;
    std::size_t failed_step = 0;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

/// Replays moves from phi. Every step must recolour exactly one vertex, a
/// looped vertex only to an H-neighbour of its colour, keep a
/// homomorphism, and the last colouring must be psi.
WitnessCheck verify_witness(const Instance& inst, std::span<const Move> moves);

/// Same checks for an explicit sequence of colourings starting at phi.
WitnessCheck verify_colouring_sequence(const Instance& inst, std::span<const VertexMap> colourings);

/// Re-derives a NO certificate from the instance alone.
bool check_obstruction(const Instance& inst, const Obstruction& obstruction);

} // namespace hrecol
