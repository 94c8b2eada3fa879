#pragma once

#include "hrecol/graph.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hrecol {

/// A walk in a reflexive host: a nonempty vertex sequence whose consecutive
/// entries are adjacent (equal entries are allowed, through the loop). A
/// single vertex a is the empty walk 0_a.
///
/// Walk does not keep a reference to its host; use is_walk_in() to check
/// the adjacency invariant against a particular graph.
class Walk {
public:
    Walk() = default;
    explicit Walk(std::vector<Vertex> vertices);
    Walk(std::initializer_list<Vertex> vertices) : Walk(std::vector<Vertex>(vertices)) {}

    static Walk constant(Vertex a) { return Walk(std::vector<Vertex>{a}); }

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.size() - 1; }
    Vertex first() const noexcept { return vertices_.front(); }
    Vertex last() const noexcept { return vertices_.back(); }
    bool is_closed() const noexcept { return first() == last(); }
    Vertex operator[](std::size_t i) const noexcept { return vertices_[i]; }

    friend bool operator==(const Walk&, const Walk&) = default;

protected:
    std::vector<Vertex> vertices_;
};

/// A walk with no x_i = x_{i+1} and no x_i = x_{i+2}: the unique shortest
/// member of its fixed-endpoint homotopy class in a triangle-free host.
class ReducedWalk : public Walk {
public:
    /// Wraps an already reduced sequence; throws ContractViolation otherwise.
    static ReducedWalk from_reduced(std::vector<Vertex> vertices);
    static ReducedWalk constant(Vertex a) { return ReducedWalk(Walk::constant(a)); }

private:
    explicit ReducedWalk(Walk w) : Walk(std::move(w)) {}
    friend ReducedWalk reduce_walk(const Walk& x);
};

bool is_walk_in(const Graph& h, std::span<const Vertex> sequence);
bool is_reduced_sequence(std::span<const Vertex> sequence);

Walk concat(const Walk& x, const Walk& y);
Walk reverse(const Walk& x);

/// W . C . rev(W); requires last(W) to be the basepoint of the closed walk C.
Walk basepoint_change(const Walk& w, const Walk& c);

/// Single left-to-right stack pass cancelling repeats and backtracks.
ReducedWalk reduce_walk(const Walk& x);

bool is_contractible(const Walk& c);
bool homotopic(const Walk& x1, const Walk& x2);

/// A cyclic sequence of host vertices.
///
/// Stored as its lexicographically least rotation together with the offset of
/// the actual first entry, so equality of cyclic classes is a plain
/// comparison of canonical() while linear() keeps the true starting point.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(std::vector<Vertex> linear);

    std::size_t size() const noexcept { return canonical_.size(); }
    bool empty() const noexcept { return canonical_.empty(); }

    /// Entry j counted from the actual start.
    Vertex at(std::size_t j) const noexcept { return canonical_[(start_ + j) % canonical_.size()]; }
    std::vector<Vertex> linear() const;
    const std::vector<Vertex>& canonical() const noexcept { return canonical_; }
    std::size_t start() const noexcept { return start_; }

    /// The closed walk (c_0, ..., c_{l-1}, c_0); requires a nonempty word.
    Walk closed_walk() const;

    friend bool operator==(const CyclicWord& a, const CyclicWord& b)
    {
        return a.canonical_ == b.canonical_ && (a.empty() || a.start_ == b.start_);
    }

private:
    std::vector<Vertex> canonical_;
    std::size_t start_ = 0;
};

/// Index of the lexicographically least rotation of s (least index on ties).
std::size_t least_rotation(std::span<const Vertex> s);

/// Smallest p dividing |s| such that s is a power of its length-p prefix.
std::size_t smallest_period(std::span<const Vertex> s);

/// C = beta_tail(core): reduced tail from the basepoint to core.at(0), and a
/// cyclically reduced core (empty when C is contractible).
struct FreeDecomposition {
    ReducedWalk tail;
    CyclicWord core;

    bool contractible() const noexcept { return core.empty(); }
};

FreeDecomposition free_decomposition(const Walk& c);

/// Shortest R with R^d = core, as a cyclic word starting where core starts.
CyclicWord primitive_root(const CyclicWord& core);

/// Smallest k >= 0 with b.at(j) == a.at(j + k) for all j; nullopt when b is
/// not a rotation of a. Reversed matches do not count.
std::optional<std::size_t> shift_match(const CyclicWord& a, const CyclicWord& b);

/// The walk (a_0, a_1, ..., a_k): the initial segment of the core of length k.
Walk core_prefix(const CyclicWord& a, std::size_t k);

} // namespace hrecol
