#include "hrecol/walk.hpp"

#include "hrecol/errors.hpp"

#include <algorithm>

namespace hrecol {

Walk::Walk(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    require(!vertices_.empty(), "a walk has at least one vertex");
}

ReducedWalk ReducedWalk::from_reduced(std::vector<Vertex> vertices)
{
    require(is_reduced_sequence(vertices), "ReducedWalk::from_reduced: sequence is not reduced");
    return ReducedWalk(Walk(std::move(vertices)));
}

bool is_walk_in(const Graph& h, std::span<const Vertex> sequence)
{
    if (sequence.empty())
        return false;
    for (Vertex x : sequence)
        if (x >= h.vertex_count())
            return false;
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
        if (!h.adjacent(sequence[i], sequence[i + 1]))
            return false;
    return true;
}

bool is_reduced_sequence(std::span<const Vertex> s)
{
    if (s.empty())
        return false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1] || (i + 2 < s.size() && s[i] == s[i + 2]))
            return false;
    return true;
}

Walk concat(const Walk& x, const Walk& y)
{
    require(x.last() == y.first(), "concat: last(X) != first(Y)");
    std::vector<Vertex> v;
    v.reserve(x.vertices().size() + y.vertices().size() - 1);
    v = x.vertices();
    v.insert(v.end(), y.vertices().begin() + 1, y.vertices().end());
    return Walk(std::move(v));
}

Walk reverse(const Walk& x)
{
    return Walk(std::vector<Vertex>(x.vertices().rbegin(), x.vertices().rend()));
}

Walk basepoint_change(const Walk& w, const Walk& c)
{
    require(c.is_closed(), "basepoint_change: C is not closed");
    require(w.last() == c.first(), "basepoint_change: last(W) is not the basepoint of C");
    return concat(concat(w, c), reverse(w));
}

ReducedWalk reduce_walk(const Walk& x)
{
    std::vector<Vertex> stack;
    stack.reserve(x.vertices().size());
    for (Vertex v : x.vertices()) {
        stack.push_back(v);
        auto n = stack.size();
        if (n >= 2 && stack[n - 1] == stack[n - 2])
            stack.pop_back();
        else if (n >= 3 && stack[n - 1] == stack[n - 3])
            stack.resize(n - 2);
    }
    return ReducedWalk(Walk(std::move(stack)));
}

bool is_contractible(const Walk& c)
{
    require(c.is_closed(), "is_contractible: walk is not closed");
    return reduce_walk(c).length() == 0;
}

bool homotopic(const Walk& x1, const Walk& x2)
{
    require(x1.first() == x2.first() && x1.last() == x2.last(), "homotopic: endpoints differ");
    return reduce_walk(x1) == reduce_walk(x2);
}

std::size_t least_rotation(std::span<const Vertex> s)
{
    // Two-candidate scan: i and j are the best rotation starts seen so far,
    // k the length of their common prefix.
    const std::size_t n = s.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        Vertex a = s[(i + k) % n];
        Vertex b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j)
            ++j;
        k = 0;
    }
    return std::min(i, j);
}

std::size_t smallest_period(std::span<const Vertex> s)
{
    const std::size_t n = s.size();
    if (n == 0)
        return 0;
    std::vector<std::size_t> fail(n + 1, 0);
    for (std::size_t q = 1, k = 0; q < n; ++q) {
        while (k > 0 && s[q] != s[k])
            k = fail[k];
        if (s[q] == s[k])
            ++k;
        fail[q + 1] = k;
    }
    std::size_t p = n - fail[n];
    return n % p == 0 ? p : n;
}

CyclicWord::CyclicWord(std::vector<Vertex> linear)
{
    if (linear.empty())
        return;
    const std::size_t n = linear.size();
    std::size_t r = least_rotation(linear);
    canonical_.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        canonical_.push_back(linear[(r + j) % n]);
    // The word may be periodic, in which case several offsets give the same
    // linearization; keep the smallest.
    start_ = (n - r) % n % smallest_period(canonical_);
}

std::vector<Vertex> CyclicWord::linear() const
{
    std::vector<Vertex> v;
    v.reserve(size());
    for (std::size_t j = 0; j < size(); ++j)
        v.push_back(at(j));
    return v;
}

Walk CyclicWord::closed_walk() const
{
    require(!empty(), "closed_walk: empty cyclic word");
    auto v = linear();
    v.push_back(v.front());
    return Walk(std::move(v));
}

FreeDecomposition free_decomposition(const Walk& c)
{
    require(c.is_closed(), "free_decomposition: walk is not closed");
    auto reduced = reduce_walk(c);
    const auto& x = reduced.vertices();
    std::size_t lo = 0, hi = x.size() - 1;
    while (hi - lo >= 2 && x[lo + 1] == x[hi - 1]) {
        ++lo;
        --hi;
    }
    if (hi == lo)
        return {ReducedWalk::constant(x[0]), CyclicWord{}};
    return {ReducedWalk::from_reduced(std::vector<Vertex>(x.begin(), x.begin() + lo + 1)),
            CyclicWord(std::vector<Vertex>(x.begin() + lo, x.begin() + hi))};
}

CyclicWord primitive_root(const CyclicWord& core)
{
    require(!core.empty(), "primitive_root: empty core");
    auto lin = core.linear();
    std::size_t p = smallest_period(lin);
    require(p == lin.size() || p >= 4, "primitive_root: root shorter than any cyclically reduced closed walk");
    lin.resize(p);
    return CyclicWord(std::move(lin));
}

std::optional<std::size_t> shift_match(const CyclicWord& a, const CyclicWord& b)
{
    if (a.size() != b.size() || a.canonical() != b.canonical())
        return std::nullopt;
    if (a.empty())
        return 0;
    // a.at(j) = canon[a.start + j], b.at(j) = canon[b.start + j]; shifting a
    // by k lines them up when k = b.start - a.start modulo the period.
    std::size_t p = smallest_period(a.canonical());
    return (b.start() + p - a.start() % p) % p;
}

Walk core_prefix(const CyclicWord& a, std::size_t k)
{
    require(!a.empty(), "core_prefix: empty core");
    std::vector<Vertex> v;
    v.reserve(k + 1);
    for (std::size_t j = 0; j <= k; ++j)
        v.push_back(a.at(j));
    return Walk(std::move(v));
}

} // namespace hrecol
