#include "hrecol/oracle.hpp"

#include "hrecol/errors.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

namespace hrecol {

const char* to_string(OracleAnswer a)
{
    switch (a) {
    case OracleAnswer::yes: return "yes";
    case OracleAnswer::no: return "no";
    case OracleAnswer::budget_exceeded: return "budget-exceeded";
    }
    return "unknown";
}

namespace {

/// Visited homomorphisms, bit-packed into fixed-width rows of 64-bit words
/// with an open-addressing index. Ten million states of a 15-vertex G fit
/// in a few hundred megabytes this way.
class StateStore {
public:
    StateStore(std::size_t n, std::size_t colours)
        : n_(n), bits_(std::max<std::size_t>(1, std::bit_width(colours > 0 ? colours - 1 : 0))),
          words_(std::max<std::size_t>(1, (n * bits_ + 63) / 64)), slots_(1024, kEmpty)
    {
    }

    std::size_t size() const noexcept { return parent_.size(); }

    /// Index of `state`, inserting it with `parent` when new.
    std::pair<std::uint32_t, bool> insert(std::span<const Vertex> state, std::uint32_t parent)
    {
        pack(state);
        if ((size() + 1) * 2 > slots_.size())
            grow();
        std::size_t slot = find_slot(scratch_.data());
        if (slots_[slot] != kEmpty)
            return {slots_[slot], false};
        auto id = static_cast<std::uint32_t>(size());
        slots_[slot] = id;
        rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
        parent_.push_back(parent);
        return {id, true};
    }

    void unpack(std::uint32_t id, std::vector<Vertex>& out) const
    {
        out.resize(n_);
        const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(id) * words_;
        const std::uint64_t mask = bits_ == 64 ? ~0ULL : (1ULL << bits_) - 1;
        for (std::size_t i = 0; i < n_; ++i) {
            std::size_t bit = i * bits_;
            std::uint64_t v = row[bit / 64] >> (bit % 64);
            if (bit % 64 + bits_ > 64)
                v |= row[bit / 64 + 1] << (64 - bit % 64);
            out[i] = static_cast<Vertex>(v & mask);
        }
    }

    std::uint32_t parent(std::uint32_t id) const { return parent_[id]; }

    static constexpr std::uint32_t kEmpty = 0xffffffffu;

private:
    void pack(std::span<const Vertex> state)
    {
        scratch_.assign(words_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            std::size_t bit = i * bits_;
            std::uint64_t v = state[i];
            scratch_[bit / 64] |= v << (bit % 64);
            if (bit % 64 + bits_ > 64)
                scratch_[bit / 64 + 1] |= v >> (64 - bit % 64);
        }
    }

    std::size_t hash(const std::uint64_t* row) const
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::size_t w = 0; w < words_; ++w) {
            h ^= row[w] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
            h ^= h >> 33;
        }
        return static_cast<std::size_t>(h);
    }

    std::size_t find_slot(const std::uint64_t* row) const
    {
        const std::size_t mask = slots_.size() - 1;
        for (std::size_t s = hash(row) & mask;; s = (s + 1) & mask) {
            if (slots_[s] == kEmpty)
                return s;
            const std::uint64_t* other = rows_.data() + static_cast<std::size_t>(slots_[s]) * words_;
            if (std::equal(row, row + words_, other))
                return s;
        }
    }

    void grow()
    {
        slots_.assign(slots_.size() * 2, kEmpty);
        const std::size_t mask = slots_.size() - 1;
        for (std::uint32_t id = 0; id < size(); ++id) {
            std::size_t s = hash(rows_.data() + static_cast<std::size_t>(id) * words_) & mask;
            while (slots_[s] != kEmpty)
                s = (s + 1) & mask;
            slots_[s] = id;
        }
    }

    std::size_t n_, bits_, words_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> slots_;
    std::vector<std::uint64_t> scratch_;
};

} // namespace

HomGraphSearch hom_graph_bfs(const Graph& g, const Graph& h, std::span<const Vertex> phi,
                             std::span<const Vertex> psi, std::size_t max_states, bool want_path)
{
    require(is_homomorphism(g, h, phi) && is_homomorphism(g, h, psi), "hom_graph_bfs: phi or psi is not a homomorphism");
    require(max_states < StateStore::kEmpty, "hom_graph_bfs: state cap too large");
    const auto n = g.vertex_count();
    StateStore store(n, h.vertex_count());
    HomGraphSearch out;

    auto finish = [&](std::uint32_t id) {
        out.answer = OracleAnswer::yes;
        out.states = store.size();
        if (!want_path)
            return out;
        std::vector<Vertex> state;
        for (std::uint32_t i = id;; i = store.parent(i)) {
            store.unpack(i, state);
            out.path.push_back(state);
            if (i == 0)
                break;
        }
        std::reverse(out.path.begin(), out.path.end());
        return out;
    };

    store.insert(phi, StateStore::kEmpty);
    if (std::equal(phi.begin(), phi.end(), psi.begin(), psi.end()))
        return finish(0);

    std::vector<Vertex> current;
    for (std::uint32_t head = 0; head < store.size(); ++head) {
        store.unpack(head, current);
        for (Vertex v = 0; v < n; ++v) {
            const Vertex old = current[v];
            for (Vertex c = 0; c < h.vertex_count(); ++c) {
                if (c == old || (g.has_loop(v) && !h.adjacent(old, c)))
                    continue;
                bool ok = true;
                for (Vertex w : g.neighbours(v))
                    if (!h.adjacent(c, w == v ? c : current[w])) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                current[v] = c;
                auto [id, fresh] = store.insert(current, head);
                if (fresh && std::equal(current.begin(), current.end(), psi.begin(), psi.end()))
                    return finish(id);
                current[v] = old;
                if (store.size() > max_states) {
                    out.answer = OracleAnswer::budget_exceeded;
                    out.states = store.size();
                    return out;
                }
            }
        }
    }
    out.answer = OracleAnswer::no;
    out.states = store.size();
    return out;
}

ReducedWalk reduce_via_cover(const Graph& h, const Walk& x)
{
    for (Vertex v : x.vertices())
        require(v < h.vertex_count(), "reduce_via_cover: vertex out of range");
    std::vector<Vertex> lift{x.first()};
    for (std::size_t i = 1; i < x.vertices().size(); ++i) {
        const Vertex y = x[i];
        require(h.adjacent(lift.back(), y), "reduce_via_cover: consecutive vertices are not adjacent");
        if (y == lift.back())
            continue; // loop: same cover vertex
        if (lift.size() >= 2 && lift[lift.size() - 2] == y)
            lift.pop_back(); // step back toward the root
        else
            lift.push_back(y);
    }
    return ReducedWalk::from_reduced(std::move(lift));
}

namespace {

struct SequenceHash {
    std::size_t operator()(const std::vector<Vertex>& s) const noexcept
    {
        std::size_t h = s.size();
        for (Vertex v : s)
            h = h * 1000003u ^ v;
        return h;
    }
};

} // namespace

HomotopySearch brute_homotopy(const Graph& h, const Walk& x1, const Walk& x2, std::size_t length_cap,
                              std::size_t max_states)
{
    require(is_walk_in(h, x1.vertices()) && is_walk_in(h, x2.vertices()), "brute_homotopy: input is not a walk in H");
    require(x1.first() == x2.first() && x1.last() == x2.last(), "brute_homotopy: endpoints differ");

    HomotopySearch out;
    if (x1 == x2) {
        out.answer = HomotopyAnswer::homotopic;
        out.states = 1;
        return out;
    }

    std::unordered_set<std::vector<Vertex>, SequenceHash> seen{x1.vertices()};
    std::deque<std::vector<Vertex>> queue{x1.vertices()};
    const auto& target = x2.vertices();

    // Returns true when the target was reached or the budget ran out.
    auto visit = [&](std::vector<Vertex> s) {
        if (s.size() > length_cap + 1 || !seen.insert(s).second)
            return false;
        if (s == target) {
            out.answer = HomotopyAnswer::homotopic;
            return true;
        }
        if (seen.size() > max_states) {
            out.answer = HomotopyAnswer::budget_exceeded;
            return true;
        }
        queue.push_back(std::move(s));
        return false;
    };

    while (!queue.empty()) {
        auto s = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < s.size(); ++i) {
            // x_i = x_{i+1}: drop one copy, or duplicate x_i.
            if (i + 1 < s.size() && s[i] == s[i + 1]) {
                auto t = s;
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
                if (visit(std::move(t)))
                    break;
            }
            {
                auto t = s;
                t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), s[i]);
                if (visit(std::move(t)))
                    break;
            }
            // a, b, a -> a, and back.
            if (i + 2 < s.size() && s[i] == s[i + 2] && s[i] != s[i + 1]) {
                auto t = s;
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.begin() + static_cast<std::ptrdiff_t>(i + 3));
                if (visit(std::move(t)))
                    break;
            }
            bool stop = false;
            for (Vertex b : h.neighbours(s[i])) {
                if (b == s[i])
                    continue;
                auto t = s;
                t.insert(t.begin() + static_cast<std::ptrdiff_t>(i + 1), {b, s[i]});
                if ((stop = visit(std::move(t))))
                    break;
            }
            if (stop)
                break;
        }
        if (out.answer != HomotopyAnswer::not_homotopic) {
            out.states = seen.size();
            return out;
        }
    }
    out.states = seen.size();
    return out;
}

} // namespace hrecol
