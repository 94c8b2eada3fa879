// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "hrecol/generators.hpp"
#include "hrecol/oracle.hpp"
#include "hrecol/solver.hpp"

#include "support/brute.hpp"

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace hrecol;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double peak_rss_mib()
{
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return static_cast<double>(usage.ru_maxrss) / 1024.0; // Linux reports KiB
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// YES instances whose witnesses criterion 2 replays.
std::vector<std::pair<Instance, Verdict>> yes_pool;

void collect(const Instance& inst, const Verdict& v)
{
    if (v.yes)
        yes_pool.emplace_back(inst, v);
}

Outcome oracle_equivalence()
{
    auto t0 = Clock::now();
    int agree = 0, yes = 0, budget = 0;
    const int total = 500;
    for (int seed = 0; seed < total; ++seed) {
        auto inst = random_instance(static_cast<std::uint64_t>(seed), 6, 6);
        auto v = solve(inst);
        collect(inst, v);
        auto bfs = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.psi, 1'000'000);
        budget += bfs.answer == OracleAnswer::budget_exceeded;
        if (bfs.answer != OracleAnswer::budget_exceeded && v.yes == (bfs.answer == OracleAnswer::yes))
            ++agree;
        yes += v.yes;
    }
    double s = seconds_since(t0);
    return {agree == total && s < 60.0,
            fmt("%d/%d agree (%d yes, %d no, %d over budget), %.2f s (limit 60 s)", agree, total, yes, total - yes,
                budget, s)};
}

Outcome reduction_confluence()
{
    Rng rng(314159);
    int ok = 0;
    const int total = 1000;
    for (int trial = 0; trial < total; ++trial) {
        auto h = random_triangle_free_host(rng, brute::uniform(rng, 1, 10));
        if (!validate_host(h).is_triangle_free)
            continue;
        auto w = brute::random_walk(h, brute::uniform(rng, 0, 50), rng);
        auto stack = reduce_walk(Walk(w));
        bool same = brute::rewrite_to_fixpoint(w, rng) == stack.vertices() && reduce_via_cover(h, Walk(w)) == stack;
        auto grown = brute::expand(h, stack.vertices(), brute::uniform(rng, 1, 20), rng);
        bool stable = reduce_walk(Walk(grown)) == stack;
        ok += same && stable;
    }
    return {ok == total, fmt("%d/%d walks: stack = random rewriting = cover lift, expansion stable", ok, total)};
}

Outcome c5_frozen()
{
    auto t0 = Clock::now();
    auto inst = c5_rotation();
    auto v = solve(inst);
    bool kind = !v.yes && v.obstruction && v.obstruction->kind == ObstructionKind::frozen_mismatch &&
                check_obstruction(inst, *v.obstruction);
    double solve_s = seconds_since(t0);
    auto bfs = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.psi, 3125);
    return {kind && bfs.answer == OracleAnswer::no && solve_s < 1.0,
            fmt("verdict %s, obstruction %s, BFS %s after %zu states (cap 3125), solve %.4f s (limit 1 s)",
                v.yes ? "yes" : "no", v.obstruction ? to_string(v.obstruction->kind).c_str() : "none",
                to_string(bfs.answer), bfs.states, solve_s)};
}

Outcome figure_eight_topological()
{
    auto t0 = Clock::now();
    auto inst = figure_eight(FigureEightVariant::y_wrap);
    auto v = solve(inst);
    bool kind = !v.yes && v.obstruction &&
                (v.obstruction->kind == ObstructionKind::no_valid_walk ||
                 v.obstruction->kind == ObstructionKind::free_class_mismatch) &&
                check_obstruction(inst, *v.obstruction);
    auto bfs = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.psi, 16807);
    double s = seconds_since(t0);
    return {kind && bfs.answer == OracleAnswer::no && s < 5.0,
            fmt("verdict %s, obstruction %s, BFS %s after %zu states (cap 16807), %.4f s (limit 5 s)",
                v.yes ? "yes" : "no", v.obstruction ? to_string(v.obstruction->kind).c_str() : "none",
                to_string(bfs.answer), bfs.states, s)};
}

Outcome linked_squares_instance()
{
    auto inst = linked_squares();
    auto v = solve(inst);
    bool certified = !v.yes && v.obstruction && check_obstruction(inst, *v.obstruction);
    auto bfs = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.psi, 10'000'000);
    bool cross = bfs.answer == OracleAnswer::no || (bfs.answer == OracleAnswer::budget_exceeded && certified);
    return {!v.yes && certified && cross,
            fmt("verdict %s, obstruction %s (re-checked: %s), BFS %s after %zu states (cap 1e7)", v.yes ? "yes" : "no",
                v.obstruction ? to_string(v.obstruction->kind).c_str() : "none", certified ? "ok" : "FAILED",
                to_string(bfs.answer), bfs.states)};
}

Outcome cycle_wrap_scale()
{
    // 100001 = 4 * 25000 + 1 leaves exactly one parked vertex.
    const std::size_t len = 100'001;
    auto inst = cycle_wrap(len, 4, 1);
    auto t0 = Clock::now();
    auto v = solve(inst);
    bool verified = v.yes && verify_witness(inst, v.moves).ok;
    double s = seconds_since(t0);
    double mib = peak_rss_mib();
    if (v.yes)
        collect(inst, v);
    return {verified && s < 5.0 && mib < 1024.0,
            fmt("|V(G)| = %zu, verdict %s, %zu moves verified: %s, %.2f s (limit 5 s), peak RSS %.0f MiB (limit 1024)",
                len, v.yes ? "yes" : "no", v.moves.size(), verified ? "ok" : "FAILED", s, mib)};
}

Outcome girth5_mode()
{
    int agree = 0;
    const int total = 100;
    int yes = 0;
    for (int seed = 0; seed < total; ++seed) {
        auto inst = random_girth5_instance(static_cast<std::uint64_t>(seed), 6);
        auto v = solve(inst);
        collect(inst, v);
        auto bfs = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.psi, 1'000'000);
        bool certified = v.yes ? verify_witness(inst, v.moves).ok : check_obstruction(inst, *v.obstruction);
        if (bfs.answer != OracleAnswer::budget_exceeded && v.yes == (bfs.answer == OracleAnswer::yes) && certified)
            ++agree;
        yes += v.yes;
    }
    return {agree == total, fmt("%d/%d agree with BFS on the original instance (%d yes)", agree, total, yes)};
}

Outcome trace_necessity()
{
    int ok = 0, found = 0;
    for (std::uint64_t seed = 100'000; found < 100 && seed < 110'000; ++seed) {
        auto inst = random_instance(seed, 6, 6);
        auto bfs = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.psi, 1'000'000, true);
        if (bfs.answer != OracleAnswer::yes)
            continue;
        ++found;
        auto traces = brute::traces(bfs.path);
        bool valid = true;
        for (auto [u, v] : inst.g.edges())
            if (u != v)
                valid = valid && edge_preserved(u, v, traces[u], traces[v], inst.phi, inst.psi);
        auto tight = brute::tight_vertices(inst.g, inst.phi);
        bool frozen = true;
        for (Vertex c = 0; c < inst.g.vertex_count(); ++c)
            frozen = frozen && (!tight[c] || traces[c].length() == 0);
        ok += valid && frozen;
    }
    return {found == 100 && ok == 100,
            fmt("%d/%d oracle paths: traces topologically valid and constant on tight vertices", ok, found)};
}

Outcome witness_soundness()
{
    // Small generated YES families on top of the pool.
    for (auto [len, k, shift] : std::vector<std::tuple<int, int, int>>{
             {9, 4, 1}, {13, 4, 1}, {13, 4, 5}, {21, 5, 2}, {31, 6, 7}, {1001, 4, 3}}) {
        auto inst = cycle_wrap(static_cast<std::size_t>(len), static_cast<std::size_t>(k), static_cast<std::size_t>(shift));
        collect(inst, solve(inst));
    }
    auto x = figure_eight(FigureEightVariant::x_shift);
    collect(x, solve(x));

    std::size_t failures = 0;
    for (const auto& [inst, v] : yes_pool)
        failures += !verify_witness(inst, v.moves).ok;
    return {failures == 0 && yes_pool.size() > 0,
            fmt("%zu YES witnesses replayed, %zu failures", yes_pool.size(), failures)};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    // Criterion 2 runs last so it sees every YES produced by the others.
    std::vector<Criterion> order{
        {1, "oracle equivalence", oracle_equivalence},
        {3, "reduction confluence", reduction_confluence},
        {4, "C5 rotation frozen", c5_frozen},
        {5, "figure-eight topological", figure_eight_topological},
        {6, "linked squares", linked_squares_instance},
        {7, "cycle-wrap scale", cycle_wrap_scale},
        {8, "girth-5 mode", girth5_mode},
        {9, "trace necessity", trace_necessity},
        {2, "witness soundness", witness_soundness},
    };

    std::vector<std::string> lines(10);
    bool all = true;
    for (const auto& c : order) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        lines[static_cast<std::size_t>(c.id)] =
            fmt("[%s] %d %s: %s", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    }
    for (int i = 1; i <= 9; ++i)
        std::printf("%s\n", lines[static_cast<std::size_t>(i)].c_str());
    return all ? 0 : 1;
}
