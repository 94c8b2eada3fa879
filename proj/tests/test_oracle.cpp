#include "hrecol/errors.hpp"
#include "hrecol/generators.hpp"
#include "hrecol/oracle.hpp"

#include "support/brute.hpp"

#include <doctest.h>

using namespace hrecol;

TEST_CASE("hom_graph_bfs on identical maps answers at depth 0")
{
    auto inst = c5_rotation();
    auto r = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.phi, 10, true);
    CHECK(r.answer == OracleAnswer::yes);
    CHECK(r.states == 1);
    REQUIRE(r.path.size() == 1);
    CHECK(r.path[0] == inst.phi);
}

TEST_CASE("hom_graph_bfs exhausts the C5 rotation component")
{
    auto inst = c5_rotation();
    auto r = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.psi, 3125);
    CHECK(r.answer == OracleAnswer::no);
    CHECK(r.states <= 3125);

    // From a constant map the whole non-tight part of Hom(C5, C5) is reachable.
    VertexMap zero(5, 0), two(5, 2);
    auto flat = hom_graph_bfs(inst.g, inst.h, zero, two, 3125, true);
    CHECK(flat.answer == OracleAnswer::yes);
    CHECK(flat.path.front() == zero);
    CHECK(flat.path.back() == two);
    for (std::size_t i = 0; i + 1 < flat.path.size(); ++i) {
        CHECK(is_homomorphism(inst.g, inst.h, flat.path[i]));
        CHECK(hom_adjacent(inst.g, inst.h, flat.path[i], flat.path[i + 1]));
        int changed = 0;
        for (Vertex v = 0; v < 5; ++v)
            changed += flat.path[i][v] != flat.path[i + 1][v];
        CHECK(changed == 1);
    }
}

TEST_CASE("figure-eight instances are decided within the full state space")
{
    auto x = figure_eight(FigureEightVariant::x_shift);
    auto rx = hom_graph_bfs(x.g, x.h, x.phi, x.psi, 16807);
    CHECK(rx.answer == OracleAnswer::yes);
    auto y = figure_eight(FigureEightVariant::y_wrap);
    auto ry = hom_graph_bfs(y.g, y.h, y.phi, y.psi, 16807);
    CHECK(ry.answer == OracleAnswer::no);
}

TEST_CASE("budget exhaustion is reported, never as a NO")
{
    auto inst = cycle_wrap(13, 4, 1);
    auto r = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.psi, 3);
    CHECK(r.answer == OracleAnswer::budget_exceeded);
    CHECK(std::string(to_string(r.answer)) == "budget-exceeded");
    auto full = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.psi, 1'000'000);
    CHECK(full.answer == OracleAnswer::yes);
}

TEST_CASE("hom_graph_bfs respects the looped-vertex rule")
{
    // A looped vertex cannot jump from 0 to 2 in a path; a loopless one can.
    std::vector<Edge> loop{{0, 0}}, none;
    auto h = reflexive_path(3);
    VertexMap a{0}, b{2};
    auto looped = hom_graph_bfs(Graph(1, loop), h, a, b, 100, true);
    REQUIRE(looped.answer == OracleAnswer::yes);
    CHECK(looped.path.size() == 3);
    auto bare = hom_graph_bfs(Graph(1, none), h, a, b, 100, true);
    REQUIRE(bare.answer == OracleAnswer::yes);
    CHECK(bare.path.size() == 2);
}

TEST_CASE("bit-packed states spanning several words round-trip")
{
    // 40 vertices with 6 colours pack into 3 bits each, crossing word boundaries.
    auto g = reflexive_cycle(40);
    auto h = reflexive_cycle(6);
    VertexMap phi(40, 0), psi(40, 0);
    psi[21] = 1;
    psi[22] = 1;
    auto r = hom_graph_bfs(g, h, phi, psi, 1'000'000, true);
    REQUIRE(r.answer == OracleAnswer::yes);
    CHECK(r.path.back() == psi);
    CHECK(r.path.size() == 3);
}

TEST_CASE("reduce_via_cover")
{
    auto c5 = reflexive_cycle(5);
    CHECK(reduce_via_cover(c5, Walk{0, 1, 0}).vertices() == std::vector<Vertex>{0});
    CHECK(reduce_via_cover(c5, Walk{0, 1, 2, 3}).vertices() == std::vector<Vertex>{0, 1, 2, 3});
    CHECK_THROWS_AS(reduce_via_cover(c5, Walk{0, 2}), ContractViolation);

    Rng rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        auto w = brute::random_walk(c5, brute::uniform(rng, 0, 50), rng);
        auto lifted = reduce_via_cover(c5, Walk(w));
        CHECK(lifted == reduce_walk(Walk(w)));
        CHECK(lifted.vertices() == brute::rewrite_to_fixpoint(w, rng));
    }
}

TEST_CASE("brute_homotopy examples")
{
    auto c5 = reflexive_cycle(5);
    CHECK(brute_homotopy(c5, Walk{0, 1, 2}, Walk{0, 1, 1, 2}, 4).answer == HomotopyAnswer::homotopic);
    CHECK(brute_homotopy(c5, Walk{0, 1, 2}, Walk{0, 4, 3, 2}, 12).answer == HomotopyAnswer::not_homotopic);
    CHECK(brute_homotopy(c5, Walk{0, 1, 2}, Walk{0, 1, 2}, 2).answer == HomotopyAnswer::homotopic);
    CHECK(brute_homotopy(c5, Walk{0, 1, 2}, Walk{0, 4, 3, 2}, 12, 50).answer == HomotopyAnswer::budget_exceeded);
    CHECK_THROWS_AS(brute_homotopy(c5, Walk{0, 1}, Walk{0, 4}, 4), ContractViolation);
}

TEST_CASE("brute_homotopy agrees with reduced-form equality")
{
    Rng rng(21);
    int decided = 0;
    for (int trial = 0; trial < 150; ++trial) {
        auto h = random_triangle_free_host(rng, brute::uniform(rng, 2, 5));
        auto x1 = brute::random_walk(h, brute::uniform(rng, 0, 4), rng);
        // Second walk with the same ends: a random walk closed off by a shortest path.
        auto mid = brute::random_walk(h, brute::uniform(rng, 0, 2), rng);
        auto a = shortest_walk(h, x1.front(), mid.front());
        auto b = shortest_walk(h, mid.back(), x1.back());
        std::vector<Vertex> x2 = a;
        x2.insert(x2.end(), mid.begin() + 1, mid.end());
        x2.insert(x2.end(), b.begin() + 1, b.end());
        std::size_t cap = std::max(x1.size(), x2.size()) + 1;
        auto r = brute_homotopy(h, Walk(x1), Walk(x2), cap, 200'000);
        if (r.answer == HomotopyAnswer::budget_exceeded)
            continue;
        ++decided;
        CHECK((r.answer == HomotopyAnswer::homotopic) == homotopic(Walk(x1), Walk(x2)));
    }
    CHECK(decided > 100);
}
