#include "fixtures.hpp"
#include "pizza/harness.hpp"
#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace pizza;

namespace {

// Plain minimax over explicit piece lists, written without the library's arc helpers.
Size brute(std::vector<Size> path)
{
    if (path.empty())
        return 0;
    Size sum = 0;
    for (const Size s : path)
        sum += s;
    const std::vector<Size> left(path.begin() + 1, path.end());
    const std::vector<Size> right(path.begin(), path.end() - 1);
    return std::max(sum - brute(left), sum - brute(right));
}

Size brute_pizza(const Pizza& p)
{
    Size best = 0;
    for (Piece o = 0; o < p.n(); ++o) {
        std::vector<Size> rest;
        for (std::size_t k = 1; k < p.n(); ++k)
            rest.push_back(p[o + k]);
        Size rest_sum = p.total() - p[o];
        best = std::max(best, p[o] + rest_sum - brute(rest));
    }
    return best;
}

Pizza random_pizza_of(std::mt19937_64& rng, std::size_t n, Size max)
{
    std::vector<Size> s(n);
    for (auto& x : s)
        x = static_cast<Size>(rng() % (max + 1));
    return Pizza(s);
}

} // namespace

TEST_CASE("arc values")
{
    const Pizza p({7, 1, 5, 1});
    CHECK(optimal_arc_value(p, 0, 1) == 7);
    CHECK(optimal_arc_value(p, 2, 1) == 5);
    CHECK(optimal_arc_value(p, 0, 2) == 7);
    CHECK(optimal_arc_value(p, 1, 2) == 5);
    CHECK(optimal_arc_value(p, 1, 3) == 2);
    CHECK(optimal_arc_value(p, 0, 0) == 0);
    CHECK_THROWS_AS(optimal_arc_value(p, 0, 5), Error);
}

TEST_CASE("optimal values")
{
    CHECK(optimal_value(Pizza({5})).alice == 5);
    CHECK(optimal_value(Pizza({1, 0, 1, 0})).alice == 2);
    CHECK(optimal_value(Pizza({1, 1, 1})).alice == 2);
    CHECK(optimal_value(Pizza({2, 2, 2})).alice == 4);
    for (const auto& line : fixture_lines("nine_witnesses.txt")) {
        const auto r = optimal_value(parse_pizza(line));
        CHECK(r.alice == 4);
        CHECK(r.bob == 5);
    }

    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const Pizza p = random_pizza_of(rng, 1 + rng() % 11, 6);
        const auto r = optimal_value(p);
        CHECK(r.alice == brute_pizza(p));
        CHECK(r.alice + r.bob == p.total());
        const GameState end = replay(p, r.line);
        CHECK(end.finished());
        CHECK(end.scores().alice == r.alice);
    }
}

TEST_CASE("naive oracle")
{
    CHECK(naive_tree_value(Pizza({1, 1, 1})) == 2);
    CHECK(naive_tree_value(Pizza({2, 1, 0, 2})) == optimal_value(Pizza({2, 1, 0, 2})).alice);
    const std::vector<Size> alphabet{0, 1};
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const Pizza& p : enumerate(n, alphabet, false))
            CHECK(naive_tree_value(p) == optimal_value(p).alice);
    }
    CHECK_THROWS_AS(naive_tree_value(Pizza(std::vector<Size>(16, 1))), Error);
}

TEST_CASE("symmetry and scaling")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const Pizza p = random_pizza_of(rng, 1 + rng() % 14, 9);
        const Size v = optimal_value(p).alice;
        std::vector<Size> s(p.sizes().begin(), p.sizes().end());
        std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(rng() % s.size()), s.end());
        CHECK(optimal_value(Pizza(s)).alice == v);
        std::reverse(s.begin(), s.end());
        CHECK(optimal_value(Pizza(s)).alice == v);
        for (auto& x : s)
            x *= 3;
        CHECK(optimal_value(Pizza(s)).alice == 3 * v);
    }
}

TEST_CASE("adversarial evaluation")
{
    const Pizza p({1, 0, 1, 0});
    const auto even = evaluate_vs_adversary(p, *even_strategy(p));
    CHECK(even.alice == 2);
    CHECK(replay(p, even.line).scores().alice == 2);

    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const Pizza q = random_pizza_of(rng, 1 + 2 * (rng() % 6), 5);
        const auto opt = optimal_value(q).alice;
        const auto third = evaluate_vs_adversary(q, *one_third_strategy(q));
        CHECK(third.alice <= opt);
        CHECK(third.alice + third.bob == q.total());
        CHECK(replay(q, third.line).scores().alice == third.alice);

        const auto bob = evaluate_bob(q, *optimal_strategy(q, Player::Bob));
        CHECK(bob.bob == q.total() - opt);
        CHECK(bob.alice + bob.bob == q.total());
        if (q.n() >= 3) {
            const auto guard = evaluate_bob(q, *interval_guard_bob(q, {Cut{0}, Cut{1}, Cut{2}}));
            CHECK(guard.bob <= q.total() - opt);
            CHECK(guard.bob <= q.total() - third.alice);
        }
    }

    CHECK_THROWS_AS(evaluate_vs_adversary(p, *optimal_strategy(p, Player::Bob)), Error);
    CHECK_THROWS_AS(evaluate_bob(p, *even_strategy(p)), Error);
    CHECK_THROWS_AS(evaluate_vs_adversary(Pizza({1, 1, 1, 1}), *even_strategy(p)), Error);
}

TEST_CASE("move hints")
{
    GameState s(Pizza({1, 0, 1, 0}));
    const auto hints = best_move_hints(s);
    REQUIRE(hints.size() == 4);
    for (const auto& h : hints) {
        if (h.move.piece % 2 == 0)
            CHECK(h.final_total == 2);
        else
            CHECK(h.final_total <= 2);
    }

    GameState last(Pizza({1, 2, 3}));
    last = apply_move(last, Move{0, Side::Opening});
    last = apply_move(last, Move{1, Side::Right});
    const auto h1 = best_move_hints(last);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].move.piece == 2);
    CHECK(h1[0].final_total == 1 + 3);

    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const Pizza p = random_pizza_of(rng, 1 + rng() % 12, 7);
        GameState g(p);
        while (!g.finished()) {
            const auto hs = best_move_hints(g);
            const auto best = std::max_element(hs.begin(), hs.end(),
                                               [](const MoveHint& a, const MoveHint& b) { return a.gain < b.gain; });
            g = apply_move(g, best->move);
        }
        CHECK(g.scores().alice == optimal_value(p).alice);
    }
}
