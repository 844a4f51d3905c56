#include "fixtures.hpp"
#include "pizza/analysis.hpp"
#include "pizza/harness.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pizza;

namespace {

// Test-side oracles written from the definitions, independent of the library.

bool red(std::size_t n, std::size_t cut, Piece p)
{
    return (p + n - cut) % n % 2 == 0;
}

Size red_total(const Pizza& pizza, std::size_t cut)
{
    Size s = 0;
    for (Piece p = 0; p < pizza.n(); ++p)
        s += red(pizza.n(), cut, p) ? pizza[p] : 0;
    return s;
}

std::pair<Size, std::vector<std::size_t>> brute_best_answers(const Pizza& pizza, Piece p)
{
    Size best = pizza.total() + 1;
    std::vector<std::size_t> cuts;
    for (std::size_t c = 0; c < pizza.n(); ++c) {
        if (!red(pizza.n(), c, p))
            continue;
        const Size v = red_total(pizza, c);
        if (v < best) {
            best = v;
            cuts.clear();
        }
        if (v == best)
            cuts.push_back(c);
    }
    return {best, cuts};
}

// Every even run of pieces starting at the cut, in either direction, has green >= red.
bool even_interval_test(const Pizza& pizza, std::size_t cut)
{
    const auto n = pizza.n();
    for (int dir : {+1, -1}) {
        Size g = 0, r = 0;
        for (std::size_t len = 1; len < n; ++len) {
            const Piece p = dir > 0 ? (cut + len - 1) % n : (cut + 2 * n - len) % n;
            (red(n, cut, p) ? r : g) += pizza[p];
            if (len % 2 == 0 && g < r)
                return false;
        }
    }
    return true;
}

std::vector<std::size_t> indices(const std::vector<Cut>& cuts)
{
    std::vector<std::size_t> out;
    for (const Cut c : cuts)
        out.push_back(c.index);
    return out;
}

bool neighbors(std::size_t n, Cut a, Cut b)
{
    return (a.index + 1) % n == b.index || (b.index + 1) % n == a.index;
}

const std::vector<Pizza>& hard_pizzas()
{
    static const std::vector<Pizza> all = [] {
        std::vector<Pizza> out;
        const std::vector<Size> alphabet{0, 1, 2};
        for (std::size_t n = 1; n <= 11; n += 2) {
            for (const Pizza& p : enumerate(n, alphabet, true)) {
                if (is_hard(p))
                    out.push_back(p);
            }
        }
        return out;
    }();
    return all;
}

} // namespace

TEST_CASE("best answers on small pizzas")
{
    const Pizza uniform({1, 1, 1, 1, 1});
    const auto ba = best_answers(uniform, 0);
    CHECK(ba.value == 3);
    CHECK(indices(ba.cuts) == std::vector<std::size_t>{0, 1, 3});

    const Pizza p({1, 0, 1});
    const auto [value, cuts] = brute_best_answers(p, 1);
    CHECK(best_answers(p, 1).value == value);
    CHECK(indices(best_answers(p, 1).cuts) == cuts);

    const Pizza zero({0, 0, 0, 0, 0, 0, 0});
    for (Piece q = 0; q < 7; ++q) {
        const auto z = best_answers(zero, q);
        CHECK(z.value == 0);
        CHECK(z.cuts.size() == 4);
    }
    CHECK_THROWS_AS(best_answers(Pizza({1, 1}), 0), Error);
}

TEST_CASE("best answer table")
{
    const Pizza uniform({1, 1, 1, 1, 1});
    const auto t = build_best_answer_table(uniform);
    for (std::size_t c = 0; c < 5; ++c) {
        CHECK(t.cut_value[c] == 3);
        std::vector<Piece> r;
        for (Piece q = 0; q < 5; ++q) {
            if (red(5, c, q))
                r.push_back(q);
        }
        CHECK(t.answered[c] == r);
    }
    CHECK_THROWS_AS(build_best_answer_table(Pizza({1, 2, 3, 4})), Error);

    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + 2 * (rng() % 7);
        std::vector<Size> sizes(n);
        for (auto& s : sizes)
            s = static_cast<Size>(rng() % 6);
        const Pizza pz(sizes);
        const auto table = build_best_answer_table(pz);
        std::set<Piece> covered;
        for (Piece q = 0; q < n; ++q) {
            const auto [value, cuts] = brute_best_answers(pz, q);
            CHECK(table.piece_value[q] == value);
            CHECK(indices(table.best_cuts[q]) == cuts);
            for (const auto c : cuts) {
                CHECK(std::count(table.answered[c].begin(), table.answered[c].end(), q) == 1);
            }
        }
        for (std::size_t c = 0; c < n; ++c) {
            CHECK(table.cut_value[c] == red_total(pz, c));
            covered.insert(table.answered[c].begin(), table.answered[c].end());
        }
        CHECK(covered.size() == n);
    }
}

TEST_CASE("classification")
{
    CHECK(classify(Pizza({1, 0, 1, 0})).classification == Difficulty::Easy);
    const auto u = classify(Pizza({1, 1, 1, 1, 1}));
    CHECK(u.classification == Difficulty::Easy);
    CHECK(u.best_fb_value == 3);

    // Smallest odd {0,1}-pizza on which follow-Bob yields at most a third.
    std::optional<Pizza> first;
    const std::vector<Size> alphabet{0, 1};
    for (std::size_t n = 1; n <= 11 && !first; n += 2) {
        for_each_pizza(n, alphabet, true, [&](const Pizza& p) {
            if (p.total() > 0 && 3 * classify(p).best_fb_value <= p.total()) {
                first = p;
                return false;
            }
            return true;
        });
    }
    REQUIRE(first);
    CHECK(*first == fixture_pizza("fb_killer.txt"));
    CHECK(is_hard(*first));
    CHECK(3 * classify(*first).best_fb_value == first->total());
}

TEST_CASE("worst cuts satisfy the even-interval test")
{
    const std::vector<Size> alphabet{0, 1, 2};
    for (std::size_t n = 1; n <= 9; n += 2) {
        for (const Pizza& p : enumerate(n, alphabet, true)) {
            const auto table = build_best_answer_table(p);
            const auto worst = indices(worst_cuts(table));
            std::vector<std::size_t> expected;
            for (std::size_t c = 0; c < n; ++c) {
                if (even_interval_test(p, c))
                    expected.push_back(c);
            }
            CHECK(worst == expected);
        }
    }
    const auto t = build_best_answer_table(Pizza({1, 1, 1, 1, 1}));
    CHECK(worst_cuts(t).size() == 5);
    CHECK(best_cuts(t).size() == 5);
}

TEST_CASE("hard pizzas: worst and best cuts are disjoint when their values differ")
{
    for (const Pizza& p : hard_pizzas()) {
        const auto table = build_best_answer_table(p);
        const auto w = worst_cuts(table), b = best_cuts(table);
        if (table.cut_value[w.front().index] != table.cut_value[b.front().index]) {
            for (const Cut c : w)
                CHECK(std::find(b.begin(), b.end(), c) == b.end());
        }
    }
}

TEST_CASE("special cuts")
{
    CHECK_THROWS_WITH(choose_special_cuts(Pizza({1, 1, 1}), build_best_answer_table(Pizza({1, 1, 1}))),
                      "tripartition defined for hard pizzas only");
    for (const Pizza& p : hard_pizzas()) {
        const auto n = p.n();
        const auto table = build_best_answer_table(p);
        const auto sc = choose_special_cuts(p, table);
        CAPTURE(serialize_pizza(p));
        CHECK(sc.worst == worst_cuts(table).front());
        CHECK(!neighbors(n, sc.worst, sc.best));
        CHECK(!neighbors(n, sc.worst, sc.mid));
        CHECK(!neighbors(n, sc.best, sc.mid));
        CHECK(sc.worst != sc.best);
        CHECK(sc.mid != sc.best);
        CHECK(sc.mid != sc.worst);
        CHECK(!red(n, sc.worst.index, sc.p_hat));
        CHECK(!red(n, sc.best.index, sc.p_hat));
        const auto& mids = table.best_cuts[sc.p_hat];
        CHECK(sc.mid == mids.front());
        // R(Cworst) = A(Cworst)
        std::vector<Piece> r;
        for (Piece q = 0; q < n; ++q) {
            if (red(n, sc.worst.index, q))
                r.push_back(q);
        }
        CHECK(table.answered[sc.worst.index] == r);
        // Lemma 2: best answers are never neighbors.
        std::vector<std::size_t> answering;
        for (std::size_t c = 0; c < n; ++c) {
            if (!table.answered[c].empty())
                answering.push_back(c);
        }
        for (const auto a : answering) {
            for (const auto b : answering) {
                if (a != b)
                    CHECK(!neighbors(n, Cut{a}, Cut{b}));
            }
        }
    }
}

TEST_CASE("tightness arrangement")
{
    const Pizza p = fixture_pizza("tightness.txt");
    REQUIRE(is_hard(p));
    const auto tri = tripartition(p);
    const auto& s = tri.sizes;
    CHECK(std::array<Size, 6>{s.b_major, s.b_minor, s.m_major, s.m_minor, s.w_major, s.w_minor}
          == std::array<Size, 6>{4, 0, 4, 0, 4, 2});
    CHECK(tri.cuts.worst.index == 1);
    CHECK(tri.cuts.best.index == 4);
    CHECK(tri.cuts.mid.index == 7);
    for (const PartName x : all_parts)
        CHECK(tri.part(x).length % 2 == 1);

    const auto w = glue_x_pizza(p, tri, PartName::W);
    CHECK(w.pizza == Pizza({1, 4, 1}));
    CHECK(w.glue_cut.index == 0);
    const auto wt = build_best_answer_table(w.pizza);
    const auto worst = worst_cuts(wt);
    CHECK(std::find(worst.begin(), worst.end(), w.glue_cut) != worst.end());
}

TEST_CASE("tripartition invariants on hard pizzas")
{
    CHECK_THROWS_WITH(tripartition(Pizza({1, 1, 1})), "tripartition defined for hard pizzas only");
    for (const Pizza& p : hard_pizzas()) {
        const auto n = p.n();
        const auto tri = tripartition(p);
        CAPTURE(serialize_pizza(p));
        std::vector<Piece> all;
        for (const PartName x : all_parts) {
            const Interval& I = tri.part(x);
            CHECK(I.length % 2 == 1);
            CHECK(I.length >= 3);
            const auto pieces = I.pieces(n);
            all.insert(all.end(), pieces.begin(), pieces.end());
            Size major = 0, minor = 0;
            for (std::size_t k = 0; k < I.length; ++k)
                (k % 2 == 0 ? minor : major) += p[I.at(k, n)];
            CHECK(minor < major);
            const auto majors = tri.majors(x, n);
            CHECK(majors.size() == I.length / 2);
            CHECK(tri.minors(x, n).front() == I.start);
            CHECK(tri.minors(x, n).back() == I.last(n));

            const auto xp = glue_x_pizza(p, tri, x);
            CHECK(xp.pizza.n() == I.length);
            for (Piece q = 0; q < xp.pizza.n(); ++q) {
                CHECK(xp.pizza[q] == p[xp.index_map[q]]);
                CHECK(xp.local_index(xp.index_map[q], n) == q);
            }
            CHECK(even_interval_test(xp.pizza, xp.glue_cut.index));
        }
        std::sort(all.begin(), all.end());
        CHECK(all.size() == n);
        CHECK(std::unique(all.begin(), all.end()) == all.end());

        const auto& s = tri.sizes;
        CHECK(s.b_major + s.m_minor >= s.b_minor + s.m_major);
        CHECK(s.m_major + s.w_minor >= s.m_minor + s.w_major);
        CHECK(s.b_major + s.w_minor >= s.b_minor + s.w_major);
        CHECK(s.b_major + s.b_minor + s.m_major + s.m_minor + s.w_major + s.w_minor == p.total());
    }
}

TEST_CASE("middle pieces")
{
    CHECK(middle_piece(Pizza({0, 4, 0}), Interval{0, 3}) == 1);
    CHECK(middle_piece(Pizza({0, 1, 0, 1, 0, 1, 0}), Interval{0, 7}) == 3);
    // majors [3,1]: prefix from piece 1 is 3 >= 2 and the suffix 3+1 = 4 >= 2
    CHECK(middle_piece(Pizza({0, 3, 0, 1, 0}), Interval{0, 5}) == 1);
    // majors [1,3]: piece 1 has suffix 1 < 2
    CHECK(middle_piece(Pizza({0, 1, 0, 3, 0}), Interval{0, 5}) == 3);
    CHECK_THROWS_AS(middle_piece(Pizza({1, 2, 3}), Interval{0, 1}), Error);
}
