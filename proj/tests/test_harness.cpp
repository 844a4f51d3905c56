#include "fixtures.hpp"
#include "pizza/harness.hpp"
#include "pizza/report.hpp"
#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

using namespace pizza;

namespace {

std::vector<std::string> as_strings(const std::vector<Pizza>& pizzas)
{
    std::vector<std::string> out;
    for (const Pizza& p : pizzas)
        out.push_back(serialize_pizza(p));
    return out;
}

// Bracelet representative by brute force over all rotations and reflections.
std::vector<Size> brute_canonical(std::vector<Size> s)
{
    std::vector<Size> best = s;
    for (int flip = 0; flip < 2; ++flip) {
        for (std::size_t r = 0; r < s.size(); ++r) {
            std::rotate(s.begin(), s.begin() + 1, s.end());
            best = std::min(best, s);
        }
        std::reverse(s.begin(), s.end());
    }
    return best;
}

std::filesystem::path temp_file(const std::string& name)
{
    const auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p;
}

} // namespace

TEST_CASE("enumeration")
{
    const std::vector<Size> bits{0, 1};
    CHECK(as_strings(enumerate(3, bits, true)) == std::vector<std::string>{"0,0,0", "0,0,1", "0,1,1", "1,1,1"});
    CHECK(enumerate(3, bits, false).size() == 8);

    const std::vector<Size> three{0, 1, 2};
    for (std::size_t n = 1; n <= 7; ++n) {
        std::set<std::vector<Size>> classes;
        for (const Pizza& p : enumerate(n, three, false))
            classes.insert(brute_canonical({p.sizes().begin(), p.sizes().end()}));
        const auto canon = enumerate(n, three, true);
        CHECK(canon.size() == classes.size());
        for (const Pizza& p : canon) {
            const std::vector<Size> s(p.sizes().begin(), p.sizes().end());
            CHECK(classes.count(s) == 1);
            CHECK(canonical_form(s) == s);
            CHECK(is_canonical(s));
        }
    }

    std::size_t seen = 0;
    for_each_pizza(9, three, true, [&](const Pizza&) { return ++seen < 10; });
    CHECK(seen == 10);
}

TEST_CASE("classes share values")
{
    const std::vector<Size> three{0, 1, 2};
    for (const Pizza& p : enumerate(7, three, false)) {
        const Pizza c(canonical_form(p.sizes()));
        CHECK(optimal_value(p).alice == optimal_value(c).alice);
        CHECK(is_hard(p) == is_hard(c));
    }
}

TEST_CASE("random pizzas")
{
    CHECK(random_pizza(12, 7, 99) == random_pizza(12, 7, 99));
    CHECK(random_pizza(12, 7, 99) != random_pizza(12, 7, 100));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Pizza p = random_pizza(10, 3, seed);
        CHECK(p.n() == 10);
        for (const Size s : p.sizes())
            CHECK((s >= 0 && s <= 3));
    }
    const auto fam = PizzaFamily::random(13, 9, 5, 200);
    const auto members = fam.members();
    CHECK(members.size() == 200);
    CHECK(members == fam.members());
    for (const Pizza& p : members)
        CHECK(9 * optimal_value(p).alice >= 4 * p.total());
}

TEST_CASE("family verification")
{
    VerifyOptions opts;
    opts.threads = 2;
    const auto even = verify_family(PizzaFamily::exhaustive({2, 4, 6, 8}, {0, 1, 2}), "even-half", opts);
    CHECK(even.ok());
    CHECK(even.checked > 0);

    const auto nine = verify_family(PizzaFamily::exhaustive({3, 5, 7, 9, 11}, {0, 1, 2}), "four-ninths-optimal", opts);
    CHECK(nine.ok());
    // Nothing this small reaches four ninths exactly.
    CHECK(nine.tight_count == 0);

    const auto third = verify_family(PizzaFamily::exhaustive({3, 5, 7, 9}, {0, 1, 2}), "one-third", opts);
    CHECK(third.ok());
    CHECK(third.tight_count > 0);
    for (const auto& w : third.witnesses) {
        CHECK(evaluate_vs_adversary(w.pizza, *one_third_strategy(w.pizza)).alice == w.value);
        CHECK(3 * w.value == w.pizza.total());
    }

    const auto six = verify_family(PizzaFamily::exhaustive({3, 5, 7, 9, 11}, {0, 1, 2}), "lemma6", opts);
    CHECK(six.ok());
    CHECK(six.checked == 153);
    CHECK(six.not_applicable + six.checked == nine.checked + nine.not_applicable);

    // Deterministic regardless of worker count.
    VerifyOptions single;
    single.threads = 1;
    const auto again = verify_family(PizzaFamily::exhaustive({3, 5, 7, 9}, {0, 1, 2}), "one-third", single);
    CHECK(report_json(again).dump().size() > 0);
    CHECK(again.tight_count == third.tight_count);
    CHECK(as_strings([&] {
              std::vector<Pizza> v;
              for (const auto& w : again.witnesses)
                  v.push_back(w.pizza);
              return v;
          }())
          == as_strings([&] {
                 std::vector<Pizza> v;
                 for (const auto& w : third.witnesses)
                     v.push_back(w.pizza);
                 return v;
             }()));

    CHECK_THROWS_AS(verify_family(PizzaFamily::list({Pizza({1})}), "no-such-claim"), Error);
}

TEST_CASE("claims report violations")
{
    // The fB-killer meets the one-third bound with equality.
    const auto report = verify_family(PizzaFamily::list({fixture_pizza("fb_killer.txt")}), "one-third");
    CHECK(report.ok());
    CHECK(report.tight_count == 1);

    VerificationReport a, b;
    a.claim = b.claim = "x";
    a.checked = 2;
    b.checked = 3;
    b.violations.push_back(Violation{Pizza({1}), "broken"});
    for (int i = 0; i < 20; ++i)
        a.witnesses.push_back(Witness{Pizza({i}), i});
    a.merge(b, 4, 64);
    CHECK(a.checked == 5);
    CHECK(!a.ok());
    CHECK(a.witnesses.size() == 4);
}

TEST_CASE("registry")
{
    std::set<std::string> ids;
    for (const Claim& c : claim_registry())
        ids.insert(c.id);
    for (const char* id : {"even-half", "one-third", "three-sevenths", "four-ninths-optimal", "four-ninths-strategy",
                           "oracle-naive", "symmetry", "shave", "lemma2", "obs5", "lemma4", "lemma6", "lemma7",
                           "obs9", "table1", "table2", "lemma10", "lemma11", "case1", "identities"})
        CHECK(ids.count(id) == 1);
    CHECK_THROWS_AS(find_claim("missing"), Error);
}

TEST_CASE("extremal search")
{
    SearchOptions opts;
    opts.total = 9;
    opts.threads = 2;
    const std::vector<Size> three{0, 1, 2};
    const auto nine = find_extremal(15, three, optimal_ratio_at_most(4, 9), opts);
    CHECK(as_strings(nine.matches) == fixture_lines("nine_witnesses.txt"));

    const std::vector<Size> bits{0, 1};
    SearchOptions b;
    const auto r21 = find_extremal(21, bits, optimal_ratio_at_most(4, 9), b);
    CHECK(as_strings(r21.matches) == fixture_lines("binary21.txt"));

    CHECK_THROWS_AS(find_extremal(16, three, optimal_ratio_at_most(4, 9)), Error);
    const auto small = find_extremal(9, bits, optimal_ratio_at_most(4, 9));
    CHECK(small.matches.empty());
}

TEST_CASE("search checkpoints resume")
{
    const auto path = temp_file("pizza_checkpoint_test.ndjson");
    const std::vector<Size> three{0, 1, 2};
    SearchOptions opts;
    opts.total = 9;
    opts.threads = 1;
    opts.checkpoint = path.string();
    const auto first = find_extremal(15, three, optimal_ratio_at_most(4, 9), opts);
    CHECK(first.resumed_units == 0);
    CHECK(std::filesystem::exists(path));

    const auto second = find_extremal(15, three, optimal_ratio_at_most(4, 9), opts);
    CHECK(second.resumed_units == first.units);
    CHECK(as_strings(second.matches) == as_strings(first.matches));

    // Drop the tail of the file: the unfinished prefixes are redone.
    const auto lines = [&] {
        std::ifstream in(path);
        std::vector<std::string> out;
        std::string l;
        while (std::getline(in, l))
            out.push_back(l);
        return out;
    }();
    REQUIRE(lines.size() > 2);
    {
        std::ofstream out(path, std::ios::trunc);
        for (std::size_t i = 0; i < lines.size() / 2; ++i)
            out << lines[i] << '\n';
        out << "{\"n\":15,\"trunc";
    }
    const auto third = find_extremal(15, three, optimal_ratio_at_most(4, 9), opts);
    CHECK(third.resumed_units == lines.size() / 2);
    CHECK(as_strings(third.matches) == as_strings(first.matches));

    // Lines written by a different search are ignored.
    SearchOptions other = opts;
    other.total = 8;
    CHECK(find_extremal(15, three, optimal_ratio_at_most(4, 9), other).resumed_units == 0);
    std::filesystem::remove(path);
}

TEST_CASE("minimality scan")
{
    const std::vector<Size> bits{0, 1};
    const auto r = minimality_scan(13, bits, optimal_ratio_at_most(4, 9));
    CHECK(r.first_n == 0);
    CHECK(r.scanned.size() == 13);
    CHECK(r.matches.empty());
}
