#include "pizza/harness.hpp"

#include "pizza/analysis.hpp"
#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace pizza {

namespace {

bool pizza_less(const Pizza& a, const Pizza& b)
{
    if (a.n() != b.n())
        return a.n() < b.n();
    return std::lexicographical_compare(a.sizes().begin(), a.sizes().end(), b.sizes().begin(), b.sizes().end());
}

std::vector<Size> normalized_alphabet(std::span<const Size> alphabet)
{
    std::vector<Size> a(alphabet.begin(), alphabet.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.empty())
        throw Error(ErrorKind::InvalidArgument, "alphabet must not be empty");
    if (a.front() < 0)
        throw Error(ErrorKind::InvalidArgument, "alphabet sizes must be non-negative");
    return a;
}

// Compares the rotation of s starting at `shift` (read backwards if reversed) with s itself.
int compare_rotation(std::span<const Size> s, std::size_t shift, bool reversed)
{
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Size v = reversed ? s[(shift + n - i) % n] : s[(shift + i) % n];
        if (v != s[i])
            return v < s[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

std::vector<Size> canonical_form(std::span<const Size> sizes)
{
    const std::size_t n = sizes.size();
    std::vector<Size> best(sizes.begin(), sizes.end());
    std::vector<Size> candidate(n);
    for (const bool reversed : {false, true}) {
        for (std::size_t shift = 0; shift < n; ++shift) {
            for (std::size_t i = 0; i < n; ++i)
                candidate[i] = reversed ? sizes[(shift + n - i) % n] : sizes[(shift + i) % n];
            if (candidate < best)
                best = candidate;
        }
    }
    return best;
}

bool is_canonical(std::span<const Size> sizes)
{
    for (const bool reversed : {false, true}) {
        for (std::size_t shift = 0; shift < sizes.size(); ++shift) {
            if (compare_rotation(sizes, shift, reversed) < 0)
                return false;
        }
    }
    return true;
}

namespace {

/**
 * Depth-first generation below a fixed prefix. Canonical generation only
 * emits sequences whose first entry is their minimum, then filters.
 */
class Generator {
public:
    Generator(std::size_t n, std::vector<Size> alphabet, bool canonical, std::optional<Size> total)
        : n_(n), alphabet_(std::move(alphabet)), canonical_(canonical), total_(total), seq_(n)
    {
    }

    /// Returns false if the visitor asked to stop.
    bool run(std::span<const Size> prefix, const std::function<bool(const Pizza&)>& visit)
    {
        Size sum = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            seq_[i] = prefix[i];
            sum += prefix[i];
        }
        visit_ = &visit;
        return descend(prefix.size(), sum);
    }

    std::uint64_t leaves() const noexcept { return leaves_; }

private:
    bool descend(std::size_t i, Size sum)
    {
        if (total_) {
            const Size remaining = static_cast<Size>(n_ - i);
            const Size floor = canonical_ && i > 0 ? seq_[0] : alphabet_.front();
            if (sum + remaining * floor > *total_ || sum + remaining * alphabet_.back() < *total_)
                return true;
        }
        if (i == n_) {
            ++leaves_;
            if (canonical_ && !is_canonical(seq_))
                return true;
            return (*visit_)(Pizza(seq_));
        }
        for (const Size v : alphabet_) {
            if (canonical_ && i > 0 && v < seq_[0])
                continue;
            seq_[i] = v;
            if (!descend(i + 1, sum + v))
                return false;
        }
        return true;
    }

    std::size_t n_;
    std::vector<Size> alphabet_;
    bool canonical_;
    std::optional<Size> total_;
    std::vector<Size> seq_;
    const std::function<bool(const Pizza&)>* visit_ = nullptr;
    std::uint64_t leaves_ = 0;
};

} // namespace

void for_each_pizza(std::size_t n, std::span<const Size> alphabet, bool canonical,
                    const std::function<bool(const Pizza&)>& visit)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "pizzas need at least one piece");
    Generator gen(n, normalized_alphabet(alphabet), canonical, std::nullopt);
    gen.run({}, visit);
}

std::vector<Pizza> enumerate(std::size_t n, std::span<const Size> alphabet, bool canonical)
{
    std::vector<Pizza> out;
    for_each_pizza(n, alphabet, canonical, [&](const Pizza& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

Pizza random_pizza(std::size_t n, Size max_size, std::uint64_t seed)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "pizzas need at least one piece");
    if (max_size < 0)
        throw Error(ErrorKind::InvalidArgument, "max size must be non-negative");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Size> dist(0, max_size);
    std::vector<Size> sizes(n);
    for (auto& s : sizes)
        s = dist(rng);
    return Pizza(std::move(sizes));
}

PizzaFamily PizzaFamily::exhaustive(std::vector<std::size_t> ns, std::vector<Size> alphabet, bool canonical)
{
    PizzaFamily f;
    f.kind = Kind::Exhaustive;
    f.piece_counts = std::move(ns);
    f.alphabet = std::move(alphabet);
    f.canonical = canonical;
    return f;
}

PizzaFamily PizzaFamily::random(std::size_t n, Size max_size, std::uint64_t seed, std::size_t count)
{
    PizzaFamily f;
    f.kind = Kind::Random;
    f.random_n = n;
    f.max_size = max_size;
    f.seed = seed;
    f.count = count;
    return f;
}

PizzaFamily PizzaFamily::list(std::vector<Pizza> pizzas)
{
    PizzaFamily f;
    f.kind = Kind::List;
    f.pizzas = std::move(pizzas);
    return f;
}

std::string PizzaFamily::describe() const
{
    std::ostringstream out;
    switch (kind) {
    case Kind::Exhaustive: {
        out << "exhaustive n=";
        for (std::size_t i = 0; i < piece_counts.size(); ++i)
            out << (i ? "," : "") << piece_counts[i];
        out << " alphabet={";
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            out << (i ? "," : "") << alphabet[i];
        out << "}" << (canonical ? " canonical" : "");
        break;
    }
    case Kind::Random:
        out << "random n=" << random_n << " max=" << max_size << " seed=" << seed << " count=" << count;
        break;
    case Kind::List:
        out << "list of " << pizzas.size();
        break;
    }
    return out.str();
}

std::vector<Pizza> PizzaFamily::members() const
{
    switch (kind) {
    case Kind::Exhaustive: {
        std::vector<Pizza> out;
        for (const std::size_t n : piece_counts) {
            auto part = enumerate(n, alphabet, canonical);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    case Kind::Random: {
        std::vector<Pizza> out;
        std::mt19937_64 seeds(seed);
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(random_pizza(random_n, max_size, seeds()));
        return out;
    }
    case Kind::List:
        return pizzas;
    }
    return {};
}

// ---------------------------------------------------------------------------
// Claims

namespace {

Size alice_value(const Pizza& pizza, const StrategyPtr& s)
{
    return evaluate_vs_adversary(pizza, *s).alice;
}

ClaimOutcome not_applicable()
{
    ClaimOutcome o;
    o.applicable = false;
    return o;
}

/// Collects failures of several sub-checks into one outcome.
struct Checker {
    ClaimOutcome outcome;

    void expect(bool ok, const std::string& what)
    {
        if (ok)
            return;
        if (outcome.holds)
            outcome.detail = what;
        outcome.holds = false;
    }
};

/// value * den >= num * total with equality tracking.
ClaimOutcome ratio_outcome(Size value, Size total, Size num, Size den, const std::string& what)
{
    ClaimOutcome o;
    o.value = value;
    o.holds = den * value >= num * total;
    o.tight = total > 0 && den * value == num * total;
    if (!o.holds)
        o.detail = what + " " + std::to_string(value) + " below " + std::to_string(num) + "/" + std::to_string(den)
                   + " of " + std::to_string(total);
    return o;
}

/// Sizes of red and green pieces of the coloring from cut inside the pieces [first, first+len).
std::pair<Size, Size> red_green(const Pizza& pizza, Cut cut, Piece first, std::size_t len)
{
    const auto n = pizza.n();
    Size red = 0;
    Size green = 0;
    for (std::size_t k = 0; k < len; ++k) {
        const Piece p = (first + k) % n;
        (is_red(n, cut, p) ? red : green) += pizza[p];
    }
    return {red, green};
}

/// Even intervals with one end at `cut`: (first piece, length), both directions.
std::vector<std::pair<Piece, std::size_t>> even_intervals_at(std::size_t n, Cut cut)
{
    std::vector<std::pair<Piece, std::size_t>> out;
    for (std::size_t len = 2; len < n; len += 2) {
        out.emplace_back(cut.index, len);
        out.emplace_back((cut.index + n - len) % n, len);
    }
    return out;
}

bool green_dominates_everywhere(const Pizza& pizza, Cut cut, std::optional<Piece> avoid)
{
    const auto n = pizza.n();
    for (const auto& [first, len] : even_intervals_at(n, cut)) {
        if (avoid && Interval{first, len}.contains(*avoid, n))
            continue;
        const auto [red, green] = red_green(pizza, cut, first, len);
        if (green < red)
            return false;
    }
    return true;
}

std::string cut_name(Cut c)
{
    return "cut " + std::to_string(c.index);
}

ClaimOutcome check_lemma2(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return not_applicable();
    const auto table = build_best_answer_table(pizza);
    const auto n = pizza.n();
    Checker c;
    for (std::size_t i = 0; i < n; ++i) {
        const Cut a{i};
        const Cut b{(i + 1) % n};
        c.expect(!(table.is_best_answer(a) && table.is_best_answer(b)),
                 "neighboring best answers " + cut_name(a) + " and " + cut_name(b));
    }
    return c.outcome;
}

ClaimOutcome check_obs5(const Pizza& pizza)
{
    if (pizza.n() % 2 == 0)
        return not_applicable();
    const auto table = build_best_answer_table(pizza);
    const auto worst = worst_cuts(table);
    Checker c;
    for (std::size_t i = 0; i < pizza.n(); ++i) {
        const Cut cut{i};
        const bool in_worst = std::find(worst.begin(), worst.end(), cut) != worst.end();
        c.expect(in_worst == green_dominates_everywhere(pizza, cut, std::nullopt),
                 cut_name(cut) + (in_worst ? " is worst but fails" : " passes but is not worst"));
    }
    return c.outcome;
}

ClaimOutcome check_lemma4(const Pizza& pizza)
{
    if (pizza.n() % 2 == 0)
        return not_applicable();
    const auto table = build_best_answer_table(pizza);
    Checker c;
    for (Piece p = 0; p < pizza.n(); ++p) {
        for (const Cut cut : table.best_cuts[p])
            c.expect(green_dominates_everywhere(pizza, cut, p),
                     cut_name(cut) + " answering piece " + std::to_string(p));
    }
    return c.outcome;
}

ClaimOutcome check_lemma6(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return not_applicable();
    const auto table = build_best_answer_table(pizza);
    const auto tri = tripartition(pizza, table);
    const auto& s = tri.sizes;
    Checker c;
    c.expect(s.b_major + s.m_minor >= s.b_minor + s.m_major, "b_major + m_minor < b_minor + m_major");
    c.expect(s.m_major + s.w_minor >= s.m_minor + s.w_major, "m_major + w_minor < m_minor + w_major");
    c.expect(s.b_major + s.w_minor >= s.b_minor + s.w_major, "b_major + w_minor < b_minor + w_major");
    for (const PartName x : all_parts) {
        c.expect(s.minor(x) < s.major(x), std::string("minor not below major in ") + part_letter(x));
        const auto len = tri.part(x).length;
        c.expect(len % 2 == 1 && len >= 3, std::string("part ") + part_letter(x) + " not odd with three pieces");
    }
    const auto red = coloring_from_cut(pizza, tri.cuts.worst).red;
    auto red_sorted = red;
    std::sort(red_sorted.begin(), red_sorted.end());
    c.expect(red_sorted == table.answered[tri.cuts.worst.index], "R(Cworst) differs from A(Cworst)");
    c.expect(s.total() == pizza.total(), "parts do not cover the pizza");
    return c.outcome;
}

ClaimOutcome check_lemma7(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return not_applicable();
    const auto tri = tripartition(pizza);
    const auto n = pizza.n();
    Checker c;
    for (const PartName x : all_parts) {
        const Interval& part = tri.part(x);
        for (std::size_t len = 2; len < part.length; len += 2) {
            for (const bool from_start : {true, false}) {
                Size major = 0;
                Size minor = 0;
                for (std::size_t k = 0; k < len; ++k) {
                    const std::size_t off = from_start ? k : part.length - 1 - k;
                    (is_minor_offset(off) ? minor : major) += pizza[part.at(off, n)];
                }
                c.expect(major >= minor, std::string("part ") + part_letter(x) + " even interval of length "
                                             + std::to_string(len) + (from_start ? " at start" : " at end"));
            }
        }
    }
    return c.outcome;
}

ClaimOutcome check_obs9(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return not_applicable();
    const auto tri = tripartition(pizza);
    Checker c;
    for (const PartName x : all_parts) {
        const XPizza xp = glue_x_pizza(pizza, tri, x);
        const auto worst = worst_cuts(build_best_answer_table(xp.pizza));
        c.expect(std::find(worst.begin(), worst.end(), xp.glue_cut) != worst.end(),
                 std::string("glue cut of ") + part_letter(x) + "-pizza not worst");
    }
    return c.outcome;
}

ClaimOutcome check_bound(const Pizza& pizza, const StrategyPtr& s, const StrategyValueBound& bound,
                         const PartSizes& sizes, Checker& c)
{
    const Size v = alice_value(pizza, s);
    const Rational b = bound.evaluate(sizes);
    c.expect(Rational(v) >= b, s->id() + " value " + std::to_string(v) + " below " + bound.to_string());
    if (Rational(v) == b)
        c.outcome.tight = true;
    return c.outcome;
}

ClaimOutcome check_table1(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return not_applicable();
    const auto table = build_best_answer_table(pizza);
    const auto tri = tripartition(pizza, table);
    Checker c;
    check_bound(pizza, fb_strategy(pizza, table, tri.cuts.best), fb_bound(CutRole::Best), tri.sizes, c);
    check_bound(pizza, fb_strategy(pizza, table, tri.cuts.mid), fb_bound(CutRole::Mid), tri.sizes, c);
    check_bound(pizza, fb_strategy(pizza, table, tri.cuts.worst), fb_bound(CutRole::Worst), tri.sizes, c);
    return c.outcome;
}

ClaimOutcome check_table2(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return not_applicable();
    const auto tri = tripartition(pizza);
    Checker c;
    for (const PartName x : all_parts)
        check_bound(pizza, mfb_strategy(pizza, tri, x), mfb_bound(x), tri.sizes, c);
    return c.outcome;
}

/// fB from every opening, and mfB on every part when hard with Cworst := cut.
std::vector<StrategyPtr> pasteable_strategies(const Pizza& pizza, Cut cut)
{
    std::vector<StrategyPtr> out;
    for (Piece p = 0; p < pizza.n(); ++p)
        out.push_back(follow_strategy(pizza, p, "fb-open:" + std::to_string(p)));
    if (is_hard(pizza)) {
        const auto tri = tripartition(pizza, cut);
        for (const PartName x : all_parts)
            out.push_back(mfb_strategy(pizza, tri, x));
    }
    return out;
}

void check_exception_pairing(const Pizza& pizza, Cut cut, const std::string& where, Checker& c)
{
    for (const auto& s : pasteable_strategies(pizza, cut)) {
        const Size plain = alice_value(pizza, s);
        const Size with_rule = alice_value(pizza, exception_at_cut(s, cut));
        c.expect(with_rule >= plain, where + ": exception at " + cut_name(cut) + " lowers " + s->id() + " from "
                                         + std::to_string(plain) + " to " + std::to_string(with_rule));
    }
}

ClaimOutcome check_lemma10(const Pizza& pizza)
{
    if (pizza.n() % 2 == 0)
        return not_applicable();
    Checker c;
    for (const Cut cut : worst_cuts(build_best_answer_table(pizza)))
        check_exception_pairing(pizza, cut, "pizza", c);
    if (is_hard(pizza)) {
        const auto tri = tripartition(pizza);
        for (const PartName x : all_parts) {
            const XPizza xp = glue_x_pizza(pizza, tri, x);
            check_exception_pairing(xp.pizza, xp.glue_cut, std::string(1, part_letter(x)) + "-pizza", c);
        }
    }
    return c.outcome;
}

ClaimOutcome check_lemma11(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return not_applicable();
    const auto tri = tripartition(pizza);
    Checker c;
    for (const PartName x : all_parts) {
        const XPizza xp = glue_x_pizza(pizza, tri, x);
        const Rational outside = outside_bound(x).evaluate(tri.sizes);
        for (const auto& s : pasteable_strategies(xp.pizza, xp.glue_cut)) {
            const Size inner = alice_value(xp.pizza, s);
            const Size whole = alice_value(pizza, on_part(pizza, tri, x, s));
            c.expect(Rational(whole) >= Rational(inner) + outside,
                     std::string("on-part ") + part_letter(x) + " with " + s->id() + ": " + std::to_string(whole)
                         + " below " + std::to_string(inner) + " + outside bound");
        }
    }
    return c.outcome;
}

ClaimOutcome check_case1(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return not_applicable();
    const auto tri = tripartition(pizza);
    const XPizza w = glue_x_pizza(pizza, tri, PartName::W);
    if (is_hard(w.pizza))
        return not_applicable();
    const Size v = alice_value(pizza, on_part(pizza, tri, PartName::W, best_fb_strategy(w.pizza)));
    const auto& s = tri.sizes;
    // v >= b_minor + m_major + ceil(w / 2)
    const Size slack = 2 * (v - s.b_minor - s.m_major) - (s.w_major + s.w_minor);
    ClaimOutcome o;
    o.value = v;
    o.holds = slack >= 0;
    o.tight = slack == 0 || slack == 1; // equality after rounding w/2 up
    if (!o.holds)
        o.detail = "on-part W value " + std::to_string(v) + " below b_minor + m_major + ceil(w/2)";
    return o;
}

ClaimOutcome check_identities(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return not_applicable();
    const auto tri = tripartition(pizza);
    const auto& s = tri.sizes;
    Checker c;
    // 2b_ + 3/2 m^ + 3/2 w^ + 3/2 (b^ + m_ + w_) = 3/2 S + b_/2, doubled.
    const Size lhs = 4 * s.b_minor + 3 * s.m_major + 3 * s.w_major + 3 * (s.b_major + s.m_minor + s.w_minor);
    c.expect(lhs == 3 * pizza.total() + s.b_minor, "three-sevenths averaging identity");
    const XPizza w = glue_x_pizza(pizza, tri, PartName::W);
    if (is_hard(w.pizza)) {
        const auto wt = tripartition(w.pizza, w.glue_cut);
        const auto& t = wt.sizes;
        c.expect(s.w_minor == t.b_minor + t.m_minor + t.w_major, "w_minor identity on the W-pizza");
        c.expect(s.w_major == t.b_major + t.m_major + t.w_minor, "w_major identity on the W-pizza");
    }
    return c.outcome;
}

ClaimOutcome check_symmetry(const Pizza& pizza)
{
    const Size v = optimal_value(pizza).alice;
    const auto n = pizza.n();
    const auto sizes = pizza.sizes();
    Checker c;
    c.outcome.value = v;
    std::vector<Size> rot(n);
    for (const bool reversed : {false, true}) {
        for (std::size_t shift = 0; shift < n; ++shift) {
            for (std::size_t i = 0; i < n; ++i)
                rot[i] = reversed ? sizes[(shift + n - i) % n] : sizes[(shift + i) % n];
            c.expect(optimal_value(Pizza(rot)).alice == v,
                     std::string(reversed ? "reflection" : "rotation") + " by " + std::to_string(shift));
        }
    }
    for (const Size k : {2, 3}) {
        std::vector<Size> scaled(sizes.begin(), sizes.end());
        for (auto& x : scaled)
            x *= k;
        c.expect(optimal_value(Pizza(scaled)).alice == k * v, "scaling by " + std::to_string(k));
    }
    return c.outcome;
}

ClaimOutcome check_shave(const Pizza& pizza)
{
    const auto sizes = pizza.sizes();
    if (*std::min_element(sizes.begin(), sizes.end()) <= 0)
        return not_applicable();
    const Size v = optimal_value(pizza).alice;
    const Rational bound = shave_bound(pizza);
    Checker c;
    c.outcome.value = v;
    c.expect(Rational(v) >= bound, "optimal value below the shave bound");
    c.expect(bound > Rational(4 * pizza.total(), 9), "shave bound not above 4/9 of the total");
    c.outcome.tight = Rational(v) == bound;
    return c.outcome;
}

ClaimOutcome check_oracle(const Pizza& pizza)
{
    if (pizza.n() > naive_tree_limit)
        return not_applicable();
    const Size dp = optimal_value(pizza).alice;
    const Size tree = naive_tree_value(pizza);
    ClaimOutcome o;
    o.value = dp;
    o.holds = dp == tree;
    if (!o.holds)
        o.detail = "dp " + std::to_string(dp) + " vs tree " + std::to_string(tree);
    return o;
}

std::vector<Claim> build_registry()
{
    std::vector<Claim> r;
    r.push_back({"even-half", "even strategy eats at least 1/2 of an even pizza", [](const Pizza& p) {
                     if (p.n() % 2 != 0)
                         return not_applicable();
                     return ratio_outcome(alice_value(p, even_strategy(p)), p.total(), 1, 2, "even strategy");
                 }});
    r.push_back({"one-third", "one-third strategy eats at least 1/3 of an odd pizza", [](const Pizza& p) {
                     if (p.n() % 2 == 0)
                         return not_applicable();
                     return ratio_outcome(alice_value(p, one_third_strategy(p)), p.total(), 1, 3, "one-third");
                 }});
    r.push_back({"three-sevenths", "best of three eats at least 3/7", [](const Pizza& p) {
                     return ratio_outcome(best_of_three(p).value, p.total(), 3, 7, "best-of-three");
                 }});
    r.push_back({"four-ninths-optimal", "optimal play eats at least 4/9", [](const Pizza& p) {
                     return ratio_outcome(optimal_value(p).alice, p.total(), 4, 9, "optimal");
                 }});
    r.push_back({"four-ninths-strategy", "best of four eats at least 4/9", [](const Pizza& p) {
                     return ratio_outcome(best_of_four(p).value, p.total(), 4, 9, "best-of-four");
                 }});
    r.push_back({"oracle-naive", "interval DP equals full minimax", check_oracle});
    r.push_back({"symmetry", "optimal value invariant under rotation, reflection and scaling", check_symmetry});
    r.push_back({"shave", "optimal value above the shaved 4/9 bound when all pieces are positive", check_shave});
    r.push_back({"lemma2", "hard pizzas have no neighboring best answers", check_lemma2});
    r.push_back({"obs5", "worst cuts are exactly the cuts green-dominant on even intervals", check_obs5});
    r.push_back({"lemma4", "best answers are green-dominant on even intervals avoiding the piece", check_lemma4});
    r.push_back({"lemma6", "part inequalities, minor below major, R(Cworst) = A(Cworst)", check_lemma6});
    r.push_back({"lemma7", "majors dominate minors on even intervals at part borders", check_lemma7});
    r.push_back({"obs9", "glue cut is a worst cut of every X-pizza", check_obs9});
    r.push_back({"table1", "follow-Bob bounds for Cbest, Cmid, Cworst", check_table1});
    r.push_back({"table2", "modified follow-Bob bounds for B, M, W", check_table2});
    r.push_back({"lemma10", "exception rule at a worst cut never lowers the outcome", check_lemma10});
    r.push_back({"lemma11", "on-part value at least X-pizza value plus the outside bound", check_lemma11});
    r.push_back({"case1", "on-part W with an easy W-pizza reaches b_minor + m_major + ceil(w/2)", check_case1});
    r.push_back({"identities", "averaging and W-pizza size identities", check_identities});
    return r;
}

} // namespace

const std::vector<Claim>& claim_registry()
{
    static const std::vector<Claim> registry = build_registry();
    return registry;
}

const Claim& find_claim(const std::string& id)
{
    for (const auto& c : claim_registry()) {
        if (c.id == id)
            return c;
    }
    throw Error(ErrorKind::NotFound, "unknown claim id '" + id + "'");
}

// ---------------------------------------------------------------------------
// Verification

unsigned default_threads()
{
    if (const char* env = std::getenv("PIZZA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

unsigned resolve_threads(unsigned requested)
{
    return requested == 0 ? default_threads() : requested;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn)
{
    std::atomic<std::size_t> next{0};
    const auto worker = [&](unsigned id) {
        for (std::size_t i = next++; i < count; i = next++)
            fn(id, i);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker, t);
    worker(0);
    for (auto& t : pool)
        t.join();
}

} // namespace

void VerificationReport::merge(const VerificationReport& other, std::size_t max_witnesses, std::size_t max_violations)
{
    checked += other.checked;
    not_applicable += other.not_applicable;
    tight_count += other.tight_count;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    std::sort(violations.begin(), violations.end(),
              [](const Violation& a, const Violation& b) { return pizza_less(a.pizza, b.pizza); });
    std::sort(witnesses.begin(), witnesses.end(),
              [](const Witness& a, const Witness& b) { return pizza_less(a.pizza, b.pizza); });
    if (violations.size() > max_violations)
        violations.erase(violations.begin() + static_cast<std::ptrdiff_t>(max_violations), violations.end());
    if (witnesses.size() > max_witnesses)
        witnesses.erase(witnesses.begin() + static_cast<std::ptrdiff_t>(max_witnesses), witnesses.end());
}

VerificationReport verify_family(const PizzaFamily& family, const std::string& claim_id, const VerifyOptions& options)
{
    const Claim& claim = find_claim(claim_id);
    const auto start = std::chrono::steady_clock::now();
    const auto members = family.members();
    const unsigned threads = resolve_threads(options.threads);

    std::vector<VerificationReport> partial(threads);
    parallel_for(members.size(), threads, [&](unsigned id, std::size_t i) {
        const Pizza& p = members[i];
        VerificationReport& r = partial[id];
        ClaimOutcome o;
        try {
            o = claim.check(p);
        } catch (const Error& e) {
            o.holds = false;
            o.detail = std::string("error: ") + e.what();
        }
        if (!o.applicable) {
            ++r.not_applicable;
            return;
        }
        ++r.checked;
        if (!o.holds && r.violations.size() < options.max_violations)
            r.violations.push_back(Violation{p, o.detail});
        if (o.holds && o.tight) {
            ++r.tight_count;
            r.witnesses.push_back(Witness{p, o.value});
            if (r.witnesses.size() > 4 * options.max_witnesses)
                r.merge(VerificationReport{}, options.max_witnesses, options.max_violations);
        }
    });

    VerificationReport report;
    report.claim = claim.id;
    report.family = family.describe();
    for (const auto& r : partial)
        report.merge(r, options.max_witnesses, options.max_violations);
    report.wall_time =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

// ---------------------------------------------------------------------------
// Extremal search

PizzaPredicate optimal_ratio_at_most(Size num, Size den)
{
    return [num, den](const Pizza& p) {
        return p.total() > 0 && den * optimal_value(p).alice <= num * p.total();
    };
}

namespace {

std::uint64_t space_size(std::size_t n, std::size_t k)
{
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (s > search_space_limit * 64)
            return s;
        s *= k;
    }
    return s;
}

struct CheckpointKey {
    std::size_t n;
    std::vector<Size> alphabet;
    std::optional<Size> total;
};

nlohmann::json key_json(const CheckpointKey& k)
{
    nlohmann::json j;
    j["n"] = k.n;
    j["alphabet"] = k.alphabet;
    j["total"] = k.total ? nlohmann::json(*k.total) : nlohmann::json(nullptr);
    return j;
}

bool same_key(const nlohmann::json& line, const nlohmann::json& key)
{
    return line.value("n", nlohmann::json()) == key["n"] && line.value("alphabet", nlohmann::json()) == key["alphabet"]
           && line.value("total", nlohmann::json()) == key["total"];
}

/// Finished prefixes and their matches from an NDJSON checkpoint file.
std::map<std::vector<Size>, std::vector<std::vector<Size>>> load_checkpoint(const std::string& path,
                                                                           const nlohmann::json& key)
{
    std::map<std::vector<Size>, std::vector<std::vector<Size>>> done;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception&) {
            continue; // torn final line from an interrupted run
        }
        if (!same_key(j, key))
            continue;
        done[j.at("prefix").get<std::vector<Size>>()] = j.at("matches").get<std::vector<std::vector<Size>>>();
    }
    return done;
}

} // namespace

SearchResult find_extremal(std::size_t n, std::span<const Size> alphabet_in, const PizzaPredicate& predicate,
                           const SearchOptions& options)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "pizzas need at least one piece");
    const auto alphabet = normalized_alphabet(alphabet_in);
    const std::uint64_t space = space_size(n, alphabet.size());
    if (space > search_space_limit && !options.force)
        throw Error(ErrorKind::Infeasible, "search space of " + std::to_string(alphabet.size()) + "^"
                                               + std::to_string(n) + " pizzas exceeds the limit; force to run");

    // Work units: canonical-compatible prefixes of a fixed length.
    std::size_t k = 0;
    for (std::uint64_t units = 1; k < n && units < 256; ++k)
        units *= alphabet.size();
    std::vector<std::vector<Size>> prefixes;
    {
        std::vector<Size> cur(k);
        const std::function<void(std::size_t)> build = [&](std::size_t i) {
            if (i == k) {
                prefixes.push_back(cur);
                return;
            }
            for (const Size v : alphabet) {
                if (i > 0 && v < cur[0])
                    continue;
                cur[i] = v;
                build(i + 1);
            }
        };
        build(0);
    }

    const CheckpointKey key{n, alphabet, options.total};
    const nlohmann::json key_j = key_json(key);
    std::map<std::vector<Size>, std::vector<std::vector<Size>>> done;
    if (options.checkpoint)
        done = load_checkpoint(*options.checkpoint, key_j);

    SearchResult result;
    std::mutex mutex;
    std::ofstream checkpoint;
    if (options.checkpoint)
        checkpoint.open(*options.checkpoint, std::ios::app);
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> visited{0};

    std::vector<std::vector<Size>> pending;
    std::set<std::vector<Size>> matches;
    for (const auto& p : prefixes) {
        const auto it = done.find(p);
        if (it == done.end()) {
            pending.push_back(p);
            continue;
        }
        ++result.resumed_units;
        for (const auto& m : it->second)
            matches.insert(m);
    }

    const auto enough = [&] { return options.max_matches != 0 && matches.size() >= options.max_matches; };

    parallel_for(pending.size(), resolve_threads(options.threads), [&](unsigned, std::size_t i) {
        if (stop)
            return;
        Generator gen(n, alphabet, true, options.total);
        std::vector<std::vector<Size>> found;
        const bool finished = gen.run(pending[i], [&](const Pizza& p) {
            if (predicate(p))
                found.emplace_back(p.sizes().begin(), p.sizes().end());
            return !stop.load();
        });
        visited += gen.leaves();
        std::lock_guard lock(mutex);
        matches.insert(found.begin(), found.end());
        if (finished && !stop) {
            ++result.units;
            if (checkpoint.is_open()) {
                nlohmann::json line = key_j;
                line["prefix"] = pending[i];
                line["matches"] = found;
                checkpoint << line.dump() << '\n' << std::flush;
            }
        }
        if (enough())
            stop = true;
    });

    result.visited = visited;
    for (const auto& m : matches)
        result.matches.emplace_back(m);
    if (options.max_matches != 0 && result.matches.size() > options.max_matches)
        result.matches.erase(result.matches.begin() + static_cast<std::ptrdiff_t>(options.max_matches), result.matches.end());
    return result;
}

MinimalityResult minimality_scan(std::size_t max_n, std::span<const Size> alphabet, const PizzaPredicate& predicate,
                                 const SearchOptions& options)
{
    MinimalityResult r;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto found = find_extremal(n, alphabet, predicate, options);
        r.scanned.push_back(n);
        if (!found.matches.empty()) {
            r.first_n = n;
            r.matches = std::move(found.matches);
            break;
        }
    }
    return r;
}

} // namespace pizza
