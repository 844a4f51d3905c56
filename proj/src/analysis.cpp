#include "pizza/analysis.hpp"

#include <algorithm>
#include <limits>

namespace pizza {

namespace {

void require_odd(const Pizza& pizza, const char* what)
{
    if (pizza.n() % 2 == 0)
        throw Error(ErrorKind::Precondition, std::string(what) + " defined only for odd pizzas");
}

} // namespace

BestAnswers best_answers(const Pizza& pizza, Piece p)
{
    require_odd(pizza, "best answers");
    const auto n = pizza.n();
    if (p >= n)
        throw Error(ErrorKind::InvalidArgument, "piece index " + std::to_string(p) + " out of range");
    BestAnswers out{std::numeric_limits<Size>::max(), {}};
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_red(n, Cut{c}, p))
            continue;
        const Size v = red_size(pizza, Cut{c});
        if (v < out.value) {
            out.value = v;
            out.cuts.clear();
        }
        if (v == out.value)
            out.cuts.push_back(Cut{c});
    }
    return out;
}

BestAnswerTable build_best_answer_table(const Pizza& pizza)
{
    require_odd(pizza, "best-answer table");
    const auto n = pizza.n();
    BestAnswerTable t;
    t.cut_value.resize(n);
    t.answered.resize(n);
    t.piece_value.assign(n, std::numeric_limits<Size>::max());
    t.best_cuts.resize(n);

    // ||R(C)|| for consecutive cuts: R(C+1) = G(C) + piece C.
    Size red = red_size(pizza, Cut{0});
    const Size total = pizza.total();
    for (std::size_t c = 0; c < n; ++c) {
        t.cut_value[c] = red;
        red = (total - red) + pizza[c];
    }
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t off = 0; off < n; off += 2) {
            const Piece p = (c + off) % n;
            t.piece_value[p] = std::min(t.piece_value[p], t.cut_value[c]);
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t off = 0; off < n; off += 2) {
            const Piece p = (c + off) % n;
            if (t.cut_value[c] == t.piece_value[p]) {
                t.answered[c].push_back(p);
                t.best_cuts[p].push_back(Cut{c});
            }
        }
        std::sort(t.answered[c].begin(), t.answered[c].end());
    }
    return t;
}

Hardness classify(const Pizza& pizza)
{
    const auto n = pizza.n();
    if (n % 2 == 0) {
        Size even_class = 0;
        for (std::size_t i = 0; i < n; i += 2)
            even_class += pizza[i];
        const Size odd_class = pizza.total() - even_class;
        if (even_class >= odd_class)
            return {Difficulty::Easy, 0, even_class};
        return {Difficulty::Easy, 1, odd_class};
    }
    const auto table = build_best_answer_table(pizza);
    Hardness h;
    h.best_fb_value = -1;
    for (Piece p = 0; p < n; ++p) {
        if (table.piece_value[p] > h.best_fb_value) {
            h.best_fb_value = table.piece_value[p];
            h.witness = p;
        }
    }
    h.classification = 2 * h.best_fb_value >= pizza.total() ? Difficulty::Easy : Difficulty::Hard;
    return h;
}

std::vector<Cut> worst_cuts(const BestAnswerTable& table)
{
    const Size lo = *std::min_element(table.cut_value.begin(), table.cut_value.end());
    std::vector<Cut> out;
    for (std::size_t c = 0; c < table.cut_value.size(); ++c) {
        if (table.cut_value[c] == lo)
            out.push_back(Cut{c});
    }
    return out;
}

std::vector<Cut> best_cuts(const BestAnswerTable& table)
{
    Size hi = -1;
    for (std::size_t c = 0; c < table.cut_value.size(); ++c) {
        if (!table.answered[c].empty())
            hi = std::max(hi, table.cut_value[c]);
    }
    std::vector<Cut> out;
    for (std::size_t c = 0; c < table.cut_value.size(); ++c) {
        if (!table.answered[c].empty() && table.cut_value[c] == hi)
            out.push_back(Cut{c});
    }
    return out;
}

SpecialCuts choose_special_cuts(const Pizza& pizza, const BestAnswerTable& table, std::optional<Cut> forced_worst)
{
    if (classify(pizza).classification != Difficulty::Hard)
        throw Error(ErrorKind::Precondition, "tripartition defined for hard pizzas only");
    const auto n = pizza.n();
    const auto worst_set = worst_cuts(table);

    SpecialCuts s;
    if (forced_worst) {
        if (std::find(worst_set.begin(), worst_set.end(), *forced_worst) == worst_set.end())
            throw Error(ErrorKind::Precondition, "forced Cworst does not minimize the red size");
        s.worst = *forced_worst;
    } else {
        s.worst = worst_set.front();
    }

    const auto& a_worst = table.answered[s.worst.index];
    const auto outside_worst = [&](Cut c) {
        std::vector<Piece> diff;
        std::set_difference(table.answered[c.index].begin(), table.answered[c.index].end(), a_worst.begin(),
                            a_worst.end(), std::back_inserter(diff));
        return diff;
    };

    std::size_t best_count = 0;
    bool found = false;
    for (const Cut c : best_cuts(table)) {
        const auto count = outside_worst(c).size();
        if (!found || count > best_count) {
            s.best = c;
            best_count = count;
            found = true;
        }
    }
    if (s.best == s.worst)
        throw Error(ErrorKind::Precondition, "degenerate tripartition: Cbest equals Cworst");

    // Odd (Cbest, Cworst)-interval and the second piece counted from Cbest.
    const Interval from_best = interval_from(n, s.best, s.worst);
    const bool odd_from_best = from_best.length % 2 == 1;
    const std::size_t odd_length = odd_from_best ? from_best.length : n - from_best.length;
    if (odd_length < 3)
        throw Error(ErrorKind::Precondition, "odd (Cbest, Cworst)-interval has fewer than three pieces");
    s.p_hat = odd_from_best ? (s.best.index + 1) % n : (s.best.index + n - 2) % n;
    s.mid = table.best_cuts[s.p_hat].front();

    // p~: last piece of A(Cbest) \ A(Cworst) walking from Cbest through the even interval.
    const auto diff = outside_worst(s.best);
    const std::size_t even_length = n - odd_length;
    for (std::size_t step = 0; step < even_length; ++step) {
        const Piece p = odd_from_best ? (s.best.index + n - 1 - step) % n : (s.best.index + step) % n;
        if (std::binary_search(diff.begin(), diff.end(), p))
            s.p_tilde = p;
    }
    return s;
}

char part_letter(PartName x)
{
    return "BMW"[static_cast<std::size_t>(x)];
}

PartName part_from_letter(char c)
{
    switch (c) {
    case 'B':
    case 'b':
        return PartName::B;
    case 'M':
    case 'm':
        return PartName::M;
    case 'W':
    case 'w':
        return PartName::W;
    default:
        throw Error(ErrorKind::InvalidArgument, std::string("unknown part '") + c + "'");
    }
}

Size PartSizes::major(PartName x) const
{
    switch (x) {
    case PartName::B:
        return b_major;
    case PartName::M:
        return m_major;
    case PartName::W:
        return w_major;
    }
    return 0;
}

Size PartSizes::minor(PartName x) const
{
    switch (x) {
    case PartName::B:
        return b_minor;
    case PartName::M:
        return m_minor;
    case PartName::W:
        return w_minor;
    }
    return 0;
}

std::vector<Piece> Tripartition::majors(PartName x, std::size_t n) const
{
    std::vector<Piece> out;
    const Interval& I = part(x);
    for (std::size_t off = 1; off < I.length; off += 2)
        out.push_back(I.at(off, n));
    return out;
}

std::vector<Piece> Tripartition::minors(PartName x, std::size_t n) const
{
    std::vector<Piece> out;
    const Interval& I = part(x);
    for (std::size_t off = 0; off < I.length; off += 2)
        out.push_back(I.at(off, n));
    return out;
}

PartName Tripartition::part_of(Piece p, std::size_t n) const
{
    for (const PartName x : all_parts) {
        if (part(x).contains(p, n))
            return x;
    }
    throw Error(ErrorKind::InvalidArgument, "piece " + std::to_string(p) + " not in any part");
}

Tripartition tripartition(const Pizza& pizza, std::optional<Cut> forced_worst)
{
    if (pizza.n() % 2 == 0)
        throw Error(ErrorKind::Precondition, "tripartition defined for hard pizzas only");
    return tripartition(pizza, build_best_answer_table(pizza), forced_worst);
}

Tripartition tripartition(const Pizza& pizza, const BestAnswerTable& table, std::optional<Cut> forced_worst)
{
    Tripartition t;
    t.cuts = choose_special_cuts(pizza, table, forced_worst);
    t.parts[static_cast<std::size_t>(PartName::B)] = interval_between(pizza, t.cuts.mid, t.cuts.worst).odd;
    t.parts[static_cast<std::size_t>(PartName::M)] = interval_between(pizza, t.cuts.best, t.cuts.worst).odd;
    t.parts[static_cast<std::size_t>(PartName::W)] = interval_between(pizza, t.cuts.best, t.cuts.mid).odd;

    const auto n = pizza.n();
    std::array<Size, 6> s{};
    for (const PartName x : all_parts) {
        const Interval& I = t.part(x);
        for (std::size_t off = 0; off < I.length; ++off) {
            const auto slot = 2 * static_cast<std::size_t>(x) + (is_minor_offset(off) ? 1 : 0);
            s[slot] += pizza[I.at(off, n)];
        }
    }
    t.sizes = PartSizes{s[0], s[1], s[2], s[3], s[4], s[5]};
    return t;
}

Piece middle_piece(const Pizza& pizza, const Interval& part)
{
    const auto n = pizza.n();
    Size major_total = 0;
    for (std::size_t off = 1; off < part.length; off += 2)
        major_total += pizza[part.at(off, n)];
    if (part.length < 2)
        throw Error(ErrorKind::InvalidArgument, "part has no major pieces");
    Size before = 0;
    for (std::size_t off = 1; off < part.length; off += 2) {
        const Size here = pizza[part.at(off, n)];
        const Size to_start = before + here;
        const Size to_end = major_total - before;
        if (2 * to_start >= major_total && 2 * to_end >= major_total)
            return part.at(off, n);
        before += here;
    }
    throw Error(ErrorKind::InvalidArgument, "no middle piece found");
}

std::optional<Piece> XPizza::local_index(Piece whole, std::size_t whole_n) const
{
    if (!part.contains(whole, whole_n))
        return std::nullopt;
    return part.offset_of(whole, whole_n);
}

XPizza glue_interval(const Pizza& pizza, const Interval& part)
{
    if (part.length == 0)
        throw Error(ErrorKind::InvalidArgument, "cannot glue an empty interval");
    std::vector<Size> sizes(part.length);
    std::vector<Piece> index_map(part.length);
    for (std::size_t i = 0; i < part.length; ++i) {
        index_map[i] = part.at(i, pizza.n());
        sizes[i] = pizza[index_map[i]];
    }
    return XPizza{Pizza(std::move(sizes)), Cut{0}, std::move(index_map), part};
}

XPizza glue_x_pizza(const Pizza& pizza, const Tripartition& tri, PartName x)
{
    return glue_interval(pizza, tri.part(x));
}

} // namespace pizza
