#include "pizza/core.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace pizza {

Pizza::Pizza(std::vector<Size> sizes) : sizes_(std::move(sizes))
{
    if (sizes_.empty())
        throw Error(ErrorKind::InvalidArgument, "pizza must have at least one piece");
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] < 0)
            throw Error(ErrorKind::InvalidArgument, "negative size at piece " + std::to_string(i));
    }
    total_ = std::accumulate(sizes_.begin(), sizes_.end(), Size{0});
}

std::vector<Piece> Interval::pieces(std::size_t n) const
{
    std::vector<Piece> out(length);
    for (std::size_t i = 0; i < length; ++i)
        out[i] = (start + i) % n;
    return out;
}

namespace {

void require_odd(const Pizza& pizza)
{
    if (pizza.n() % 2 == 0)
        throw Error(ErrorKind::Precondition, "coloring defined only for odd pizzas");
}

void require_cut(const Pizza& pizza, Cut cut)
{
    if (cut.index >= pizza.n())
        throw Error(ErrorKind::InvalidArgument, "cut index " + std::to_string(cut.index) + " out of range");
}

} // namespace

Coloring coloring_from_cut(const Pizza& pizza, Cut cut)
{
    require_odd(pizza);
    require_cut(pizza, cut);
    const auto n = pizza.n();
    Coloring c{cut, {}, {}, std::vector<bool>(n, false)};
    for (std::size_t off = 0; off < n; ++off) {
        const Piece p = (cut.index + off) % n;
        if (off % 2 == 0) {
            c.red.push_back(p);
            c.is_red[p] = true;
        } else {
            c.green.push_back(p);
        }
    }
    return c;
}

Size red_size(const Pizza& pizza, Cut cut)
{
    require_odd(pizza);
    require_cut(pizza, cut);
    Size sum = 0;
    for (std::size_t off = 0; off < pizza.n(); off += 2)
        sum += pizza[cut.index + off];
    return sum;
}

Interval interval_from(std::size_t n, Cut a, Cut b)
{
    return Interval{a.index, (b.index + n - a.index) % n};
}

IntervalPair interval_between(const Pizza& pizza, Cut a, Cut b)
{
    require_odd(pizza);
    require_cut(pizza, a);
    require_cut(pizza, b);
    if (a == b)
        throw Error(ErrorKind::InvalidArgument, "interval_between needs two distinct cuts");
    const auto n = pizza.n();
    const Interval first = interval_from(n, a, b);
    const Interval second = interval_from(n, b, a);
    if (first.length % 2 == 1)
        return {first, second};
    return {second, first};
}

Size set_size(const Pizza& pizza, std::span<const Piece> pieces)
{
    Size sum = 0;
    for (const Piece p : pieces) {
        if (p >= pizza.n())
            throw Error(ErrorKind::InvalidArgument, "piece index " + std::to_string(p) + " out of range");
        sum += pizza[p];
    }
    return sum;
}

Size interval_size(const Pizza& pizza, const Interval& interval)
{
    Size sum = 0;
    for (std::size_t i = 0; i < interval.length; ++i)
        sum += pizza[interval.start + i];
    return sum;
}

Pizza parse_pizza(std::string_view text)
{
    std::vector<Size> sizes;
    std::size_t pos = 0;
    const auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    const auto fail = [&](const std::string& what, std::size_t at) -> Error {
        return Error(ErrorKind::Parse, what + " at offset " + std::to_string(at) + " (token "
                                           + std::to_string(sizes.size() + 1) + ")");
    };

    skip_space();
    if (pos == text.size())
        throw fail("empty pizza", pos);
    while (true) {
        skip_space();
        const std::size_t token_start = pos;
        if (pos < text.size() && text[pos] == '-')
            throw fail("negative size", token_start);
        std::uint64_t value = 0;
        const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || end == text.data() + pos)
            throw fail("expected non-negative integer", token_start);
        if (value > static_cast<std::uint64_t>(INT64_MAX / 4))
            throw fail("size too large", token_start);
        pos = static_cast<std::size_t>(end - text.data());
        if (pos < text.size() && (text[pos] == '.' || std::isalpha(static_cast<unsigned char>(text[pos]))))
            throw fail("expected non-negative integer", token_start);
        sizes.push_back(static_cast<Size>(value));
        skip_space();
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw fail("expected ','", pos);
        ++pos;
    }
    return Pizza(std::move(sizes));
}

std::string serialize_pizza(const Pizza& pizza)
{
    std::string out;
    for (std::size_t i = 0; i < pizza.n(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(pizza[i]);
    }
    return out;
}

} // namespace pizza
