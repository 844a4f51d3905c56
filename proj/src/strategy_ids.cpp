#include "pizza/strategies.hpp"

#include <charconv>

namespace pizza {

namespace {

std::size_t parse_index(std::string_view text, std::string_view what)
{
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw Error(ErrorKind::InvalidArgument, "bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

PartName parse_part(std::string_view text)
{
    if (text.size() != 1)
        throw Error(ErrorKind::InvalidArgument, "bad part name '" + std::string(text) + "'");
    return part_from_letter(text[0]);
}

bool starts_with(std::string_view s, std::string_view prefix)
{
    return s.substr(0, prefix.size()) == prefix;
}

// On an X-pizza, Cworst is pinned to the glue cut.
StrategyPtr parse(const Pizza& pizza, std::string_view id, std::optional<Cut> forced_worst)
{
    if (id == "even")
        return even_strategy(pizza);
    if (id == "one-third")
        return one_third_strategy(pizza);
    if (id == "optimal")
        return optimal_strategy(pizza, Player::Alice);
    if (id == "bob:optimal")
        return optimal_strategy(pizza, Player::Bob);
    if (id == "best-of-three")
        return renamed(best_of_three(pizza).strategy, "best-of-three");
    if (id == "best-of-four")
        return renamed(best_of_four(pizza).strategy, "best-of-four");
    if (id == "fb:best")
        return best_fb_strategy(pizza);
    if (starts_with(id, "fb:")) {
        const std::size_t cut = parse_index(id.substr(3), "cut index");
        if (cut >= pizza.n())
            throw Error(ErrorKind::InvalidArgument, "cut index " + std::to_string(cut) + " out of range");
        return fb_strategy(pizza, Cut{cut});
    }
    if (starts_with(id, "mfb:")) {
        const PartName x = parse_part(id.substr(4));
        return mfb_strategy(pizza, tripartition(pizza, forced_worst), x);
    }
    if (starts_with(id, "on-part:")) {
        const std::string_view rest = id.substr(8);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw Error(ErrorKind::InvalidArgument, "on-part id needs an inner strategy");
        const PartName x = parse_part(rest.substr(0, colon));
        const auto tri = tripartition(pizza, forced_worst);
        const XPizza xp = glue_x_pizza(pizza, tri, x);
        StrategyPtr inner = parse(xp.pizza, rest.substr(colon + 1), xp.glue_cut);
        return on_part(pizza, tri, x, std::move(inner));
    }
    if (starts_with(id, "bob:interval-guard:")) {
        std::string_view rest = id.substr(19);
        std::array<Cut, 3> cuts{};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto comma = rest.find(',');
            const bool last = i == 2;
            if (last != (comma == std::string_view::npos))
                throw Error(ErrorKind::InvalidArgument, "interval-guard needs exactly three cuts");
            cuts[i] = Cut{parse_index(rest.substr(0, comma), "cut index")};
            if (!last)
                rest = rest.substr(comma + 1);
        }
        return interval_guard_bob(pizza, cuts);
    }
    throw Error(ErrorKind::NotFound, "unknown strategy id '" + std::string(id) + "'");
}

} // namespace

StrategyPtr strategy_from_id(const Pizza& pizza, const std::string& id)
{
    return parse(pizza, id, std::nullopt);
}

} // namespace pizza
