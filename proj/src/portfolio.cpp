#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"

namespace pizza {

namespace {

PortfolioChoice pick_best(const Pizza& pizza, const std::vector<StrategyPtr>& candidates)
{
    PortfolioChoice choice;
    for (const auto& s : candidates) {
        const Size v = evaluate_vs_adversary(pizza, *s).alice;
        choice.candidates.push_back(CandidateValue{s->id(), v});
        if (!choice.strategy || v > choice.value) {
            choice.strategy = s;
            choice.value = v;
        }
    }
    return choice;
}

std::vector<StrategyPtr> three_candidates(const Pizza& pizza)
{
    const auto table = build_best_answer_table(pizza);
    const auto tri = tripartition(pizza, table);
    return {fb_strategy(pizza, table, tri.cuts.best), mfb_strategy(pizza, tri, PartName::M),
            mfb_strategy(pizza, tri, PartName::W)};
}

} // namespace

std::vector<StrategyPtr> four_ninths_candidates(const Pizza& pizza)
{
    const auto table = build_best_answer_table(pizza);
    const auto tri = tripartition(pizza, table);
    std::vector<StrategyPtr> out{fb_strategy(pizza, table, tri.cuts.best), mfb_strategy(pizza, tri, PartName::B)};

    const XPizza w = glue_x_pizza(pizza, tri, PartName::W);
    if (!is_hard(w.pizza)) {
        out.push_back(on_part(pizza, tri, PartName::W, best_fb_strategy(w.pizza)));
        return out;
    }
    const auto wtable = build_best_answer_table(w.pizza);
    const auto wtri = tripartition(w.pizza, wtable, w.glue_cut);
    out.push_back(on_part(pizza, tri, PartName::W, fb_strategy(w.pizza, wtable, wtri.cuts.best)));
    out.push_back(on_part(pizza, tri, PartName::W, mfb_strategy(w.pizza, wtri, PartName::W)));
    return out;
}

PortfolioChoice best_of_three(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return pick_best(pizza, {best_fb_strategy(pizza)});
    return pick_best(pizza, three_candidates(pizza));
}

PortfolioChoice best_of_four(const Pizza& pizza)
{
    if (!is_hard(pizza))
        return pick_best(pizza, {best_fb_strategy(pizza)});
    return pick_best(pizza, four_ninths_candidates(pizza));
}

} // namespace pizza
