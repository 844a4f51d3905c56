#pragma once

// Alice's follow-Bob family, the part-based refinements, portfolio
// selectors, and Bob's counter-strategies.

#include "pizza/analysis.hpp"
#include "pizza/strategy.hpp"

#include <boost/rational.hpp>

#include <array>
#include <string>
#include <vector>

namespace pizza {

using Rational = boost::rational<Size>;

/// Alternate two-coloring; opens on the heavier class and follows Bob. n even.
StrategyPtr even_strategy(const Pizza& pizza);

/// Follow-Bob opening at the smallest piece of A(cut). n odd.
StrategyPtr fb_strategy(const Pizza& pizza, Cut cut);
StrategyPtr fb_strategy(const Pizza& pizza, const BestAnswerTable& table, Cut cut);

/// Follow-Bob from the opening with the best follow-Bob guarantee (any n).
StrategyPtr best_fb_strategy(const Pizza& pizza);

/// Follow-Bob from an arbitrary opening piece.
StrategyPtr follow_strategy(const Pizza& pizza, Piece opening, std::string id);

StrategyPtr one_third_strategy(const Pizza& pizza);

/// Modified follow-Bob for part x of a hard pizza.
StrategyPtr mfb_strategy(const Pizza& pizza, const Tripartition& tri, PartName x);

/**
 * Plays `inner` (built for the glued X-pizza) inside part x, takes the
 * other arc end instead of crossing when Bob first eats a border piece of x,
 * and follows Bob otherwise.
 */
StrategyPtr on_part(const Pizza& pizza, const Tripartition& tri, PartName x, StrategyPtr inner);

/**
 * Plays `inner` on its own pizza, except that when Bob reveals `cut` Alice
 * eats the piece at the other arc end instead of following, then follows Bob.
 */
StrategyPtr exception_at_cut(StrategyPtr inner, Cut cut);

/// Optimal play from the interval DP, either role; ties go to the smaller piece.
StrategyPtr optimal_strategy(const Pizza& pizza, Player role);

/// Bob's guard of three intervals marked by thick cuts.
StrategyPtr interval_guard_bob(const Pizza& pizza, std::array<Cut, 3> thick_cuts);

/// Renames a strategy without changing its behaviour.
StrategyPtr renamed(StrategyPtr inner, std::string id);

struct CandidateValue {
    std::string id;
    Size value = 0;
};

struct PortfolioChoice {
    StrategyPtr strategy; // the best candidate
    Size value = 0;
    std::vector<CandidateValue> candidates;
};

PortfolioChoice best_of_three(const Pizza& pizza);
PortfolioChoice best_of_four(const Pizza& pizza);

/// Strategies of the four-ninths portfolio for a hard pizza, in evaluation order.
std::vector<StrategyPtr> four_ninths_candidates(const Pizza& pizza);

/// (4/9)(S - n*m) + n*m/2 with m the smallest piece.
Rational shave_bound(const Pizza& pizza);

/// Linear lower bound over (b̄, b̲, m̄, m̲, w̄, w̲).
struct StrategyValueBound {
    std::string strategy_id;
    std::array<Rational, 6> coefficients{};

    Rational evaluate(const PartSizes& sizes) const;
    std::string to_string() const;
};

enum class CutRole { Best, Mid, Worst };

/// Guaranteed outcome of follow-Bob associated with Cbest, Cmid or Cworst.
StrategyValueBound fb_bound(CutRole role);
/// Guaranteed outcome of mfB for part x.
StrategyValueBound mfb_bound(PartName x);
/// What Alice keeps outside part x when she follows Bob there.
StrategyValueBound outside_bound(PartName x);

/// Builds a strategy from its stable id (see README for the grammar).
StrategyPtr strategy_from_id(const Pizza& pizza, const std::string& id);

} // namespace pizza
