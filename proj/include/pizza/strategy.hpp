#pragma once

#include "pizza/game.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace pizza {

/// Compact automaton state; always < Strategy::state_count().
using StrategyState = std::uint32_t;

struct Reply {
    Move move;
    StrategyState next = 0;
};

/**
 * Deterministic move-selection machine for one player on one pizza.
 *
 * The caller threads the state value: the automaton itself never mutates.
 * respond() sees the eaten arc after the opponent's move and that move; an
 * Alice automaton additionally supplies the opening piece. The answer may
 * depend only on (state, eaten arc, opponent move) so evaluators can memoize.
 */
class Strategy {
public:
    virtual ~Strategy() = default;

    virtual std::string id() const = 0;
    virtual Player role() const = 0;
    virtual const Pizza& pizza() const = 0;

    virtual StrategyState state_count() const { return 1; }
    virtual StrategyState initial_state() const { return 0; }

    /// First move; meaningful for Alice automata only.
    virtual Piece opening() const;

    virtual Reply respond(StrategyState state, const Arc& eaten, const Move& opponent) const = 0;
};

using StrategyPtr = std::shared_ptr<const Strategy>;

} // namespace pizza
