#pragma once

// Exact game values: interval DP for optimal play, adversarial evaluation of
// fixed automata, and an unmemoized minimax oracle.

#include "pizza/game.hpp"
#include "pizza/strategy.hpp"

#include <cstdint>
#include <vector>

namespace pizza {

/// Optimal mover value for every uneaten arc (start, length), O(n^2).
class ArcValueTable {
public:
    explicit ArcValueTable(const Pizza& pizza);

    std::size_t n() const noexcept { return n_; }
    /// Most the player to move can secure from the uneaten run start..start+length-1.
    Size value(Piece start, std::size_t length) const;
    /// Sum of the uneaten run.
    Size sum(Piece start, std::size_t length) const;
    /// Mover's future total when eating `move` now and both play optimally after.
    Size gain(const Arc& eaten, const Move& move) const;

private:
    std::size_t n_;
    std::vector<Size> prefix_; // over the doubled sequence
    std::vector<Size> table_;  // [length][start]
    std::vector<Size> sizes_;
};

struct EvaluationResult {
    Size alice = 0;
    Size bob = 0;
    std::vector<Move> line; // one optimal / worst-case move sequence
    std::uint64_t nodes = 0;
};

Size optimal_arc_value(const Pizza& pizza, Piece start, std::size_t length);

EvaluationResult optimal_value(const Pizza& pizza);

/// Alice's exact guaranteed total playing `alice` against every Bob.
EvaluationResult evaluate_vs_adversary(const Pizza& pizza, const Strategy& alice);

/// Bob's exact guaranteed total playing `bob` against every Alice.
EvaluationResult evaluate_bob(const Pizza& pizza, const Strategy& bob);

inline constexpr std::size_t naive_tree_limit = 15;

/// Full minimax without memoization; refuses n > naive_tree_limit.
Size naive_tree_value(const Pizza& pizza);

struct MoveHint {
    Move move;
    Size gain = 0;        // mover's total from now on
    Size final_total = 0; // mover's current score plus gain
};

std::vector<MoveHint> best_move_hints(const GameState& state);

/// Replays a move line from the start; returns the final state.
GameState replay(const Pizza& pizza, const std::vector<Move>& line);

} // namespace pizza
