#pragma once

#include "pizza/core.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pizza {

enum class Player { Alice, Bob };
enum class Side { Left, Right, Opening };

inline Player other(Player p) noexcept { return p == Player::Alice ? Player::Bob : Player::Alice; }
inline Side opposite(Side s) noexcept { return s == Side::Left ? Side::Right : Side::Left; }

std::string to_string(Player p);
std::string to_string(Side s);

struct Move {
    Piece piece = 0;
    Side side = Side::Opening;
    bool operator==(const Move&) const = default;
};

/**
 * The eaten pieces as one clockwise run start .. start+length-1.
 * Left extends counterclockwise, Right extends clockwise.
 */
struct Arc {
    Piece start = 0;
    std::size_t length = 0;

    bool empty() const noexcept { return length == 0; }
    bool full(std::size_t n) const noexcept { return length >= n; }
    bool contains(Piece p, std::size_t n) const noexcept { return (p + n - start) % n < length; }

    /// The uneaten piece on the given end; only valid for a non-empty, non-full arc.
    Piece next(Side side, std::size_t n) const noexcept
    {
        return side == Side::Left ? (start + n - 1) % n : (start + length) % n;
    }

    Arc extended(Side side, std::size_t n) const noexcept
    {
        if (side == Side::Left)
            return Arc{(start + n - 1) % n, length + 1};
        return Arc{start, length + 1};
    }

    static Arc single(Piece p) noexcept { return Arc{p, 1}; }

    bool operator==(const Arc&) const = default;
};

/// Move that eats the piece just revealed by the opponent's move.
inline Move follow(const Arc& eaten, const Move& opponent, std::size_t n) noexcept
{
    const Side side = opponent.side == Side::Opening ? Side::Right : opponent.side;
    return Move{eaten.next(side, n), side};
}

struct Scores {
    Size alice = 0;
    Size bob = 0;
    Size of(Player p) const noexcept { return p == Player::Alice ? alice : bob; }
    bool operator==(const Scores&) const = default;
};

struct PlayedMove {
    Player player;
    Move move;
    bool operator==(const PlayedMove&) const = default;
};

/// Immutable game position; apply_move returns a new state.
class GameState {
public:
    explicit GameState(Pizza pizza);
    GameState(std::shared_ptr<const Pizza> pizza);

    const Pizza& pizza() const noexcept { return *pizza_; }
    std::shared_ptr<const Pizza> shared_pizza() const noexcept { return pizza_; }
    const Arc& eaten() const noexcept { return eaten_; }
    Player turn() const noexcept { return turn_; }
    const Scores& scores() const noexcept { return scores_; }
    const std::vector<PlayedMove>& history() const noexcept { return history_; }
    bool finished() const noexcept { return eaten_.full(pizza_->n()); }
    std::optional<Piece> first_piece() const;
    /// Who ate each piece, empty for uneaten pieces.
    std::vector<std::optional<Player>> owners() const;

private:
    friend GameState apply_move(const GameState&, const Move&);

    std::shared_ptr<const Pizza> pizza_;
    Arc eaten_;
    Player turn_ = Player::Alice;
    Scores scores_;
    std::vector<PlayedMove> history_;
};

std::vector<Move> legal_moves(const GameState& state);

/// Throws Error(IllegalMove) naming the reason when the move is not legal.
GameState apply_move(const GameState& state, const Move& move);

/// Reason the move is illegal, or empty when legal.
std::optional<std::string> illegal_reason(const GameState& state, const Move& move);

/// The legal move eating the given piece, if any.
std::optional<Move> move_for_piece(const GameState& state, Piece piece);

} // namespace pizza
