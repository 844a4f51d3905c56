#include "pizza/game.hpp"

namespace pizza {

std::string to_string(Player p)
{
    return p == Player::Alice ? "alice" : "bob";
}

std::string to_string(Side s)
{
    switch (s) {
    case Side::Left:
        return "left";
    case Side::Right:
        return "right";
    case Side::Opening:
        return "opening";
    }
    return "?";
}

GameState::GameState(Pizza pizza) : GameState(std::make_shared<const Pizza>(std::move(pizza))) {}

GameState::GameState(std::shared_ptr<const Pizza> pizza) : pizza_(std::move(pizza))
{
    if (!pizza_)
        throw Error(ErrorKind::InvalidArgument, "game state needs a pizza");
}

std::optional<Piece> GameState::first_piece() const
{
    if (history_.empty())
        return std::nullopt;
    return history_.front().move.piece;
}

std::vector<std::optional<Player>> GameState::owners() const
{
    std::vector<std::optional<Player>> out(pizza_->n());
    for (const auto& played : history_)
        out[played.move.piece] = played.player;
    return out;
}

std::vector<Move> legal_moves(const GameState& state)
{
    const auto n = state.pizza().n();
    const Arc& arc = state.eaten();
    std::vector<Move> moves;
    if (arc.empty()) {
        moves.reserve(n);
        for (Piece p = 0; p < n; ++p)
            moves.push_back(Move{p, Side::Opening});
        return moves;
    }
    if (arc.full(n))
        return moves;
    const Piece left = arc.next(Side::Left, n);
    const Piece right = arc.next(Side::Right, n);
    moves.push_back(Move{left, Side::Left});
    if (right != left)
        moves.push_back(Move{right, Side::Right});
    return moves;
}

std::optional<std::string> illegal_reason(const GameState& state, const Move& move)
{
    const auto n = state.pizza().n();
    const Arc& arc = state.eaten();
    if (move.piece >= n)
        return "piece " + std::to_string(move.piece) + " out of range";
    if (arc.full(n))
        return std::string("game is finished");
    if (arc.contains(move.piece, n))
        return "piece " + std::to_string(move.piece) + " already eaten";
    if (arc.empty())
        return move.side == Side::Opening ? std::nullopt
                                          : std::optional<std::string>("wrong phase: the first move must be an opening");
    if (move.side == Side::Opening)
        return std::string("wrong phase: opening move after the first move");
    const Piece left = arc.next(Side::Left, n);
    const Piece right = arc.next(Side::Right, n);
    if (move.piece != left && move.piece != right)
        return "piece " + std::to_string(move.piece) + " is not adjacent to eaten pieces";
    if (left != right && arc.next(move.side, n) != move.piece)
        return "piece " + std::to_string(move.piece) + " is not on the " + to_string(move.side) + " end";
    return std::nullopt;
}

GameState apply_move(const GameState& state, const Move& move)
{
    if (auto reason = illegal_reason(state, move))
        throw Error(ErrorKind::IllegalMove, *reason);
    GameState next = state;
    const auto n = state.pizza().n();
    if (move.side == Side::Opening)
        next.eaten_ = Arc::single(move.piece);
    else
        next.eaten_ = state.eaten_.extended(move.side, n);
    const Size size = state.pizza()[move.piece];
    if (state.turn_ == Player::Alice)
        next.scores_.alice += size;
    else
        next.scores_.bob += size;
    next.history_.push_back(PlayedMove{state.turn_, move});
    next.turn_ = other(state.turn_);
    return next;
}

std::optional<Move> move_for_piece(const GameState& state, Piece piece)
{
    for (const Move& m : legal_moves(state)) {
        if (m.piece == piece)
            return m;
    }
    return std::nullopt;
}

} // namespace pizza
