#include "pizza/solver.hpp"

#include <algorithm>
#include <limits>

namespace pizza {

ArcValueTable::ArcValueTable(const Pizza& pizza)
    : n_(pizza.n()), prefix_(2 * pizza.n() + 1, 0), table_((pizza.n() + 1) * pizza.n(), 0),
      sizes_(pizza.sizes().begin(), pizza.sizes().end())
{
    for (std::size_t i = 0; i < 2 * n_; ++i)
        prefix_[i + 1] = prefix_[i] + sizes_[i % n_];
    for (std::size_t s = 0; s < n_; ++s)
        table_[n_ + s] = sizes_[s];
    for (std::size_t len = 2; len <= n_; ++len) {
        for (std::size_t s = 0; s < n_; ++s) {
            const Size without_first = table_[(len - 1) * n_ + (s + 1) % n_];
            const Size without_last = table_[(len - 1) * n_ + s];
            table_[len * n_ + s] = sum(s, len) - std::min(without_first, without_last);
        }
    }
}

Size ArcValueTable::value(Piece start, std::size_t length) const
{
    return table_[length * n_ + start % n_];
}

Size ArcValueTable::sum(Piece start, std::size_t length) const
{
    const std::size_t s = start % n_;
    return prefix_[s + length] - prefix_[s];
}

Size ArcValueTable::gain(const Arc& eaten, const Move& move) const
{
    if (eaten.empty())
        return sizes_[move.piece] + sum(move.piece + 1, n_ - 1) - value(move.piece + 1, n_ - 1);
    const Piece ustart = (eaten.start + eaten.length) % n_;
    const std::size_t ulen = n_ - eaten.length;
    const Piece rest_start = move.side == Side::Right ? ustart + 1 : ustart;
    return sizes_[move.piece] + sum(rest_start, ulen - 1) - value(rest_start, ulen - 1);
}

Size optimal_arc_value(const Pizza& pizza, Piece start, std::size_t length)
{
    if (length > pizza.n())
        throw Error(ErrorKind::InvalidArgument, "arc longer than the pizza");
    return ArcValueTable(pizza).value(start, length);
}

EvaluationResult optimal_value(const Pizza& pizza)
{
    const ArcValueTable table(pizza);
    GameState state(pizza);
    EvaluationResult r;
    r.nodes = table.n() * table.n();
    while (!state.finished()) {
        const auto moves = legal_moves(state);
        const Move* best = nullptr;
        Size best_gain = -1;
        for (const Move& m : moves) {
            const Size g = table.gain(state.eaten(), m);
            if (g > best_gain || (g == best_gain && m.piece < best->piece)) {
                best = &m;
                best_gain = g;
            }
        }
        if (state.history().empty())
            r.alice = best_gain;
        r.line.push_back(*best);
        state = apply_move(state, *best);
    }
    r.bob = pizza.total() - r.alice;
    return r;
}

namespace {

std::vector<Side> sides_of(const Arc& arc, std::size_t n)
{
    if (arc.next(Side::Left, n) == arc.next(Side::Right, n))
        return {Side::Left};
    // lexicographically smaller piece first
    if (arc.next(Side::Left, n) < arc.next(Side::Right, n))
        return {Side::Left, Side::Right};
    return {Side::Right, Side::Left};
}

/**
 * Memoized search where the free player picks an end and the automaton
 * answers. Returns the automaton owner's future total at each free node.
 * The free player minimizes it.
 */
class AutomatonSearch {
public:
    AutomatonSearch(const Pizza& pizza, const Strategy& automaton)
        : pizza_(pizza), automaton_(automaton), n_(pizza.n()), states_(automaton.state_count()),
          memo_((n_ + 1) * n_ * states_, unknown)
    {
        if (automaton.pizza() != pizza)
            throw Error(ErrorKind::InvalidArgument, "strategy " + automaton.id() + " was built for a different pizza");
    }

    Size free_node(const Arc& arc, StrategyState s)
    {
        if (arc.full(n_))
            return 0;
        Size& slot = memo_[(arc.length * n_ + arc.start) * states_ + s];
        if (slot != unknown)
            return slot;
        ++nodes_;
        Size best = std::numeric_limits<Size>::max();
        for (const Side side : sides_of(arc, n_))
            best = std::min(best, after_free_move(arc, s, side).total);
        slot = best;
        return best;
    }

    struct Step {
        Size total = 0;
        std::optional<Reply> reply;
    };

    /// Free player eats on `side`; the automaton answers.
    Step after_free_move(const Arc& arc, StrategyState s, Side side)
    {
        const Move m{arc.next(side, n_), side};
        const Arc eaten = arc.extended(side, n_);
        return answer(eaten, s, m);
    }

    Step answer(const Arc& eaten, StrategyState s, const Move& m)
    {
        if (eaten.full(n_))
            return {};
        const Reply reply = automaton_.respond(s, eaten, m);
        check(eaten, s, reply);
        const Arc after = eaten.extended(reply.move.side, n_);
        return {pizza_[reply.move.piece] + free_node(after, reply.next), reply};
    }

    void check(const Arc& eaten, StrategyState s, const Reply& reply) const
    {
        const bool side_ok = reply.move.side == Side::Left || reply.move.side == Side::Right;
        if (!side_ok || eaten.next(reply.move.side, n_) != reply.move.piece || reply.next >= states_) {
            throw Error(ErrorKind::IllegalMove,
                        "strategy " + automaton_.id() + " emitted illegal move " + std::to_string(reply.move.piece)
                            + "/" + to_string(reply.move.side) + " in state " + std::to_string(s)
                            + " with eaten arc (" + std::to_string(eaten.start) + ","
                            + std::to_string(eaten.length) + ")");
        }
    }

    /// Appends the free player's minimizing line from a free node.
    void principal_line(Arc arc, StrategyState s, std::vector<Move>& line)
    {
        while (!arc.full(n_)) {
            const Size target = free_node(arc, s);
            for (const Side side : sides_of(arc, n_)) {
                const Step step = after_free_move(arc, s, side);
                if (step.total != target)
                    continue;
                line.push_back(Move{arc.next(side, n_), side});
                arc = arc.extended(side, n_);
                if (step.reply) {
                    line.push_back(step.reply->move);
                    arc = arc.extended(step.reply->move.side, n_);
                    s = step.reply->next;
                }
                break;
            }
        }
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    static constexpr Size unknown = -1;

    const Pizza& pizza_;
    const Strategy& automaton_;
    std::size_t n_;
    std::size_t states_;
    std::vector<Size> memo_;
    std::uint64_t nodes_ = 0;
};

} // namespace

EvaluationResult evaluate_vs_adversary(const Pizza& pizza, const Strategy& alice)
{
    if (alice.role() != Player::Alice)
        throw Error(ErrorKind::InvalidArgument, "strategy " + alice.id() + " does not play Alice");
    AutomatonSearch search(pizza, alice);
    const Piece open = alice.opening();
    if (open >= pizza.n())
        throw Error(ErrorKind::IllegalMove, "strategy " + alice.id() + " opened with piece out of range");
    const Arc arc = Arc::single(open);
    EvaluationResult r;
    r.alice = pizza[open] + search.free_node(arc, alice.initial_state());
    r.bob = pizza.total() - r.alice;
    r.line.push_back(Move{open, Side::Opening});
    search.principal_line(arc, alice.initial_state(), r.line);
    r.nodes = search.nodes();
    return r;
}

EvaluationResult evaluate_bob(const Pizza& pizza, const Strategy& bob)
{
    if (bob.role() != Player::Bob)
        throw Error(ErrorKind::InvalidArgument, "strategy " + bob.id() + " does not play Bob");
    AutomatonSearch search(pizza, bob);
    EvaluationResult r;
    Size best = std::numeric_limits<Size>::max();
    Piece best_open = 0;
    for (Piece p = 0; p < pizza.n(); ++p) {
        const Size v = search.answer(Arc::single(p), bob.initial_state(), Move{p, Side::Opening}).total;
        if (v < best) {
            best = v;
            best_open = p;
        }
    }
    r.bob = best;
    r.alice = pizza.total() - best;
    r.line.push_back(Move{best_open, Side::Opening});
    const auto step = search.answer(Arc::single(best_open), bob.initial_state(), Move{best_open, Side::Opening});
    if (step.reply) {
        r.line.push_back(step.reply->move);
        Arc arc = Arc::single(best_open).extended(step.reply->move.side, pizza.n());
        search.principal_line(arc, step.reply->next, r.line);
    }
    r.nodes = search.nodes();
    return r;
}

namespace {

Size minimax(const Pizza& pizza, const Arc& eaten, bool alice_to_move, Size alice_score)
{
    const auto n = pizza.n();
    if (eaten.full(n))
        return alice_score;
    Size best = alice_to_move ? -1 : std::numeric_limits<Size>::max();
    for (const Side side : {Side::Left, Side::Right}) {
        const Piece q = eaten.next(side, n);
        const Size next_score = alice_to_move ? alice_score + pizza[q] : alice_score;
        const Size v = minimax(pizza, eaten.extended(side, n), !alice_to_move, next_score);
        best = alice_to_move ? std::max(best, v) : std::min(best, v);
    }
    return best;
}

} // namespace

Size naive_tree_value(const Pizza& pizza)
{
    if (pizza.n() > naive_tree_limit)
        throw Error(ErrorKind::Infeasible, "naive tree search refuses pizzas with more than "
                                               + std::to_string(naive_tree_limit) + " pieces");
    Size best = -1;
    for (Piece p = 0; p < pizza.n(); ++p)
        best = std::max(best, minimax(pizza, Arc::single(p), false, pizza[p]));
    return best;
}

std::vector<MoveHint> best_move_hints(const GameState& state)
{
    std::vector<MoveHint> hints;
    if (state.finished())
        return hints;
    const ArcValueTable table(state.pizza());
    const Size current = state.scores().of(state.turn());
    for (const Move& m : legal_moves(state)) {
        const Size g = table.gain(state.eaten(), m);
        hints.push_back(MoveHint{m, g, current + g});
    }
    return hints;
}

GameState replay(const Pizza& pizza, const std::vector<Move>& line)
{
    GameState state(pizza);
    for (const Move& m : line)
        state = apply_move(state, m);
    return state;
}

} // namespace pizza
