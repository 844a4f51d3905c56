#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"

#include <algorithm>

namespace pizza {

Piece Strategy::opening() const
{
    throw Error(ErrorKind::InvalidArgument, "strategy " + id() + " has no opening move");
}

namespace {

class AliceBase : public Strategy {
public:
    AliceBase(Pizza pizza, std::string id) : pizza_(std::move(pizza)), id_(std::move(id)) {}
    std::string id() const override { return id_; }
    Player role() const override { return Player::Alice; }
    const Pizza& pizza() const override { return pizza_; }

protected:
    Pizza pizza_;
    std::string id_;
};

class FollowStrategy final : public AliceBase {
public:
    FollowStrategy(Pizza pizza, Piece opening, std::string id)
        : AliceBase(std::move(pizza), std::move(id)), opening_(opening)
    {
        if (opening_ >= pizza_.n())
            throw Error(ErrorKind::InvalidArgument, "opening piece out of range");
    }

    Piece opening() const override { return opening_; }
    Reply respond(StrategyState, const Arc& eaten, const Move& bob) const override
    {
        return {follow(eaten, bob, pizza_.n()), 0};
    }

private:
    Piece opening_;
};

// States of the part-based automata.
constexpr StrategyState inside_part = 0;
constexpr StrategyState follow_only = 1;

class MfbStrategy final : public AliceBase {
public:
    MfbStrategy(Pizza pizza, Interval part, std::string id)
        : AliceBase(std::move(pizza), std::move(id)), part_(part), opening_(middle_piece(pizza_, part_))
    {
    }

    Piece opening() const override { return opening_; }
    StrategyState state_count() const override { return 2; }

    Reply respond(StrategyState state, const Arc& eaten, const Move& bob) const override
    {
        const auto n = pizza_.n();
        if (state == follow_only || !part_.contains(bob.piece, n))
            return {follow(eaten, bob, n), follow_only};
        const bool border = bob.piece == part_.start || bob.piece == part_.last(n);
        if (!border)
            return {follow(eaten, bob, n), inside_part};
        // Bob revealed a piece outside the part: take the minor piece at the other end instead.
        const Side other_side = opposite(bob.side);
        const Piece other_piece = eaten.next(other_side, n);
        if (part_.contains(other_piece, n))
            return {Move{other_piece, other_side}, follow_only};
        return {follow(eaten, bob, n), follow_only};
    }

private:
    Interval part_;
    Piece opening_;
};

class OnPartStrategy final : public AliceBase {
public:
    OnPartStrategy(Pizza pizza, XPizza x, StrategyPtr inner, std::string id)
        : AliceBase(std::move(pizza), std::move(id)), x_(std::move(x)), inner_(std::move(inner))
    {
        if (!inner_ || inner_->role() != Player::Alice)
            throw Error(ErrorKind::InvalidArgument, "on-part needs an Alice strategy");
        if (inner_->pizza() != x_.pizza)
            throw Error(ErrorKind::InvalidArgument,
                        "inner strategy " + inner_->id() + " was built for a different part");
        follow_only_ = inner_->state_count();
    }

    Piece opening() const override { return x_.index_map[inner_->opening()]; }
    StrategyState state_count() const override { return follow_only_ + 1; }
    StrategyState initial_state() const override { return inner_->initial_state(); }

    Reply respond(StrategyState state, const Arc& eaten, const Move& bob) const override
    {
        const auto n = pizza_.n();
        const Interval& part = x_.part;
        if (state == follow_only_ || !part.contains(bob.piece, n))
            return {follow(eaten, bob, n), follow_only_};

        const bool at_start = bob.piece == part.start;
        const bool at_end = bob.piece == part.last(n);
        if (at_start || at_end) {
            const Piece other_border = at_start ? part.last(n) : part.start;
            if (!eaten.contains(other_border, n)) {
                // Bob revealed the glued cut: do not follow across it.
                const Side other_side = opposite(bob.side);
                const Piece other_piece = eaten.next(other_side, n);
                if (part.contains(other_piece, n))
                    return {Move{other_piece, other_side}, follow_only_};
                return {follow(eaten, bob, n), follow_only_};
            }
        }

        const bool within = part.contains(eaten.start, n)
                            && part.offset_of(eaten.start, n) + eaten.length <= part.length;
        if (!within || eaten.length >= part.length)
            return {follow(eaten, bob, n), follow_only_};

        const Arc local{part.offset_of(eaten.start, n), eaten.length};
        const Move local_bob{part.offset_of(bob.piece, n), bob.side};
        const Reply r = inner_->respond(state, local, local_bob);
        const Piece whole = x_.index_map[r.move.piece];
        if (eaten.next(r.move.side, n) != whole)
            throw Error(ErrorKind::IllegalMove, "inner strategy " + inner_->id() + " crossed the glued cut");
        return {Move{whole, r.move.side}, r.next};
    }

private:
    XPizza x_;
    StrategyPtr inner_;
    StrategyState follow_only_ = 1;
};

class ExceptionAtCutStrategy final : public AliceBase {
public:
    ExceptionAtCutStrategy(StrategyPtr inner, Cut cut)
        : AliceBase(inner->pizza(), "exception:" + std::to_string(cut.index) + ":" + inner->id()),
          inner_(std::move(inner)), cut_(cut), follow_only_(inner_->state_count())
    {
        if (cut_.index >= pizza_.n())
            throw Error(ErrorKind::InvalidArgument, "cut index out of range");
    }

    Piece opening() const override { return inner_->opening(); }
    StrategyState state_count() const override { return follow_only_ + 1; }
    StrategyState initial_state() const override { return inner_->initial_state(); }

    Reply respond(StrategyState state, const Arc& eaten, const Move& bob) const override
    {
        const auto n = pizza_.n();
        if (state == follow_only_)
            return {follow(eaten, bob, n), follow_only_};
        const std::size_t revealed = bob.side == Side::Left ? bob.piece : (bob.piece + 1) % n;
        if (revealed == cut_.index) {
            const Side other_side = opposite(bob.side);
            const Piece other_piece = eaten.next(other_side, n);
            if (other_piece != eaten.next(bob.side, n))
                return {Move{other_piece, other_side}, follow_only_};
            return {follow(eaten, bob, n), follow_only_};
        }
        return inner_->respond(state, eaten, bob);
    }

private:
    StrategyPtr inner_;
    Cut cut_;
    StrategyState follow_only_;
};

class OptimalStrategy final : public Strategy {
public:
    OptimalStrategy(Pizza pizza, Player role) : pizza_(std::move(pizza)), role_(role), table_(pizza_) {}

    std::string id() const override { return role_ == Player::Alice ? "optimal" : "bob:optimal"; }
    Player role() const override { return role_; }
    const Pizza& pizza() const override { return pizza_; }

    Piece opening() const override
    {
        Piece best = 0;
        Size best_gain = -1;
        for (Piece p = 0; p < pizza_.n(); ++p) {
            const Size g = table_.gain(Arc{}, Move{p, Side::Opening});
            if (g > best_gain) {
                best = p;
                best_gain = g;
            }
        }
        return best;
    }

    Reply respond(StrategyState, const Arc& eaten, const Move&) const override
    {
        const auto n = pizza_.n();
        const Move left{eaten.next(Side::Left, n), Side::Left};
        const Move right{eaten.next(Side::Right, n), Side::Right};
        const Size gl = table_.gain(eaten, left);
        const Size gr = table_.gain(eaten, right);
        if (gl > gr || (gl == gr && left.piece <= right.piece))
            return {left, 0};
        return {right, 0};
    }

private:
    Pizza pizza_;
    Player role_;
    ArcValueTable table_;
};

class IntervalGuardBob final : public Strategy {
public:
    IntervalGuardBob(Pizza pizza, std::array<Cut, 3> cuts) : pizza_(std::move(pizza)), cuts_(cuts)
    {
        const auto n = pizza_.n();
        std::sort(cuts_.begin(), cuts_.end());
        for (const Cut c : cuts_) {
            if (c.index >= n)
                throw Error(ErrorKind::InvalidArgument, "thick cut " + std::to_string(c.index) + " out of range");
        }
        if (cuts_[0] == cuts_[1] || cuts_[1] == cuts_[2])
            throw Error(ErrorKind::InvalidArgument, "thick cuts must be distinct");
        for (std::size_t i = 0; i < 3; ++i) {
            intervals_[i] = interval_from(n, cuts_[i], cuts_[(i + 1) % 3]);
            sizes_[i] = interval_size(pizza_, intervals_[i]);
        }
    }

    std::string id() const override
    {
        return "bob:interval-guard:" + std::to_string(cuts_[0].index) + "," + std::to_string(cuts_[1].index) + ","
               + std::to_string(cuts_[2].index);
    }
    Player role() const override { return Player::Bob; }
    const Pizza& pizza() const override { return pizza_; }
    StrategyState state_count() const override { return 2; }

    Reply respond(StrategyState state, const Arc& eaten, const Move& alice) const override
    {
        const auto n = pizza_.n();
        const Move left{eaten.next(Side::Left, n), Side::Left};
        const Move right{eaten.next(Side::Right, n), Side::Right};
        if (left.piece == right.piece)
            return {left, state};

        if (alice.side == Side::Opening) {
            if (pizza_[alice.piece] == 0)
                return {heavier_class_end(alice.piece, left, right), color_follow};
            return {first_guard_move(eaten, left, right), guard};
        }
        if (state == color_follow)
            return {follow(eaten, alice, n), color_follow};

        const Move with = follow(eaten, alice, n);
        const Move against = with.side == Side::Left ? right : left;
        return {guard_choice(eaten, with, against), guard};
    }

private:
    static constexpr StrategyState guard = 0;
    static constexpr StrategyState color_follow = 1;

    std::size_t interval_of(Piece p) const
    {
        for (std::size_t i = 0; i < 3; ++i) {
            if (intervals_[i].contains(p, pizza_.n()))
                return i;
        }
        return 0;
    }

    bool touched(std::size_t i, const Arc& eaten) const
    {
        for (std::size_t k = 0; k < eaten.length; ++k) {
            if (intervals_[i].contains((eaten.start + k) % pizza_.n(), pizza_.n()))
                return true;
        }
        return false;
    }

    // After a 0-size opening the rest is an even path; take its heavier color class.
    Move heavier_class_end(Piece opening, const Move& left, const Move& right) const
    {
        const auto n = pizza_.n();
        Size clockwise_class = 0;
        for (std::size_t j = 0; j + 1 < n; j += 2)
            clockwise_class += pizza_[opening + 1 + j];
        const Size rest = pizza_.total() - pizza_[opening] - clockwise_class;
        return clockwise_class >= rest ? right : left;
    }

    Move first_guard_move(const Arc& eaten, const Move& left, const Move& right) const
    {
        const auto n = pizza_.n();
        for (const Cut c : cuts_) {
            const bool by_left = c.index == left.piece || c.index == (left.piece + 1) % n;
            const bool by_right = c.index == right.piece || c.index == (right.piece + 1) % n;
            if (by_left && by_right)
                return left.piece < right.piece ? left : right;
            if (by_left)
                return left;
            if (by_right)
                return right;
        }
        // No thick cut next to either piece: stay in the touched interval, else take more.
        const bool lt = touched(interval_of(left.piece), eaten);
        const bool rt = touched(interval_of(right.piece), eaten);
        if (lt != rt)
            return lt ? left : right;
        if (pizza_[left.piece] != pizza_[right.piece])
            return pizza_[left.piece] > pizza_[right.piece] ? left : right;
        return left.piece < right.piece ? left : right;
    }

    Move guard_choice(const Arc& eaten, const Move& with, const Move& against) const
    {
        const std::size_t iw = interval_of(with.piece);
        const std::size_t ia = interval_of(against.piece);
        if (touched(iw, eaten))
            return with;
        if (touched(ia, eaten))
            return against;
        if (iw == ia || sizes_[iw] < sizes_[ia])
            return with;
        if (sizes_[ia] < sizes_[iw])
            return against;
        return intervals_[iw].start < intervals_[ia].start ? with : against;
    }

    Pizza pizza_;
    std::array<Cut, 3> cuts_;
    std::array<Interval, 3> intervals_{};
    std::array<Size, 3> sizes_{};
};

class RenamedStrategy final : public Strategy {
public:
    RenamedStrategy(StrategyPtr inner, std::string id) : inner_(std::move(inner)), id_(std::move(id)) {}
    std::string id() const override { return id_; }
    Player role() const override { return inner_->role(); }
    const Pizza& pizza() const override { return inner_->pizza(); }
    StrategyState state_count() const override { return inner_->state_count(); }
    StrategyState initial_state() const override { return inner_->initial_state(); }
    Piece opening() const override { return inner_->opening(); }
    Reply respond(StrategyState s, const Arc& eaten, const Move& m) const override
    {
        return inner_->respond(s, eaten, m);
    }

private:
    StrategyPtr inner_;
    std::string id_;
};

} // namespace

StrategyPtr follow_strategy(const Pizza& pizza, Piece opening, std::string id)
{
    return std::make_shared<FollowStrategy>(pizza, opening, std::move(id));
}

StrategyPtr even_strategy(const Pizza& pizza)
{
    if (pizza.n() % 2 != 0)
        throw Error(ErrorKind::Precondition, "even strategy needs an even number of pieces");
    Size class0 = 0;
    for (std::size_t i = 0; i < pizza.n(); i += 2)
        class0 += pizza[i];
    const Piece opening = class0 >= pizza.total() - class0 ? 0 : 1;
    return follow_strategy(pizza, opening, "even");
}

StrategyPtr fb_strategy(const Pizza& pizza, const BestAnswerTable& table, Cut cut)
{
    if (cut.index >= pizza.n())
        throw Error(ErrorKind::InvalidArgument, "cut index out of range");
    const auto& answered = table.answered[cut.index];
    if (answered.empty())
        throw Error(ErrorKind::Precondition,
                    "cut " + std::to_string(cut.index) + " is not a best answer to any piece");
    return follow_strategy(pizza, answered.front(), "fb:" + std::to_string(cut.index));
}

StrategyPtr fb_strategy(const Pizza& pizza, Cut cut)
{
    return fb_strategy(pizza, build_best_answer_table(pizza), cut);
}

StrategyPtr best_fb_strategy(const Pizza& pizza)
{
    if (pizza.n() % 2 == 0)
        return even_strategy(pizza);
    const auto table = build_best_answer_table(pizza);
    const auto h = classify(pizza);
    return fb_strategy(pizza, table, table.best_cuts[h.witness].front());
}

StrategyPtr one_third_strategy(const Pizza& pizza)
{
    if (pizza.n() % 2 == 0)
        throw Error(ErrorKind::Precondition, "one-third strategy needs an odd number of pieces");
    const auto table = build_best_answer_table(pizza);
    const Cut worst = worst_cuts(table).front();
    if (3 * table.cut_value[worst.index] >= pizza.total())
        return renamed(fb_strategy(pizza, table, worst), "one-third");
    // Green pieces of Cworst are the odd offsets of the whole circle read from Cworst.
    const Piece middle = middle_piece(pizza, Interval{worst.index, pizza.n()});
    return follow_strategy(pizza, middle, "one-third");
}

StrategyPtr mfb_strategy(const Pizza& pizza, const Tripartition& tri, PartName x)
{
    return std::make_shared<MfbStrategy>(pizza, tri.part(x), std::string("mfb:") + part_letter(x));
}

StrategyPtr on_part(const Pizza& pizza, const Tripartition& tri, PartName x, StrategyPtr inner)
{
    if (!inner)
        throw Error(ErrorKind::InvalidArgument, "on-part needs an inner strategy");
    std::string id = std::string("on-part:") + part_letter(x) + ":" + inner->id();
    return std::make_shared<OnPartStrategy>(pizza, glue_x_pizza(pizza, tri, x), std::move(inner), std::move(id));
}

StrategyPtr exception_at_cut(StrategyPtr inner, Cut cut)
{
    if (!inner || inner->role() != Player::Alice)
        throw Error(ErrorKind::InvalidArgument, "exception rule needs an Alice strategy");
    return std::make_shared<ExceptionAtCutStrategy>(std::move(inner), cut);
}

StrategyPtr optimal_strategy(const Pizza& pizza, Player role)
{
    return std::make_shared<OptimalStrategy>(pizza, role);
}

StrategyPtr interval_guard_bob(const Pizza& pizza, std::array<Cut, 3> thick_cuts)
{
    return std::make_shared<IntervalGuardBob>(pizza, thick_cuts);
}

StrategyPtr renamed(StrategyPtr inner, std::string id)
{
    return std::make_shared<RenamedStrategy>(std::move(inner), std::move(id));
}

Rational shave_bound(const Pizza& pizza)
{
    const auto sizes = pizza.sizes();
    const Size m = *std::min_element(sizes.begin(), sizes.end());
    const Size shaved = static_cast<Size>(pizza.n()) * m;
    return Rational(4, 9) * Rational(pizza.total() - shaved) + Rational(shaved, 2);
}

Rational StrategyValueBound::evaluate(const PartSizes& sizes) const
{
    const auto v = sizes.as_array();
    Rational sum(0);
    for (std::size_t i = 0; i < 6; ++i)
        sum += coefficients[i] * v[i];
    return sum;
}

std::string StrategyValueBound::to_string() const
{
    static const char* names[6] = {"b_major", "b_minor", "m_major", "m_minor", "w_major", "w_minor"};
    std::string out;
    for (std::size_t i = 0; i < 6; ++i) {
        const Rational& c = coefficients[i];
        if (c.numerator() == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (c != Rational(1))
            out += std::to_string(c.numerator()) + (c.denominator() == 1 ? "" : "/" + std::to_string(c.denominator()))
                   + "*";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

namespace {

StrategyValueBound make_bound(std::string id, std::array<Rational, 6> c)
{
    return StrategyValueBound{std::move(id), c};
}

const Rational one(1);
const Rational zero(0);
const Rational half(1, 2);

} // namespace

StrategyValueBound fb_bound(CutRole role)
{
    switch (role) {
    case CutRole::Best:
        return make_bound("fb:Cbest", {one, zero, zero, one, zero, one});
    case CutRole::Mid:
        return make_bound("fb:Cmid", {zero, one, one, zero, zero, one});
    case CutRole::Worst:
        return make_bound("fb:Cworst", {zero, one, zero, one, one, zero});
    }
    throw Error(ErrorKind::InvalidArgument, "unknown cut role");
}

StrategyValueBound mfb_bound(PartName x)
{
    switch (x) {
    case PartName::B:
        return make_bound("mfb:B", {half, zero, zero, one, one, zero});
    case PartName::M:
        return make_bound("mfb:M", {zero, one, half, zero, one, zero});
    case PartName::W:
        return make_bound("mfb:W", {zero, one, one, zero, half, zero});
    }
    throw Error(ErrorKind::InvalidArgument, "unknown part");
}

StrategyValueBound outside_bound(PartName x)
{
    switch (x) {
    case PartName::B:
        return make_bound("outside:B", {zero, zero, zero, one, one, zero});
    case PartName::M:
        return make_bound("outside:M", {zero, one, zero, zero, one, zero});
    case PartName::W:
        return make_bound("outside:W", {zero, one, one, zero, zero, zero});
    }
    throw Error(ErrorKind::InvalidArgument, "unknown part");
}

} // namespace pizza
