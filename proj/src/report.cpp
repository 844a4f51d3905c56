#include "pizza/report.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>

namespace pizza {

Json ratio_json(Size num, Size den)
{
    const Rational r(num, den);
    return Json{{"num", r.numerator()}, {"den", r.denominator()}};
}

std::string ratio_string(Size num, Size den)
{
    return rational_string(Rational(num, den));
}

std::string rational_string(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json move_json(const Move& m)
{
    return Json{{"piece", m.piece}, {"side", to_string(m.side)}};
}

Json moves_json(const std::vector<Move>& line)
{
    Json out = Json::array();
    for (const Move& m : line)
        out.push_back(move_json(m));
    return out;
}

Json state_json(const GameState& state)
{
    const Pizza& pizza = state.pizza();
    Json history = Json::array();
    for (const PlayedMove& pm : state.history()) {
        Json h = move_json(pm.move);
        h["player"] = to_string(pm.player);
        history.push_back(h);
    }
    Json owners = Json::array();
    for (const auto& o : state.owners())
        owners.push_back(o ? Json(to_string(*o)) : Json(nullptr));
    Json legal = Json::array();
    for (const Move& m : legal_moves(state))
        legal.push_back(move_json(m));
    return Json{
        {"sizes", pizza.sizes()},
        {"n", pizza.n()},
        {"total", pizza.total()},
        {"eaten", {{"start", state.eaten().start}, {"length", state.eaten().length}}},
        {"turn", to_string(state.turn())},
        {"finished", state.finished()},
        {"scores", {{"alice", state.scores().alice}, {"bob", state.scores().bob}}},
        {"history", history},
        {"owners", owners},
        {"legal_moves", legal},
    };
}

Json hints_json(const std::vector<MoveHint>& hints)
{
    Json out = Json::array();
    for (const MoveHint& h : hints) {
        Json j = move_json(h.move);
        j["gain"] = h.gain;
        j["final_total"] = h.final_total;
        out.push_back(j);
    }
    return out;
}

namespace {

Json cuts_json(const std::vector<Cut>& cuts)
{
    Json out = Json::array();
    for (const Cut c : cuts)
        out.push_back(c.index);
    return out;
}

} // namespace

Json tripartition_json(const Pizza& pizza, const Tripartition& tri)
{
    const auto n = pizza.n();
    Json parts = Json::object();
    for (const PartName x : all_parts) {
        const Interval& I = tri.part(x);
        parts[std::string(1, part_letter(x))] = Json{
            {"start", I.start},
            {"length", I.length},
            {"pieces", I.pieces(n)},
            {"majors", tri.majors(x, n)},
            {"minors", tri.minors(x, n)},
            {"middle_piece", middle_piece(pizza, I)},
        };
    }
    const auto& s = tri.sizes;
    return Json{
        {"cuts", {{"worst", tri.cuts.worst.index}, {"best", tri.cuts.best.index}, {"mid", tri.cuts.mid.index}}},
        {"p_hat", tri.cuts.p_hat},
        {"p_tilde", tri.cuts.p_tilde ? Json(*tri.cuts.p_tilde) : Json(nullptr)},
        {"parts", parts},
        {"sizes",
         {{"b_major", s.b_major},
          {"b_minor", s.b_minor},
          {"m_major", s.m_major},
          {"m_minor", s.m_minor},
          {"w_major", s.w_major},
          {"w_minor", s.w_minor}}},
    };
}

Json analysis_json(const Pizza& pizza)
{
    const Hardness h = classify(pizza);
    Json j{
        {"sizes", pizza.sizes()},
        {"n", pizza.n()},
        {"total", pizza.total()},
        {"hardness", h.classification == Difficulty::Hard ? "hard" : "easy"},
        {"best_fb", {{"value", h.best_fb_value}, {"opening", h.witness}}},
    };
    if (pizza.total() > 0)
        j["best_fb"]["ratio"] = ratio_json(h.best_fb_value, pizza.total());
    if (pizza.n() % 2 == 0) {
        j["coloring"] = "even";
        return j;
    }
    const auto table = build_best_answer_table(pizza);
    Json cuts = Json::array();
    for (std::size_t c = 0; c < pizza.n(); ++c)
        cuts.push_back(Json{{"cut", c}, {"red_size", table.cut_value[c]}, {"answered", table.answered[c]}});
    j["cuts"] = cuts;
    j["worst_cuts"] = cuts_json(worst_cuts(table));
    j["best_cuts"] = cuts_json(best_cuts(table));
    if (h.classification == Difficulty::Hard)
        j["tripartition"] = tripartition_json(pizza, tripartition(pizza, table));
    return j;
}

Json evaluation_json(const Pizza& pizza, const std::string& strategy_id, Player role, const EvaluationResult& r)
{
    Json j{
        {"strategy", strategy_id},
        {"role", to_string(role)},
        {"alice", r.alice},
        {"bob", r.bob},
        {"total", pizza.total()},
        {"line", moves_json(r.line)},
        {"nodes", r.nodes},
    };
    if (pizza.total() > 0) {
        j["alice_ratio"] = ratio_json(r.alice, pizza.total());
        j["bob_ratio"] = ratio_json(r.bob, pizza.total());
    }
    return j;
}

Json strategy_values_json(const Pizza& pizza)
{
    Json out = Json::object();
    const auto add = [&](const StrategyPtr& s) { out[s->id()] = evaluate_vs_adversary(pizza, *s).alice; };
    if (pizza.n() % 2 == 0) {
        add(even_strategy(pizza));
    } else {
        add(one_third_strategy(pizza));
        const auto table = build_best_answer_table(pizza);
        if (is_hard(pizza)) {
            const auto tri = tripartition(pizza, table);
            for (const Cut c : {tri.cuts.best, tri.cuts.mid, tri.cuts.worst}) {
                if (!out.contains("fb:" + std::to_string(c.index)))
                    add(fb_strategy(pizza, table, c));
            }
            for (const PartName x : all_parts)
                add(mfb_strategy(pizza, tri, x));
        }
    }
    out["best-of-three"] = best_of_three(pizza).value;
    out["best-of-four"] = best_of_four(pizza).value;
    return out;
}

Json report_json(const VerificationReport& report)
{
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(Json{{"sizes", v.pizza.sizes()}, {"detail", v.detail}});
    Json witnesses = Json::array();
    for (const auto& w : report.witnesses)
        witnesses.push_back(Json{{"sizes", w.pizza.sizes()}, {"value", w.value}});
    return Json{
        {"claim", report.claim},
        {"family", report.family},
        {"checked", report.checked},
        {"not_applicable", report.not_applicable},
        {"violations", violations},
        {"tight_count", report.tight_count},
        {"witnesses", witnesses},
        {"wall_ms", report.wall_time.count()},
        {"ok", report.ok()},
    };
}

std::string report_table(const VerificationReport& report)
{
    std::ostringstream out;
    out << std::left << std::setw(16) << "claim" << report.claim << '\n'
        << std::setw(16) << "family" << report.family << '\n'
        << std::setw(16) << "checked" << report.checked << '\n'
        << std::setw(16) << "not applicable" << report.not_applicable << '\n'
        << std::setw(16) << "violations" << report.violations.size() << '\n'
        << std::setw(16) << "tight" << report.tight_count << '\n'
        << std::setw(16) << "wall time" << report.wall_time.count() << " ms\n";
    for (const auto& v : report.violations)
        out << "  violation " << serialize_pizza(v.pizza) << ": " << v.detail << '\n';
    for (const auto& w : report.witnesses)
        out << "  tight " << serialize_pizza(w.pizza) << " value " << w.value << '\n';
    out << (report.ok() ? "OK" : "VIOLATED") << '\n';
    return out.str();
}

Json search_json(std::size_t n, const std::vector<Size>& alphabet, const SearchResult& result)
{
    Json matches = Json::array();
    for (const auto& p : result.matches)
        matches.push_back(p.sizes());
    return Json{
        {"n", n},
        {"alphabet", alphabet},
        {"visited", result.visited},
        {"units", result.units},
        {"resumed_units", result.resumed_units},
        {"matches", matches},
    };
}

} // namespace pizza
