#pragma once

// JSON and text renderings shared by the CLI and the HTTP service.

#include "pizza/analysis.hpp"
#include "pizza/game.hpp"
#include "pizza/harness.hpp"
#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"

#include <json.hpp>

#include <string>

namespace pizza {

using Json = nlohmann::json;

/// Reduced fraction as {"num", "den"}; den > 0.
Json ratio_json(Size num, Size den);
/// Reduced fraction as "p/q".
std::string ratio_string(Size num, Size den);
std::string rational_string(const Rational& r);

Json move_json(const Move& m);
Json moves_json(const std::vector<Move>& line);
Json state_json(const GameState& state);
Json hints_json(const std::vector<MoveHint>& hints);

/// Hardness, best-answer table (odd n) and tripartition (hard pizzas).
Json analysis_json(const Pizza& pizza);
Json tripartition_json(const Pizza& pizza, const Tripartition& tri);

Json evaluation_json(const Pizza& pizza, const std::string& strategy_id, Player role, const EvaluationResult& r);

/// Exact values of the named strategies that apply to this pizza.
Json strategy_values_json(const Pizza& pizza);

Json report_json(const VerificationReport& report);
std::string report_table(const VerificationReport& report);

Json search_json(std::size_t n, const std::vector<Size>& alphabet, const SearchResult& result);

} // namespace pizza
