#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gamedec/decompose.hpp"
#include "gamedec/game.hpp"
#include "gamedec/solver.hpp"

namespace gamedec {

using Json = nlohmann::ordered_json;

/// Parses the game text format:
///   bimatrix <n> <m>
///   n rows of m entries for A, then n rows for B
/// Entries are integers or fractions (`-3`, `1/2`). Blank lines are ignored.
/// Throws parse_error with 1-based line/column on malformed input.
BimatrixGame parse_game(std::string_view text);

/// Canonical writer; parse_game(write_game(g)) == g bit-exactly.
std::string write_game(const BimatrixGame& g);

Json game_to_json(const BimatrixGame& g);
Json equilibrium_to_json(const Equilibrium& eq);
Json tree_to_json(const DecompositionTree& tree);
Json report_to_json(const SolveReport& report);

/// Reads solve's equilibrium JSON back. Validates shape and rational
/// grammar (parse_error); distribution validity is left to MixedStrategy.
Equilibrium equilibrium_from_json(const Json& j);

}  // namespace gamedec
