#pragma once

#include "cil/formula.hpp"
#include "cil/game_model.hpp"

#include <cstddef>

namespace cil
{

// 3^5 complete profiles.
inline constexpr std::size_t default_naive_bound = 243;

// Reference evaluator that reads the satisfaction clauses literally: it
// enumerates every complete action profile and every pair of states, works
// on the raw GameModel and shares no code with Checker. It computes the set
// of satisfying states bottom-up, one subformula at a time.
//
// Throws BoundExceeded when |actions|^|agents| > bound, ModelError for an
// invalid model, IncompatibleAgents and UnknownState as Checker does.
[[nodiscard]] bool naive_check( const GameModel& model, const StateId& w, const Formula& f,
                                std::size_t bound = default_naive_bound );

} // namespace cil
