#pragma once

#include "cil/model_io.hpp"
#include "cil/proof.hpp"

#include <filesystem>
#include <string>

namespace cil
{

// Line-oriented proof files:
//
//   # comment
//   goal: [a]{c} p -> [a,b]{c} p
//   1. p -> p ; taut
//   2. [b]{c}(p -> p) ; necS 1 {b}{c}
//   3. ... ; ax:Cooperation
//   4. ... ; mp 2 3
//
// Justifications: taut | ax:<Schema> [where slot=value; ...] | mp n m
//                 | necK n {agents} | necS n {agents}{agents}
// Witness slots are phi, psi (formulas) and C, D, B, B' (coalitions).
//
// A missing or unreadable goal throws ParseError. Problems inside numbered
// lines are kept on the line (ProofLine::malformed) so the verdict can
// point at them.
[[nodiscard]] ProofScript parse_proof_script( const std::string& text );
[[nodiscard]] ProofScript load_proof_script( const std::filesystem::path& path );

[[nodiscard]] Json verdict_to_json( const ProofScript& script, const Verdict& verdict );

} // namespace cil
