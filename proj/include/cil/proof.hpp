#pragma once

#include "cil/coalition.hpp"
#include "cil/formula.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cil
{

enum class AxiomSchemaId
{
    Truth,                   // K_C phi -> phi
    Distributivity,          // K_C(phi -> psi) -> (K_C phi -> K_C psi)
    NegIntrospection,        // !K_C phi -> K_C !K_C phi
    EpistemicMono,           // K_C phi -> K_D phi,                   C subset of D
    StrategicIntrospection,  // [C]_B phi -> K_C [C]_B phi
    EmptyCoalition,          // K_{} phi -> []_{} phi
    Cooperation,             // [C]_B(phi -> psi) -> ([D]_{B,C} phi -> [C,D]_B psi),
                             //                                       B, C, D pairwise disjoint
    IntelMono,               // [C]_B phi -> [C]_B' phi,              B subset of B', B' disjoint from C
    NoneToAnalyze            // []_B phi -> []_{} phi
};

inline constexpr std::array< AxiomSchemaId, 9 > all_schemas = {
        AxiomSchemaId::Truth,          AxiomSchemaId::Distributivity,         AxiomSchemaId::NegIntrospection,
        AxiomSchemaId::EpistemicMono,  AxiomSchemaId::StrategicIntrospection, AxiomSchemaId::EmptyCoalition,
        AxiomSchemaId::Cooperation,    AxiomSchemaId::IntelMono,              AxiomSchemaId::NoneToAnalyze };

[[nodiscard]] std::string_view schema_name( AxiomSchemaId id );
[[nodiscard]] std::optional< AxiomSchemaId > schema_from_name( std::string_view name );

// Metavariable bindings. Formula slots are "phi" and "psi"; coalition slots
// are "C", "D", "B" and "B'".
struct Substitution
{
    std::map< std::string, Formula > formulas;
    std::map< std::string, Coalition > coalitions;

    friend bool operator==( const Substitution&, const Substitution& ) = default;
};

[[nodiscard]] std::vector< std::string > formula_slots( AxiomSchemaId id );
[[nodiscard]] std::vector< std::string > coalition_slots( AxiomSchemaId id );

struct MatchResult
{
    std::optional< Substitution > substitution;
    std::string mismatch;  // first reason for failure

    explicit operator bool() const { return substitution.has_value(); }
};

// Structural match of f against the schema, side condition included.
[[nodiscard]] MatchResult match_axiom( AxiomSchemaId id, const Formula& f );

// The schema instance for sigma. Throws Error when a slot is missing or the
// side condition fails.
[[nodiscard]] Formula instantiate_schema( AxiomSchemaId id, const Substitution& sigma );

inline constexpr std::size_t tautology_atom_budget = 20;

// Boolean validity with variables and modal subformulas as opaque atoms.
// Throws AtomBudgetExceeded beyond tautology_atom_budget atoms.
[[nodiscard]] bool is_tautology( const Formula& f );

struct ByAxiom
{
    AxiomSchemaId schema;
    std::optional< Substitution > witness;
};

struct ByTautology {};

// premise, and implication: premise -> this line
struct ByModusPonens
{
    std::size_t premise;
    std::size_t implication;
};

struct ByEpistemicNecessitation
{
    std::size_t premise;
    Coalition coalition;
};

struct ByStrategicNecessitation
{
    std::size_t premise;
    Coalition actor;
    Coalition intel;
};

using Justification =
        std::variant< ByAxiom, ByTautology, ByModusPonens, ByEpistemicNecessitation, ByStrategicNecessitation >;

[[nodiscard]] std::string to_string( const Justification& j );

struct ProofLine
{
    std::size_t index = 0;
    std::optional< Formula > formula;
    Justification justification = ByTautology{};
    // Set when the source line could not be read; the rest is meaningless then.
    std::optional< std::string > malformed;
};

struct ProofScript
{
    Formula goal;
    std::vector< ProofLine > lines;
};

struct LineVerdict
{
    std::size_t index;
    bool ok;
    std::string error;
};

struct Verdict
{
    bool ok = false;
    bool goal_reached = false;
    std::vector< LineVerdict > lines;

    // First rejected line, if any.
    [[nodiscard]] const LineVerdict* first_error() const;
};

// Lines are checked in order; a line is accepted only if its own step is
// correct and every line it cites was accepted. Lines must be numbered
// 1, 2, ... and cite strictly earlier lines.
[[nodiscard]] Verdict check_proof( const ProofScript& script );

} // namespace cil
