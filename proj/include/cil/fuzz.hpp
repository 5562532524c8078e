#pragma once

#include "cil/checker.hpp"
#include "cil/formula.hpp"
#include "cil/game_model.hpp"
#include "cil/model_io.hpp"
#include "cil/proof.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace cil
{

struct FuzzConfig
{
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::size_t max_states = 5;
    std::size_t max_agents = 3;
    std::size_t max_actions = 3;
    std::size_t max_formula_depth = 3;
    std::size_t max_rules = 12;
    std::size_t instances_per_schema = 3;
    CheckOptions check{};

    // Bounds used by the checker-versus-oracle campaign.
    [[nodiscard]] static FuzzConfig oracle_defaults();

    // Throws Error if a bound is zero.
    void validate() const;
};

// Atoms used by generated games and formulas.
[[nodiscard]] const std::vector< std::string >& fuzz_atoms();

// Counter-based seed derivation: the stream for (seed, trial, purpose) does
// not depend on any other trial.
[[nodiscard]] std::uint64_t derive_seed( std::uint64_t seed, std::uint64_t trial, std::uint64_t purpose );

using Rng = std::mt19937_64;

// Random well-formed game, deterministic in seed. States are w0, w1, ...,
// agents a0, a1, ..., actions 0, 1, ...
[[nodiscard]] GameModel gen_game( std::uint64_t seed, const FuzzConfig& cfg );

// Random formula of depth at most `depth` over the given agents and atoms.
[[nodiscard]] Formula gen_formula( std::uint64_t seed, std::size_t depth, const std::vector< Agent >& agents,
                                   const std::vector< std::string >& atoms );
[[nodiscard]] Formula gen_formula( Rng& rng, std::size_t depth, const std::vector< Agent >& agents,
                                   const std::vector< std::string >& atoms );

// Random coalition drawn from `agents`, each member with probability 1/2.
[[nodiscard]] Coalition gen_coalition( Rng& rng, const std::vector< Agent >& agents );

// Random instance of the schema with its side condition satisfied. The
// short form draws agents a0 .. a{max_agents-1}.
[[nodiscard]] Formula instantiate_axiom( AxiomSchemaId id, std::uint64_t seed, const FuzzConfig& cfg );
[[nodiscard]] Formula instantiate_axiom( AxiomSchemaId id, Rng& rng, const FuzzConfig& cfg,
                                         const std::vector< Agent >& agents );

struct Violation
{
    std::uint64_t seed;
    std::size_t trial;
    std::string schema;  // schema name, or necK / necS / mp
    GameModel model;
    StateId state;
    Formula formula;
};

struct FuzzReport
{
    std::map< std::string, std::size_t > trials_run;   // per schema
    std::map< std::string, std::size_t > rule_checks;  // necK, necS, mp
    std::vector< Violation > violations;               // sorted by (seed, trial)

    [[nodiscard]] bool sound() const { return violations.empty(); }
    void merge( FuzzReport other );
};

// Every schema instance must be valid in every generated game; necessitation
// must preserve validity in the game and modus ponens truth at each state.
[[nodiscard]] FuzzReport fuzz_soundness( const FuzzConfig& cfg );
// One trial of fuzz_soundness, for reproducing a reported violation.
[[nodiscard]] FuzzReport fuzz_trial( const FuzzConfig& cfg, std::size_t trial );

[[nodiscard]] Json fuzz_report_to_json( const FuzzConfig& cfg, const FuzzReport& report );

struct Discrepancy
{
    std::uint64_t seed;
    std::size_t trial;
    GameModel model;
    StateId state;
    Formula formula;
    bool checker;
    bool oracle;
};

struct OracleDiffReport
{
    std::size_t instances = 0;
    std::size_t holding = 0;  // instances where both agree the formula holds
    std::vector< Discrepancy > discrepancies;
};

// Compares Checker::satisfies with naive_check on random instances.
[[nodiscard]] OracleDiffReport oracle_diff( const FuzzConfig& cfg );

[[nodiscard]] Json oracle_report_to_json( const FuzzConfig& cfg, const OracleDiffReport& report );

} // namespace cil
