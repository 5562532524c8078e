#pragma once

#include "cil/formula.hpp"
#include "cil/game_model.hpp"
#include "cil/model_io.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace cil
{

struct CheckOptions
{
    bool memoize = true;
    // Fault injection for harness tests: strategies are judged at the
    // current state only instead of at every state the actors confuse it with.
    bool ignore_actor_uncertainty = false;
};

// One row of a strategy: the actors' answer to an intelligence report.
struct WitnessEntry
{
    ActionAssignment beta;   // over the intel coalition
    ActionAssignment gamma;  // over the actor coalition
};

// An intelligence report that no actor profile can answer. `gamma` is the
// first candidate in canonical order and (delta, from, to) a transition that
// defeats it.
struct Counterexample
{
    ActionAssignment beta;
    std::size_t gammas_tried = 0;
    ActionAssignment gamma;
    ActionAssignment delta;  // complete, agrees with beta and gamma
    StateId from;
    StateId to;
};

struct CheckResult
{
    bool holds = false;
    std::optional< std::vector< WitnessEntry > > witness;
    std::optional< Counterexample > counterexample;
};

// {holds, witness?, counterexample?}
[[nodiscard]] Json check_result_to_json( const CheckResult& result );

// Model checker for one game. Results of subformulas are cached per
// (subformula, state) for the lifetime of the object.
class Checker
{
public:
    explicit Checker( const Game& game, CheckOptions options = {} );

    // Throws IncompatibleAgents, UnknownState.
    [[nodiscard]] bool satisfies( const StateId& w, const Formula& f );
    [[nodiscard]] bool satisfies( StateIndex w, const Formula& f );

    // K_C f at w.
    [[nodiscard]] bool check_knowledge( const StateId& w, const Coalition& coalition, const Formula& f );

    // [actor]_intel f at w, with a witness strategy or a counterexample.
    // Throws DisjointnessViolation, IncompatibleAgents, UnknownState.
    [[nodiscard]] CheckResult check_intel_power( const StateId& w, const Coalition& actor, const Coalition& intel,
                                                 const Formula& f );

    // True at every state.
    [[nodiscard]] bool valid_in_model( const Formula& f );

    [[nodiscard]] std::vector< StateId > failing_states( const Formula& f );

    [[nodiscard]] const Game& game() const { return _game; }

private:
    struct IntelOutcome
    {
        bool holds = true;
        std::vector< std::pair< Profile, Profile > > witness;
        std::optional< Counterexample > counterexample;
    };

    void require_agents( const Formula& f ) const;
    bool eval( StateIndex w, const Formula& f );
    bool eval_uncached( StateIndex w, const Formula& f );
    IntelOutcome decide_intel( StateIndex w, const std::vector< AgentIndex >& actor,
                               const std::vector< AgentIndex >& intel, const Formula& body, bool explain );

    const Game& _game;
    CheckOptions _options;
    std::unordered_map< Formula, std::size_t, FormulaHash > _ids;
    std::vector< std::vector< std::int8_t > > _memo;
};

// Calls `visit` with every assignment of actions to `agents` (all other
// entries unbound), in canonical order: earlier agents vary slowest.
// Stops early when `visit` returns false.
template < typename Visit >
void for_each_assignment( std::size_t num_agents, const std::vector< AgentIndex >& agents, std::size_t num_actions,
                          Visit&& visit )
{
    Profile p( num_agents, unbound );
    for ( auto a : agents )
        p[ a ] = 0;
    while ( true )
    {
        if ( !visit( static_cast< const Profile& >( p ) ) )
            return;
        std::size_t k = agents.size();
        while ( k > 0 )
        {
            auto& slot = p[ agents[ k - 1 ] ];
            if ( static_cast< std::size_t >( ++slot ) < num_actions )
                break;
            slot = 0;
            --k;
        }
        if ( k == 0 )
            return;
    }
}

} // namespace cil
