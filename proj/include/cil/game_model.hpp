#pragma once

#include "cil/coalition.hpp"
#include "cil/errors.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cil
{

using StateId = std::string;
using ActionId = std::string;

// Partial or total map from agents to actions. A total assignment over the
// game's agents is a complete action profile.
using ActionAssignment = std::map< Agent, ActionId >;

// Blocks of an equivalence relation on states.
using Partition = std::vector< std::vector< StateId > >;

// A transition from `from` to `to` for every complete profile that agrees
// with `guard`; agents the guard leaves out are wildcards.
struct TransitionRule
{
    StateId from;
    ActionAssignment guard;
    StateId to;

    friend bool operator==( const TransitionRule&, const TransitionRule& ) = default;
};

// Finite game as written in a model file. Plain data: use validate_model to
// check it and Game::compile to get something the checker can run on.
struct GameModel
{
    std::vector< StateId > states;
    std::vector< Agent > agents;
    std::vector< ActionId > actions;
    // Agents left out have the identity relation (every state its own block).
    std::map< Agent, Partition > indist;
    std::vector< TransitionRule > rules;
    std::map< std::string, std::vector< StateId > > valuation;

    friend bool operator==( const GameModel&, const GameModel& ) = default;
};

struct Diagnostic
{
    std::string location;  // e.g. "indist.British[1]" or "rules[3].guard"
    std::string message;

    [[nodiscard]] std::string to_string() const { return location + ": " + message; }
};

// Empty iff the model is well formed.
[[nodiscard]] std::vector< Diagnostic > validate_model( const GameModel& model );

// True iff the profile agrees with the guard on every agent the guard binds.
[[nodiscard]] bool matches( const ActionAssignment& guard, const ActionAssignment& profile );

class ModelError : public Error
{
public:
    explicit ModelError( std::vector< Diagnostic > diagnostics );

    [[nodiscard]] const std::vector< Diagnostic >& diagnostics() const { return _diagnostics; }

private:
    std::vector< Diagnostic > _diagnostics;
};

using StateIndex = std::size_t;
using AgentIndex = std::size_t;
using ActionIndex = std::size_t;

// Profile over the game's agents by index; `unbound` marks agents without an action.
using Profile = std::vector< int >;
inline constexpr int unbound = -1;

// Indexed, validated form of a GameModel. Agents are numbered in canonical
// (lexicographic) order, actions likewise; states keep declaration order.
class Game
{
public:
    struct Rule
    {
        StateIndex from;
        Profile guard;
        StateIndex to;
    };

    // Throws ModelError carrying the validate_model diagnostics.
    [[nodiscard]] static Game compile( GameModel model );

    [[nodiscard]] const GameModel& model() const { return _model; }

    [[nodiscard]] std::size_t num_states() const { return _states.size(); }
    [[nodiscard]] std::size_t num_agents() const { return _agents.size(); }
    [[nodiscard]] std::size_t num_actions() const { return _actions.size(); }

    [[nodiscard]] const StateId& state_name( StateIndex s ) const { return _states[ s ]; }
    [[nodiscard]] const Agent& agent_name( AgentIndex a ) const { return _agents[ a ]; }
    [[nodiscard]] const ActionId& action_name( ActionIndex x ) const { return _actions[ x ]; }

    [[nodiscard]] std::optional< StateIndex > find_state( const StateId& name ) const;
    [[nodiscard]] std::optional< AgentIndex > find_agent( const Agent& name ) const;
    [[nodiscard]] std::optional< ActionIndex > find_action( const ActionId& name ) const;

    // Throws UnknownState / UnknownAgent.
    [[nodiscard]] StateIndex state_index( const StateId& name ) const;
    [[nodiscard]] std::vector< AgentIndex > agent_indices( const Coalition& coalition ) const;

    // Block label of `s` under agent a's indistinguishability relation.
    [[nodiscard]] int block_of( AgentIndex a, StateIndex s ) const { return _block_of[ a ][ s ]; }

    // States w' with w ~_C w' for the coalition given by agent indices, in
    // declaration order.
    [[nodiscard]] std::vector< StateIndex > indist_block( StateIndex w, const std::vector< AgentIndex >& coalition ) const;

    [[nodiscard]] const std::vector< Rule >& rules_from( StateIndex s ) const { return _rules_from[ s ]; }

    // Atoms absent from the valuation are false everywhere.
    [[nodiscard]] bool holds_atom( const std::string& atom, StateIndex s ) const;

    [[nodiscard]] Profile to_profile( const ActionAssignment& assignment ) const;
    [[nodiscard]] ActionAssignment to_assignment( const Profile& profile ) const;

private:
    GameModel _model;
    std::vector< StateId > _states;
    std::vector< Agent > _agents;
    std::vector< ActionId > _actions;
    std::unordered_map< std::string, StateIndex > _state_index;
    std::unordered_map< std::string, AgentIndex > _agent_index;
    std::unordered_map< std::string, ActionIndex > _action_index;
    std::vector< std::vector< int > > _block_of;
    std::vector< std::vector< Rule > > _rules_from;
    std::unordered_map< std::string, std::vector< bool > > _valuation;
};

// Guard and fixed actions do not conflict on any agent bound by both.
[[nodiscard]] bool compatible( const Profile& guard, const Profile& fixed );

// Partition of the states under the intersection of the members' relations;
// the empty coalition yields a single block. Throws UnknownAgent.
[[nodiscard]] Partition coalition_indist( const Game& game, const Coalition& coalition );

struct Successor
{
    ActionAssignment profile;  // complete
    StateId to;

    friend auto operator<=>( const Successor&, const Successor& ) = default;
};

// Every (complete profile, target) such that the profile extends `fixed` and
// some rule from `from` admits it. Sorted and duplicate free.
[[nodiscard]] std::vector< Successor > successors( const Game& game, const StateId& from, const ActionAssignment& fixed );

// Distinct targets of the rules from `from` compatible with `fixed`. This is
// the projection of `successors` onto targets, computed without expansion.
[[nodiscard]] std::vector< StateIndex > successor_targets( const Game& game, StateIndex from, const Profile& fixed );

// Fills every unbound agent of `fixed` with the first action.
[[nodiscard]] Profile complete_with_first_action( Profile fixed );

} // namespace cil
