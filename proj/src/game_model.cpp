#include "cil/game_model.hpp"

#include <algorithm>
#include <set>

namespace cil
{

namespace
{

template < typename Range >
std::set< std::string > declared( const Range& items, const std::string& what, std::vector< Diagnostic >& out )
{
    std::set< std::string > seen;
    for ( std::size_t i = 0; i < items.size(); ++i )
    {
        auto where = what + "[" + std::to_string( i ) + "]";
        if ( items[ i ].empty() )
            out.push_back( { where, "empty identifier" } );
        else if ( !seen.insert( items[ i ] ).second )
            out.push_back( { where, "duplicate " + what.substr( 0, what.size() - 1 ) + " '" + items[ i ] + "'" } );
    }
    return seen;
}

std::string join_diagnostics( const std::vector< Diagnostic >& diagnostics )
{
    std::string out = "invalid model";
    for ( const auto& d : diagnostics )
        out += "\n  " + d.to_string();
    return out;
}

} // namespace

std::vector< Diagnostic > validate_model( const GameModel& model )
{
    std::vector< Diagnostic > out;

    if ( model.states.empty() )
        out.push_back( { "states", "a game needs at least one state" } );
    if ( model.actions.empty() )
        out.push_back( { "actions", "the action domain must be non-empty" } );

    auto states = declared( model.states, "states", out );
    auto agents = declared( model.agents, "agents", out );
    auto actions = declared( model.actions, "actions", out );

    for ( std::size_t i = 0; i < model.agents.size(); ++i )
        if ( !model.agents[ i ].empty() && !is_identifier( model.agents[ i ] ) )
            out.push_back( { "agents[" + std::to_string( i ) + "]", "invalid agent name '" + model.agents[ i ] + "'" } );

    for ( const auto& [ agent, blocks ] : model.indist )
    {
        auto where = "indist." + agent;
        if ( !agents.contains( agent ) )
        {
            out.push_back( { where, "undeclared agent '" + agent + "'" } );
            continue;
        }
        std::set< StateId > covered;
        for ( std::size_t b = 0; b < blocks.size(); ++b )
        {
            auto block_where = where + "[" + std::to_string( b ) + "]";
            if ( blocks[ b ].empty() )
                out.push_back( { block_where, "empty block" } );
            for ( const auto& s : blocks[ b ] )
            {
                if ( !states.contains( s ) )
                    out.push_back( { block_where, "undeclared state '" + s + "'" } );
                else if ( !covered.insert( s ).second )
                    out.push_back( { block_where, "state '" + s + "' appears in more than one block" } );
            }
        }
        for ( const auto& s : model.states )
            if ( !covered.contains( s ) )
                out.push_back( { where, "state '" + s + "' is not covered by any block" } );
    }

    for ( std::size_t i = 0; i < model.rules.size(); ++i )
    {
        const auto& rule = model.rules[ i ];
        auto where = "rules[" + std::to_string( i ) + "]";
        if ( !states.contains( rule.from ) )
            out.push_back( { where + ".from", "undeclared state '" + rule.from + "'" } );
        if ( !states.contains( rule.to ) )
            out.push_back( { where + ".to", "undeclared state '" + rule.to + "'" } );
        for ( const auto& [ agent, action ] : rule.guard )
        {
            if ( !agents.contains( agent ) )
                out.push_back( { where + ".guard", "undeclared agent '" + agent + "'" } );
            if ( !actions.contains( action ) )
                out.push_back( { where + ".guard." + agent, "undeclared action '" + action + "'" } );
        }
    }

    for ( const auto& [ atom, members ] : model.valuation )
    {
        auto where = "valuation." + atom;
        if ( !is_identifier( atom ) || atom == "true" || atom == "false" )
            out.push_back( { where, "invalid atom name '" + atom + "'" } );
        for ( const auto& s : members )
            if ( !states.contains( s ) )
                out.push_back( { where, "undeclared state '" + s + "'" } );
    }

    return out;
}

bool matches( const ActionAssignment& guard, const ActionAssignment& profile )
{
    for ( const auto& [ agent, action ] : guard )
    {
        auto it = profile.find( agent );
        if ( it == profile.end() || it->second != action )
            return false;
    }
    return true;
}

ModelError::ModelError( std::vector< Diagnostic > diagnostics )
        : Error( join_diagnostics( diagnostics ) ), _diagnostics{ std::move( diagnostics ) }
{}

Game Game::compile( GameModel model )
{
    if ( auto diagnostics = validate_model( model ); !diagnostics.empty() )
        throw ModelError( std::move( diagnostics ) );

    Game g;
    g._states = model.states;
    g._agents = model.agents;
    g._actions = model.actions;
    std::sort( g._agents.begin(), g._agents.end() );
    std::sort( g._actions.begin(), g._actions.end() );
    for ( std::size_t i = 0; i < g._states.size(); ++i )
        g._state_index[ g._states[ i ] ] = i;
    for ( std::size_t i = 0; i < g._agents.size(); ++i )
        g._agent_index[ g._agents[ i ] ] = i;
    for ( std::size_t i = 0; i < g._actions.size(); ++i )
        g._action_index[ g._actions[ i ] ] = i;

    g._block_of.assign( g._agents.size(), {} );
    for ( AgentIndex a = 0; a < g._agents.size(); ++a )
    {
        auto& labels = g._block_of[ a ];
        labels.resize( g._states.size() );
        auto it = model.indist.find( g._agents[ a ] );
        if ( it == model.indist.end() )
        {
            for ( StateIndex s = 0; s < labels.size(); ++s )
                labels[ s ] = static_cast< int >( s );
            continue;
        }
        for ( std::size_t b = 0; b < it->second.size(); ++b )
            for ( const auto& s : it->second[ b ] )
                labels[ g._state_index.at( s ) ] = static_cast< int >( b );
    }

    g._rules_from.assign( g._states.size(), {} );
    for ( const auto& rule : model.rules )
    {
        auto from = g._state_index.at( rule.from );
        g._rules_from[ from ].push_back( { from, g.to_profile( rule.guard ), g._state_index.at( rule.to ) } );
    }

    for ( const auto& [ atom, members ] : model.valuation )
    {
        auto& bits = g._valuation[ atom ];
        bits.assign( g._states.size(), false );
        for ( const auto& s : members )
            bits[ g._state_index.at( s ) ] = true;
    }

    g._model = std::move( model );
    return g;
}

std::optional< StateIndex > Game::find_state( const StateId& name ) const
{
    if ( auto it = _state_index.find( name ); it != _state_index.end() )
        return it->second;
    return std::nullopt;
}

std::optional< AgentIndex > Game::find_agent( const Agent& name ) const
{
    if ( auto it = _agent_index.find( name ); it != _agent_index.end() )
        return it->second;
    return std::nullopt;
}

std::optional< ActionIndex > Game::find_action( const ActionId& name ) const
{
    if ( auto it = _action_index.find( name ); it != _action_index.end() )
        return it->second;
    return std::nullopt;
}

StateIndex Game::state_index( const StateId& name ) const
{
    if ( auto s = find_state( name ) )
        return *s;
    throw UnknownState( name );
}

std::vector< AgentIndex > Game::agent_indices( const Coalition& coalition ) const
{
    std::vector< AgentIndex > out;
    out.reserve( coalition.size() );
    for ( const auto& agent : coalition )
    {
        auto a = find_agent( agent );
        if ( !a )
            throw UnknownAgent( agent );
        out.push_back( *a );
    }
    return out;
}

std::vector< StateIndex > Game::indist_block( StateIndex w, const std::vector< AgentIndex >& coalition ) const
{
    std::vector< StateIndex > out;
    for ( StateIndex v = 0; v < _states.size(); ++v )
    {
        bool same = std::all_of( coalition.begin(), coalition.end(),
                                 [ & ]( AgentIndex a ) { return _block_of[ a ][ v ] == _block_of[ a ][ w ]; } );
        if ( same )
            out.push_back( v );
    }
    return out;
}

bool Game::holds_atom( const std::string& atom, StateIndex s ) const
{
    auto it = _valuation.find( atom );
    return it != _valuation.end() && it->second[ s ];
}

Profile Game::to_profile( const ActionAssignment& assignment ) const
{
    Profile out( _agents.size(), unbound );
    for ( const auto& [ agent, action ] : assignment )
    {
        auto a = find_agent( agent );
        if ( !a )
            throw UnknownAgent( agent );
        auto x = find_action( action );
        if ( !x )
            throw Error( "unknown action '" + action + "'" );
        out[ *a ] = static_cast< int >( *x );
    }
    return out;
}

ActionAssignment Game::to_assignment( const Profile& profile ) const
{
    ActionAssignment out;
    for ( AgentIndex a = 0; a < profile.size(); ++a )
        if ( profile[ a ] != unbound )
            out.emplace( _agents[ a ], _actions[ static_cast< std::size_t >( profile[ a ] ) ] );
    return out;
}

bool compatible( const Profile& guard, const Profile& fixed )
{
    for ( std::size_t a = 0; a < guard.size(); ++a )
        if ( guard[ a ] != unbound && fixed[ a ] != unbound && guard[ a ] != fixed[ a ] )
            return false;
    return true;
}

Partition coalition_indist( const Game& game, const Coalition& coalition )
{
    auto members = game.agent_indices( coalition );
    Partition out;
    std::vector< bool > placed( game.num_states(), false );
    for ( StateIndex w = 0; w < game.num_states(); ++w )
    {
        if ( placed[ w ] )
            continue;
        auto& block = out.emplace_back();
        for ( auto v : game.indist_block( w, members ) )
        {
            placed[ v ] = true;
            block.push_back( game.state_name( v ) );
        }
    }
    return out;
}

std::vector< Successor > successors( const Game& game, const StateId& from, const ActionAssignment& fixed )
{
    auto w = game.state_index( from );
    auto base = game.to_profile( fixed );
    std::set< Successor > out;
    for ( const auto& rule : game.rules_from( w ) )
    {
        if ( !compatible( rule.guard, base ) )
            continue;
        Profile merged = base;
        std::vector< AgentIndex > free;
        for ( AgentIndex a = 0; a < merged.size(); ++a )
        {
            if ( merged[ a ] == unbound )
                merged[ a ] = rule.guard[ a ];
            if ( merged[ a ] == unbound )
            {
                free.push_back( a );
                merged[ a ] = 0;
            }
        }
        // Odometer over the agents neither side binds.
        while ( true )
        {
            out.insert( { game.to_assignment( merged ), game.state_name( rule.to ) } );
            std::size_t k = free.size();
            while ( k > 0 )
            {
                auto& slot = merged[ free[ k - 1 ] ];
                if ( static_cast< std::size_t >( ++slot ) < game.num_actions() )
                    break;
                slot = 0;
                --k;
            }
            if ( k == 0 )
                break;
        }
    }
    return { out.begin(), out.end() };
}

std::vector< StateIndex > successor_targets( const Game& game, StateIndex from, const Profile& fixed )
{
    std::vector< StateIndex > out;
    for ( const auto& rule : game.rules_from( from ) )
        if ( compatible( rule.guard, fixed ) && std::find( out.begin(), out.end(), rule.to ) == out.end() )
            out.push_back( rule.to );
    std::sort( out.begin(), out.end() );
    return out;
}

Profile complete_with_first_action( Profile fixed )
{
    for ( auto& x : fixed )
        if ( x == unbound )
            x = 0;
    return fixed;
}

} // namespace cil
