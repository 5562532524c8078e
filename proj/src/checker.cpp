#include "cil/checker.hpp"

#include "cil/errors.hpp"

#include <algorithm>

namespace cil
{

namespace
{

Profile merge( const Profile& a, const Profile& b )
{
    Profile out = a;
    for ( std::size_t i = 0; i < out.size(); ++i )
        if ( out[ i ] == unbound )
            out[ i ] = b[ i ];
    return out;
}

bool binds_any( const Profile& guard, const std::vector< AgentIndex >& agents )
{
    return std::any_of( agents.begin(), agents.end(), [ & ]( AgentIndex a ) { return guard[ a ] != unbound; } );
}

} // namespace

Json check_result_to_json( const CheckResult& result )
{
    Json out;
    out[ "holds" ] = result.holds;
    if ( result.witness )
    {
        out[ "witness" ] = Json::array();
        for ( const auto& row : *result.witness )
            out[ "witness" ].push_back(
                    { { "beta", assignment_to_json( row.beta ) }, { "gamma", assignment_to_json( row.gamma ) } } );
    }
    if ( result.counterexample )
    {
        const auto& c = *result.counterexample;
        out[ "counterexample" ] = { { "beta", assignment_to_json( c.beta ) },
                                    { "gammas_tried", c.gammas_tried },
                                    { "gamma", assignment_to_json( c.gamma ) },
                                    { "delta", assignment_to_json( c.delta ) },
                                    { "from", c.from },
                                    { "to", c.to } };
    }
    return out;
}

Checker::Checker( const Game& game, CheckOptions options ) : _game{ game }, _options{ options } {}

void Checker::require_agents( const Formula& f ) const
{
    std::vector< std::string > missing;
    for ( const auto& agent : agents_of( f ) )
        if ( !_game.find_agent( agent ) )
            missing.push_back( agent );
    if ( !missing.empty() )
        throw IncompatibleAgents( std::move( missing ) );
}

bool Checker::satisfies( const StateId& w, const Formula& f ) { return satisfies( _game.state_index( w ), f ); }

bool Checker::satisfies( StateIndex w, const Formula& f )
{
    if ( w >= _game.num_states() )
        throw UnknownState( std::to_string( w ) );
    require_agents( f );
    return eval( w, f );
}

bool Checker::check_knowledge( const StateId& w, const Coalition& coalition, const Formula& f )
{
    return satisfies( w, knows( coalition, f ) );
}

CheckResult Checker::check_intel_power( const StateId& w, const Coalition& actor, const Coalition& intel,
                                        const Formula& f )
{
    if ( auto shared = actor.intersected_with( intel ); !shared.empty() )
        throw DisjointnessViolation( shared.members() );
    auto state = _game.state_index( w );
    require_agents( intel_power( actor, intel, f ) );

    auto outcome = decide_intel( state, _game.agent_indices( actor ), _game.agent_indices( intel ), f, true );
    CheckResult result;
    result.holds = outcome.holds;
    if ( outcome.holds )
    {
        auto& rows = result.witness.emplace();
        for ( const auto& [ beta, gamma ] : outcome.witness )
            rows.push_back( { _game.to_assignment( beta ), _game.to_assignment( gamma ) } );
    }
    else
        result.counterexample = std::move( outcome.counterexample );
    return result;
}

bool Checker::valid_in_model( const Formula& f )
{
    require_agents( f );
    for ( StateIndex w = 0; w < _game.num_states(); ++w )
        if ( !eval( w, f ) )
            return false;
    return true;
}

std::vector< StateId > Checker::failing_states( const Formula& f )
{
    require_agents( f );
    std::vector< StateId > out;
    for ( StateIndex w = 0; w < _game.num_states(); ++w )
        if ( !eval( w, f ) )
            out.push_back( _game.state_name( w ) );
    return out;
}

bool Checker::eval( StateIndex w, const Formula& f )
{
    if ( !_options.memoize )
        return eval_uncached( w, f );

    auto [ it, inserted ] = _ids.try_emplace( f, _memo.size() );
    if ( inserted )
        _memo.emplace_back( _game.num_states(), std::int8_t{ -1 } );
    auto id = it->second;
    if ( _memo[ id ][ w ] < 0 )
    {
        bool value = eval_uncached( w, f );
        _memo[ id ][ w ] = value ? 1 : 0;
    }
    return _memo[ id ][ w ] == 1;
}

bool Checker::eval_uncached( StateIndex w, const Formula& f )
{
    switch ( f.kind() )
    {
    case FormulaKind::Atom:
        return _game.holds_atom( f.atom_name(), w );
    case FormulaKind::Not:
        return !eval( w, f.body() );
    case FormulaKind::Implies:
        return !eval( w, f.lhs() ) || eval( w, f.rhs() );
    case FormulaKind::Knows:
    {
        for ( auto v : _game.indist_block( w, _game.agent_indices( f.coalition() ) ) )
            if ( !eval( v, f.body() ) )
                return false;
        return true;
    }
    case FormulaKind::IntelPower:
        return decide_intel( w, _game.agent_indices( f.actor() ), _game.agent_indices( f.intel() ), f.body(), false )
                .holds;
    }
    return false;
}

// For every report beta over `intel` find an actor profile gamma such that
// every rule leaving a state the actors cannot tell from w, and compatible
// with beta and gamma, lands where `body` holds. Only rules landing on a
// failing state matter; they are collected once.
Checker::IntelOutcome Checker::decide_intel( StateIndex w, const std::vector< AgentIndex >& actor,
                                             const std::vector< AgentIndex >& intel, const Formula& body,
                                             bool explain )
{
    std::vector< StateIndex > block;
    if ( _options.ignore_actor_uncertainty )
        block = { w };
    else
        block = _game.indist_block( w, actor );

    std::vector< const Game::Rule* > bad;
    for ( auto v : block )
        for ( const auto& rule : _game.rules_from( v ) )
            if ( !eval( rule.to, body ) )
                bad.push_back( &rule );

    const auto n = _game.num_agents();
    const auto k = _game.num_actions();
    IntelOutcome outcome;

    for_each_assignment( n, intel, k, [ & ]( const Profile& beta ) {
        std::vector< const Game::Rule* > relevant;
        bool hopeless = false;
        for ( const auto* rule : bad )
        {
            if ( !compatible( rule->guard, beta ) )
                continue;
            relevant.push_back( rule );
            if ( !binds_any( rule->guard, actor ) )
                hopeless = true;
        }

        std::optional< Profile > answer;
        if ( !hopeless )
        {
            for_each_assignment( n, actor, k, [ & ]( const Profile& gamma ) {
                auto fixed = merge( beta, gamma );
                bool refuted = std::any_of( relevant.begin(), relevant.end(), [ & ]( const Game::Rule* r ) {
                    return compatible( r->guard, fixed );
                } );
                if ( refuted )
                    return true;
                answer = gamma;
                return false;
            } );
        }

        if ( answer )
        {
            if ( explain )
                outcome.witness.emplace_back( beta, *answer );
            return true;
        }

        outcome.holds = false;
        if ( explain )
        {
            // All candidates fail; report how the first one does.
            std::size_t total = 1;
            for ( std::size_t i = 0; i < actor.size(); ++i )
                total *= k;
            Profile gamma( n, unbound );
            for ( auto a : actor )
                gamma[ a ] = 0;
            auto fixed = merge( beta, gamma );
            const auto* culprit = *std::find_if( relevant.begin(), relevant.end(), [ & ]( const Game::Rule* r ) {
                return compatible( r->guard, fixed );
            } );
            Counterexample cex;
            cex.beta = _game.to_assignment( beta );
            cex.gammas_tried = total;
            cex.gamma = _game.to_assignment( gamma );
            cex.delta = _game.to_assignment( complete_with_first_action( merge( fixed, culprit->guard ) ) );
            cex.from = _game.state_name( culprit->from );
            cex.to = _game.state_name( culprit->to );
            outcome.counterexample = std::move( cex );
        }
        return false;
    } );

    return outcome;
}

} // namespace cil
