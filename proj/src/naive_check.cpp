#include "cil/naive_check.hpp"

#include "cil/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cil
{

namespace
{

using StateSet = std::set< StateId >;
using Assignment = std::map< Agent, ActionId >;

class Naive
{
public:
    explicit Naive( const GameModel& model ) : _m{ model }
    {
        _profiles = all_assignments( std::vector< Agent >( _m.agents.begin(), _m.agents.end() ) );
    }

    StateSet truth( const Formula& f ) const
    {
        switch ( f.kind() )
        {
        case FormulaKind::Atom:
        {
            auto it = _m.valuation.find( f.atom_name() );
            if ( it == _m.valuation.end() )
                return {};
            return { it->second.begin(), it->second.end() };
        }
        case FormulaKind::Not:
        {
            auto inner = truth( f.body() );
            StateSet out;
            for ( const auto& w : _m.states )
                if ( !inner.contains( w ) )
                    out.insert( w );
            return out;
        }
        case FormulaKind::Implies:
        {
            auto a = truth( f.lhs() );
            auto b = truth( f.rhs() );
            StateSet out;
            for ( const auto& w : _m.states )
                if ( !a.contains( w ) || b.contains( w ) )
                    out.insert( w );
            return out;
        }
        case FormulaKind::Knows:
        {
            auto inner = truth( f.body() );
            StateSet out;
            for ( const auto& w : _m.states )
            {
                bool all = true;
                for ( const auto& v : _m.states )
                    if ( indist( f.coalition(), w, v ) && !inner.contains( v ) )
                        all = false;
                if ( all )
                    out.insert( w );
            }
            return out;
        }
        case FormulaKind::IntelPower:
        {
            auto inner = truth( f.body() );
            StateSet out;
            for ( const auto& w : _m.states )
                if ( intel_power_at( w, f.actor(), f.intel(), inner ) )
                    out.insert( w );
            return out;
        }
        }
        return {};
    }

private:
    // For any beta over intel there is gamma over actor such that for any
    // complete delta and states v, u: beta =_intel delta, gamma =_actor delta,
    // w ~_actor v and (v, delta, u) in M imply u in `good`.
    bool intel_power_at( const StateId& w, const Coalition& actor, const Coalition& intel, const StateSet& good ) const
    {
        for ( const auto& beta : all_assignments( intel.members() ) )
        {
            bool answered = false;
            for ( const auto& gamma : all_assignments( actor.members() ) )
            {
                bool ok = true;
                for ( const auto& delta : _profiles )
                {
                    if ( !agrees( beta, delta ) || !agrees( gamma, delta ) )
                        continue;
                    for ( const auto& v : _m.states )
                        for ( const auto& u : _m.states )
                            if ( indist( actor, w, v ) && in_mechanism( v, delta, u ) && !good.contains( u ) )
                                ok = false;
                }
                if ( ok )
                {
                    answered = true;
                    break;
                }
            }
            if ( !answered )
                return false;
        }
        return true;
    }

    bool in_mechanism( const StateId& from, const Assignment& delta, const StateId& to ) const
    {
        for ( const auto& rule : _m.rules )
            if ( rule.from == from && rule.to == to && agrees( rule.guard, delta ) )
                return true;
        return false;
    }

    bool indist( const Coalition& coalition, const StateId& w, const StateId& v ) const
    {
        for ( const auto& agent : coalition )
        {
            auto it = _m.indist.find( agent );
            if ( it == _m.indist.end() )
            {
                if ( w != v )
                    return false;
                continue;
            }
            bool together = false;
            for ( const auto& block : it->second )
            {
                bool has_w = std::find( block.begin(), block.end(), w ) != block.end();
                bool has_v = std::find( block.begin(), block.end(), v ) != block.end();
                if ( has_w && has_v )
                    together = true;
            }
            if ( !together )
                return false;
        }
        return true;
    }

    static bool agrees( const Assignment& partial, const Assignment& delta )
    {
        for ( const auto& [ agent, action ] : partial )
            if ( delta.at( agent ) != action )
                return false;
        return true;
    }

    std::vector< Assignment > all_assignments( const std::vector< Agent >& agents ) const
    {
        std::vector< Assignment > out = { {} };
        for ( const auto& agent : agents )
        {
            std::vector< Assignment > next;
            for ( const auto& partial : out )
                for ( const auto& action : _m.actions )
                {
                    auto extended = partial;
                    extended[ agent ] = action;
                    next.push_back( std::move( extended ) );
                }
            out = std::move( next );
        }
        return out;
    }

    const GameModel& _m;
    std::vector< Assignment > _profiles;
};

} // namespace

bool naive_check( const GameModel& model, const StateId& w, const Formula& f, std::size_t bound )
{
    std::size_t profiles = 1;
    for ( std::size_t i = 0; i < model.agents.size(); ++i )
    {
        profiles *= model.actions.size();
        if ( profiles > bound )
            throw BoundExceeded( "naive check needs " + std::to_string( model.actions.size() ) + "^"
                                 + std::to_string( model.agents.size() ) + " complete profiles, bound is "
                                 + std::to_string( bound ) );
    }
    if ( auto diagnostics = validate_model( model ); !diagnostics.empty() )
        throw ModelError( std::move( diagnostics ) );
    if ( std::find( model.states.begin(), model.states.end(), w ) == model.states.end() )
        throw UnknownState( w );
    std::vector< std::string > missing;
    for ( const auto& agent : agents_of( f ) )
        if ( std::find( model.agents.begin(), model.agents.end(), agent ) == model.agents.end() )
            missing.push_back( agent );
    if ( !missing.empty() )
        throw IncompatibleAgents( std::move( missing ) );

    return Naive( model ).truth( f ).contains( w );
}

} // namespace cil
