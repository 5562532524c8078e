#pragma once

// Helpers and independent oracles shared by the test binaries. Nothing here
// calls into the checker or the successor expansion it tests.

#include "cil/formula.hpp"
#include "cil/fuzz.hpp"
#include "cil/game_model.hpp"
#include "cil/model_io.hpp"
#include "cil/proof.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cil::test
{

inline std::string fixture( const std::string& name ) { return std::string( CIL_FIXTURE_DIR ) + "/" + name; }

inline GameModel atlantic_model() { return load_model( fixture( "atlantic.model" ) ); }

// Formulas checked exhaustively against the reference evaluator on the
// Atlantic fixture.
inline const std::vector< std::string >& atlantic_suite()
{
    static const std::vector< std::string > suite = {
            "saved",
            "!saved",
            "[British,Russians]{Germans} saved",
            "[British]{Germans} saved",
            "K{British} !saved",
            "K{} saved",
            "K{Russians} saved",
            "[British,Germans,Russians]{} saved",
            "[Germans]{British} !saved",
            "[]{} saved",
            "[British]{Germans,Russians} saved",
            "[Russians]{} saved",
            "K{British} [British,Russians]{Germans} saved",
            "[British]{} K{Germans} saved",
            "[British,Russians]{Germans} (saved -> K{British} saved)",
            "!K{Germans} [British]{Germans} saved",
            "[British,Russians]{} saved",
            "K{British,Germans} ([British,Russians]{Germans} saved -> [British]{Germans} saved)",
            "[Germans]{} !saved",
            "[British,Russians]{Germans} [British]{} saved",
    };
    return suite;
}

// Every total profile over model.agents, built directly from the declaration.
inline std::vector< ActionAssignment > all_profiles( const GameModel& model )
{
    std::vector< ActionAssignment > out{ ActionAssignment{} };
    for ( const auto& agent : model.agents )
    {
        std::vector< ActionAssignment > next;
        for ( const auto& partial : out )
            for ( const auto& action : model.actions )
            {
                auto p = partial;
                p[ agent ] = action;
                next.push_back( std::move( p ) );
            }
        out = std::move( next );
    }
    return out;
}

inline bool agrees( const ActionAssignment& part, const ActionAssignment& whole )
{
    for ( const auto& [ agent, action ] : part )
    {
        auto it = whole.find( agent );
        if ( it == whole.end() || it->second != action )
            return false;
    }
    return true;
}

// Brute-force triple scan: every total profile, every rule.
inline std::set< std::pair< ActionAssignment, StateId > > brute_successors( const GameModel& model, const StateId& from,
                                                                            const ActionAssignment& fixed )
{
    std::set< std::pair< ActionAssignment, StateId > > out;
    for ( const auto& delta : all_profiles( model ) )
    {
        if ( !agrees( fixed, delta ) )
            continue;
        for ( const auto& rule : model.rules )
            if ( rule.from == from && agrees( rule.guard, delta ) )
                out.emplace( delta, rule.to );
    }
    return out;
}

// Maximal propositional atoms of f: variables and outermost modal nodes.
inline void boolean_atoms( const Formula& f, std::vector< Formula >& out )
{
    if ( f.is( FormulaKind::Atom ) || f.is_modal() )
    {
        if ( std::find( out.begin(), out.end(), f ) == out.end() )
            out.push_back( f );
        return;
    }
    if ( f.is( FormulaKind::Not ) )
        return boolean_atoms( f.body(), out );
    boolean_atoms( f.lhs(), out );
    boolean_atoms( f.rhs(), out );
}

// Shannon expansion: substitute constants for one atom at a time and simplify.
// A three-valued partial evaluator: 1 true, 0 false, -1 undetermined.
inline int partial_value( const Formula& f, const std::vector< std::pair< Formula, bool > >& fixed )
{
    if ( f.is( FormulaKind::Atom ) || f.is_modal() )
    {
        for ( const auto& [ atom, value ] : fixed )
            if ( atom == f )
                return value ? 1 : 0;
        return -1;
    }
    if ( f.is( FormulaKind::Not ) )
    {
        int v = partial_value( f.body(), fixed );
        return v < 0 ? -1 : 1 - v;
    }
    int a = partial_value( f.lhs(), fixed );
    if ( a == 0 )
        return 1;
    int b = partial_value( f.rhs(), fixed );
    if ( b == 1 )
        return 1;
    if ( a == 1 && b == 0 )
        return 0;
    return -1;
}

inline bool shannon_valid( const Formula& f, const std::vector< Formula >& atoms,
                           std::vector< std::pair< Formula, bool > >& fixed )
{
    int v = partial_value( f, fixed );
    if ( v >= 0 )
        return v == 1;
    for ( const auto& atom : atoms )
    {
        bool bound = std::any_of( fixed.begin(), fixed.end(), [ & ]( const auto& e ) { return e.first == atom; } );
        if ( bound )
            continue;
        for ( bool value : { false, true } )
        {
            fixed.emplace_back( atom, value );
            bool ok = shannon_valid( f, atoms, fixed );
            fixed.pop_back();
            if ( !ok )
                return false;
        }
        return true;
    }
    return false;
}

inline bool shannon_tautology( const Formula& f )
{
    std::vector< Formula > atoms;
    boolean_atoms( f, atoms );
    std::vector< std::pair< Formula, bool > > fixed;
    return shannon_valid( f, atoms, fixed );
}

// References a justification makes to earlier lines.
inline std::vector< std::size_t* > references( Justification& j )
{
    if ( auto* mp = std::get_if< ByModusPonens >( &j ) )
        return { &mp->premise, &mp->implication };
    if ( auto* k = std::get_if< ByEpistemicNecessitation >( &j ) )
        return { &k->premise };
    if ( auto* s = std::get_if< ByStrategicNecessitation >( &j ) )
        return { &s->premise };
    return {};
}

inline void renumber( ProofScript& script )
{
    for ( std::size_t i = 0; i < script.lines.size(); ++i )
        script.lines[ i ].index = i + 1;
}

inline ProofScript delete_line( ProofScript script, std::size_t position )
{
    script.lines.erase( script.lines.begin() + static_cast< std::ptrdiff_t >( position ) );
    for ( auto& line : script.lines )
        for ( auto* ref : references( line.justification ) )
            if ( *ref > position + 1 )
                --*ref;
    renumber( script );
    return script;
}

// Exchanges the lines at two positions, keeping every citation attached to
// the line it cited.
inline ProofScript swap_lines( ProofScript script, std::size_t i, std::size_t j )
{
    std::swap( script.lines[ i ], script.lines[ j ] );
    for ( auto& line : script.lines )
        for ( auto* ref : references( line.justification ) )
        {
            if ( *ref == i + 1 )
                *ref = j + 1;
            else if ( *ref == j + 1 )
                *ref = i + 1;
        }
    renumber( script );
    return script;
}

inline bool cites_backward( ProofScript script )
{
    for ( auto& line : script.lines )
        for ( auto* ref : references( line.justification ) )
            if ( *ref >= line.index )
                return false;
    return true;
}

inline Justification mutate_justification( const Justification& j )
{
    if ( auto* ax = std::get_if< ByAxiom >( &j ) )
    {
        auto next = static_cast< std::size_t >( ax->schema ) + 1;
        return ByAxiom{ all_schemas[ next % all_schemas.size() ], std::nullopt };
    }
    if ( std::holds_alternative< ByTautology >( j ) )
        return ByAxiom{ AxiomSchemaId::Truth, std::nullopt };
    if ( auto* mp = std::get_if< ByModusPonens >( &j ) )
        return ByModusPonens{ mp->implication, mp->premise };
    if ( auto* k = std::get_if< ByEpistemicNecessitation >( &j ) )
        return ByEpistemicNecessitation{ k->premise, k->coalition.united_with( Coalition{ "z" } ) };
    const auto& s = std::get< ByStrategicNecessitation >( j );
    return ByStrategicNecessitation{ s.premise, s.actor.united_with( Coalition{ "z" } ), s.intel };
}

struct Mutant
{
    std::string description;
    ProofScript script;
};

// Single-line mutations: each line deleted, its formula negated, and its
// justification altered.
inline std::vector< Mutant > single_line_mutants( const ProofScript& script )
{
    std::vector< Mutant > out;
    for ( std::size_t i = 0; i < script.lines.size(); ++i )
    {
        auto n = std::to_string( i + 1 );
        out.push_back( { "delete line " + n, delete_line( script, i ) } );

        auto negated = script;
        negated.lines[ i ].formula = negation( *negated.lines[ i ].formula );
        out.push_back( { "negate line " + n, std::move( negated ) } );

        auto rejustified = script;
        rejustified.lines[ i ].justification = mutate_justification( script.lines[ i ].justification );
        out.push_back( { "rejustify line " + n, std::move( rejustified ) } );
    }
    return out;
}

} // namespace cil::test
