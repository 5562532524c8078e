#include "cil/proof.hpp"

#include "cil/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace cil
{

namespace
{

// Schemas are stored as patterns over metavariables and matched structurally.

struct CoalitionPattern
{
    enum class Kind
    {
        Var,
        Union,
        Empty
    } kind;
    std::string a, b;
};

CoalitionPattern var( std::string name ) { return { CoalitionPattern::Kind::Var, std::move( name ), {} }; }
CoalitionPattern unite( std::string a, std::string b )
{
    return { CoalitionPattern::Kind::Union, std::move( a ), std::move( b ) };
}
CoalitionPattern none() { return { CoalitionPattern::Kind::Empty, {}, {} }; }

struct Pattern
{
    enum class Kind
    {
        Slot,
        Not,
        Implies,
        Knows,
        Intel
    } kind;
    std::string slot;
    CoalitionPattern first{ CoalitionPattern::Kind::Empty, {}, {} };
    CoalitionPattern second{ CoalitionPattern::Kind::Empty, {}, {} };
    std::vector< Pattern > kids;
};

Pattern slot( std::string name ) { return { Pattern::Kind::Slot, std::move( name ), {}, {}, {} }; }
Pattern neg( Pattern p ) { return { Pattern::Kind::Not, {}, {}, {}, { std::move( p ) } }; }
Pattern imp( Pattern a, Pattern b ) { return { Pattern::Kind::Implies, {}, {}, {}, { std::move( a ), std::move( b ) } }; }
Pattern k( CoalitionPattern c, Pattern p ) { return { Pattern::Kind::Knows, {}, std::move( c ), {}, { std::move( p ) } }; }
Pattern s( CoalitionPattern c, CoalitionPattern b, Pattern p )
{
    return { Pattern::Kind::Intel, {}, std::move( c ), std::move( b ), { std::move( p ) } };
}

Pattern schema_pattern( AxiomSchemaId id )
{
    auto phi = slot( "phi" );
    auto psi = slot( "psi" );
    switch ( id )
    {
    case AxiomSchemaId::Truth:
        return imp( k( var( "C" ), phi ), phi );
    case AxiomSchemaId::Distributivity:
        return imp( k( var( "C" ), imp( phi, psi ) ), imp( k( var( "C" ), phi ), k( var( "C" ), psi ) ) );
    case AxiomSchemaId::NegIntrospection:
        return imp( neg( k( var( "C" ), phi ) ), k( var( "C" ), neg( k( var( "C" ), phi ) ) ) );
    case AxiomSchemaId::EpistemicMono:
        return imp( k( var( "C" ), phi ), k( var( "D" ), phi ) );
    case AxiomSchemaId::StrategicIntrospection:
        return imp( s( var( "C" ), var( "B" ), phi ), k( var( "C" ), s( var( "C" ), var( "B" ), phi ) ) );
    case AxiomSchemaId::EmptyCoalition:
        return imp( k( none(), phi ), s( none(), none(), phi ) );
    case AxiomSchemaId::Cooperation:
        return imp( s( var( "C" ), var( "B" ), imp( phi, psi ) ),
                    imp( s( var( "D" ), unite( "B", "C" ), phi ), s( unite( "C", "D" ), var( "B" ), psi ) ) );
    case AxiomSchemaId::IntelMono:
        return imp( s( var( "C" ), var( "B" ), phi ), s( var( "C" ), var( "B'" ), phi ) );
    case AxiomSchemaId::NoneToAnalyze:
        return imp( s( none(), var( "B" ), phi ), s( none(), none(), phi ) );
    }
    return phi;
}

const Pattern& pattern_for( AxiomSchemaId id )
{
    static const auto table = [] {
        std::vector< Pattern > out;
        for ( auto schema : all_schemas )
            out.push_back( schema_pattern( schema ) );
        return out;
    }();
    return table[ static_cast< std::size_t >( id ) ];
}

// Empty when the side condition holds, otherwise the reason.
std::string side_condition( AxiomSchemaId id, const Substitution& sigma )
{
    const auto& c = sigma.coalitions;
    switch ( id )
    {
    case AxiomSchemaId::EpistemicMono:
        if ( !c.at( "C" ).is_subset_of( c.at( "D" ) ) )
            return "side condition fails: " + c.at( "C" ).to_string() + " is not a subset of " + c.at( "D" ).to_string();
        return {};
    case AxiomSchemaId::Cooperation:
    {
        const auto &b = c.at( "B" ), &cc = c.at( "C" ), &d = c.at( "D" );
        if ( !b.is_disjoint_from( cc ) || !b.is_disjoint_from( d ) || !cc.is_disjoint_from( d ) )
            return "side condition fails: B=" + b.to_string() + ", C=" + cc.to_string() + ", D=" + d.to_string()
                   + " are not pairwise disjoint";
        return {};
    }
    case AxiomSchemaId::IntelMono:
        if ( !c.at( "B" ).is_subset_of( c.at( "B'" ) ) )
            return "side condition fails: " + c.at( "B" ).to_string() + " is not a subset of "
                   + c.at( "B'" ).to_string();
        if ( !c.at( "B'" ).is_disjoint_from( c.at( "C" ) ) )
            return "side condition fails: " + c.at( "B'" ).to_string() + " meets " + c.at( "C" ).to_string();
        return {};
    default:
        return {};
    }
}

std::string_view kind_name( FormulaKind kind )
{
    switch ( kind )
    {
    case FormulaKind::Atom:
        return "an atom";
    case FormulaKind::Not:
        return "a negation";
    case FormulaKind::Implies:
        return "an implication";
    case FormulaKind::Knows:
        return "a knowledge modality";
    case FormulaKind::IntelPower:
        return "a strategic modality";
    }
    return "?";
}

class Matcher
{
public:
    bool match( const Pattern& p, const Formula& f, const std::string& path )
    {
        auto expect = [ & ]( FormulaKind kind ) {
            if ( f.kind() == kind )
                return true;
            _mismatch = path + ": expected " + std::string( kind_name( kind ) ) + ", found "
                        + std::string( kind_name( f.kind() ) ) + " '" + f.to_string() + "'";
            return false;
        };

        switch ( p.kind )
        {
        case Pattern::Kind::Slot:
        {
            auto [ it, fresh ] = _sigma.formulas.try_emplace( p.slot, f );
            if ( !fresh && !( it->second == f ) )
            {
                _mismatch = path + ": " + p.slot + " is '" + it->second.to_string() + "' elsewhere but '"
                            + f.to_string() + "' here";
                return false;
            }
            return true;
        }
        case Pattern::Kind::Not:
            return expect( FormulaKind::Not ) && match( p.kids[ 0 ], f.body(), path + ".body" );
        case Pattern::Kind::Implies:
            return expect( FormulaKind::Implies ) && match( p.kids[ 0 ], f.lhs(), path + ".antecedent" )
                   && match( p.kids[ 1 ], f.rhs(), path + ".consequent" );
        case Pattern::Kind::Knows:
            return expect( FormulaKind::Knows ) && bind( p.first, f.coalition(), path )
                   && match( p.kids[ 0 ], f.body(), path + ".body" );
        case Pattern::Kind::Intel:
            return expect( FormulaKind::IntelPower ) && bind( p.first, f.actor(), path + ".actor" )
                   && bind( p.second, f.intel(), path + ".intel" ) && match( p.kids[ 0 ], f.body(), path + ".body" );
        }
        return false;
    }

    // Unions are checked once every variable has been bound.
    bool resolve_unions()
    {
        for ( const auto& [ p, actual, path ] : _deferred )
        {
            auto expected = eval( p );
            if ( !expected )
            {
                _mismatch = path + ": unbound coalition variable";
                return false;
            }
            if ( !( *expected == actual ) )
            {
                _mismatch = path + ": expected " + p.a + "," + p.b + " = " + expected->to_string() + ", found "
                            + actual.to_string();
                return false;
            }
        }
        return true;
    }

    Substitution& sigma() { return _sigma; }
    const std::string& mismatch() const { return _mismatch; }

private:
    bool bind( const CoalitionPattern& p, const Coalition& actual, const std::string& path )
    {
        switch ( p.kind )
        {
        case CoalitionPattern::Kind::Empty:
            if ( actual.empty() )
                return true;
            _mismatch = path + ": expected the empty coalition, found " + actual.to_string();
            return false;
        case CoalitionPattern::Kind::Var:
        {
            auto [ it, fresh ] = _sigma.coalitions.try_emplace( p.a, actual );
            if ( !fresh && !( it->second == actual ) )
            {
                _mismatch = path + ": " + p.a + " is " + it->second.to_string() + " elsewhere but "
                            + actual.to_string() + " here";
                return false;
            }
            return true;
        }
        case CoalitionPattern::Kind::Union:
            _deferred.push_back( { p, actual, path } );
            return true;
        }
        return false;
    }

    std::optional< Coalition > eval( const CoalitionPattern& p ) const
    {
        auto a = _sigma.coalitions.find( p.a );
        auto b = _sigma.coalitions.find( p.b );
        if ( a == _sigma.coalitions.end() || b == _sigma.coalitions.end() )
            return std::nullopt;
        return a->second.united_with( b->second );
    }

    struct Deferred
    {
        CoalitionPattern p;
        Coalition actual;
        std::string path;
    };

    Substitution _sigma;
    std::vector< Deferred > _deferred;
    std::string _mismatch;
};

Coalition build( const CoalitionPattern& p, const Substitution& sigma )
{
    auto get = [ & ]( const std::string& name ) -> const Coalition& {
        auto it = sigma.coalitions.find( name );
        if ( it == sigma.coalitions.end() )
            throw Error( "substitution lacks coalition slot " + name );
        return it->second;
    };
    switch ( p.kind )
    {
    case CoalitionPattern::Kind::Empty:
        return {};
    case CoalitionPattern::Kind::Var:
        return get( p.a );
    case CoalitionPattern::Kind::Union:
        return get( p.a ).united_with( get( p.b ) );
    }
    return {};
}

Formula build( const Pattern& p, const Substitution& sigma )
{
    switch ( p.kind )
    {
    case Pattern::Kind::Slot:
    {
        auto it = sigma.formulas.find( p.slot );
        if ( it == sigma.formulas.end() )
            throw Error( "substitution lacks formula slot " + p.slot );
        return it->second;
    }
    case Pattern::Kind::Not:
        return negation( build( p.kids[ 0 ], sigma ) );
    case Pattern::Kind::Implies:
        return implies( build( p.kids[ 0 ], sigma ), build( p.kids[ 1 ], sigma ) );
    case Pattern::Kind::Knows:
        return knows( build( p.first, sigma ), build( p.kids[ 0 ], sigma ) );
    case Pattern::Kind::Intel:
        return intel_power( build( p.first, sigma ), build( p.second, sigma ), build( p.kids[ 0 ], sigma ) );
    }
    throw Error( "unreachable" );
}

void collect_slots( const Pattern& p, std::vector< std::string >& formulas, std::vector< std::string >& coalitions )
{
    auto add = []( std::vector< std::string >& out, const std::string& name ) {
        if ( !name.empty() && std::find( out.begin(), out.end(), name ) == out.end() )
            out.push_back( name );
    };
    auto add_coalition = [ & ]( const CoalitionPattern& c ) {
        if ( c.kind == CoalitionPattern::Kind::Empty )
            return;
        add( coalitions, c.a );
        add( coalitions, c.b );
    };
    if ( p.kind == Pattern::Kind::Slot )
        add( formulas, p.slot );
    if ( p.kind == Pattern::Kind::Knows || p.kind == Pattern::Kind::Intel )
        add_coalition( p.first );
    if ( p.kind == Pattern::Kind::Intel )
        add_coalition( p.second );
    for ( const auto& kid : p.kids )
        collect_slots( kid, formulas, coalitions );
}

// Propositional skeleton: indices into a flat node array.
struct Skeleton
{
    struct Node
    {
        FormulaKind kind;  // Atom stands for any opaque atom
        int atom = -1;
        int lhs = -1;
        int rhs = -1;
    };
    std::vector< Node > nodes;
    std::size_t atoms = 0;

    bool eval( int i, std::uint32_t assignment ) const
    {
        const auto& n = nodes[ static_cast< std::size_t >( i ) ];
        switch ( n.kind )
        {
        case FormulaKind::Not:
            return !eval( n.lhs, assignment );
        case FormulaKind::Implies:
            return !eval( n.lhs, assignment ) || eval( n.rhs, assignment );
        default:
            return ( assignment >> n.atom ) & 1U;
        }
    }
};

int skeleton_of( const Formula& f, Skeleton& sk, std::unordered_map< Formula, int, FormulaHash >& atoms )
{
    Skeleton::Node node{ f.kind() };
    switch ( f.kind() )
    {
    case FormulaKind::Not:
        node.lhs = skeleton_of( f.body(), sk, atoms );
        break;
    case FormulaKind::Implies:
        node.lhs = skeleton_of( f.lhs(), sk, atoms );
        node.rhs = skeleton_of( f.rhs(), sk, atoms );
        break;
    default:
    {
        node.kind = FormulaKind::Atom;
        auto [ it, fresh ] = atoms.try_emplace( f, static_cast< int >( atoms.size() ) );
        if ( fresh && atoms.size() > tautology_atom_budget )
            throw AtomBudgetExceeded( "tautology check limited to " + std::to_string( tautology_atom_budget )
                                      + " atoms" );
        node.atom = it->second;
    }
    }
    sk.nodes.push_back( node );
    return static_cast< int >( sk.nodes.size() - 1 );
}

} // namespace

std::string_view schema_name( AxiomSchemaId id )
{
    switch ( id )
    {
    case AxiomSchemaId::Truth:
        return "Truth";
    case AxiomSchemaId::Distributivity:
        return "Distributivity";
    case AxiomSchemaId::NegIntrospection:
        return "NegIntrospection";
    case AxiomSchemaId::EpistemicMono:
        return "EpistemicMono";
    case AxiomSchemaId::StrategicIntrospection:
        return "StrategicIntrospection";
    case AxiomSchemaId::EmptyCoalition:
        return "EmptyCoalition";
    case AxiomSchemaId::Cooperation:
        return "Cooperation";
    case AxiomSchemaId::IntelMono:
        return "IntelMono";
    case AxiomSchemaId::NoneToAnalyze:
        return "NoneToAnalyze";
    }
    return "?";
}

std::optional< AxiomSchemaId > schema_from_name( std::string_view name )
{
    for ( auto id : all_schemas )
        if ( schema_name( id ) == name )
            return id;
    return std::nullopt;
}

std::vector< std::string > formula_slots( AxiomSchemaId id )
{
    std::vector< std::string > formulas, coalitions;
    collect_slots( pattern_for( id ), formulas, coalitions );
    return formulas;
}

std::vector< std::string > coalition_slots( AxiomSchemaId id )
{
    std::vector< std::string > formulas, coalitions;
    collect_slots( pattern_for( id ), formulas, coalitions );
    return coalitions;
}

MatchResult match_axiom( AxiomSchemaId id, const Formula& f )
{
    Matcher m;
    if ( !m.match( pattern_for( id ), f, "formula" ) || !m.resolve_unions() )
        return { std::nullopt, m.mismatch() };
    if ( auto reason = side_condition( id, m.sigma() ); !reason.empty() )
        return { std::nullopt, reason };
    return { std::move( m.sigma() ), {} };
}

Formula instantiate_schema( AxiomSchemaId id, const Substitution& sigma )
{
    for ( const auto& name : coalition_slots( id ) )
        if ( !sigma.coalitions.contains( name ) )
            throw Error( "substitution lacks coalition slot " + name );
    if ( auto reason = side_condition( id, sigma ); !reason.empty() )
        throw Error( std::string( schema_name( id ) ) + ": " + reason );
    return build( pattern_for( id ), sigma );
}

bool is_tautology( const Formula& f )
{
    Skeleton sk;
    std::unordered_map< Formula, int, FormulaHash > atoms;
    int root = skeleton_of( f, sk, atoms );
    const std::uint32_t rows = 1U << atoms.size();
    for ( std::uint32_t assignment = 0; assignment < rows; ++assignment )
        if ( !sk.eval( root, assignment ) )
            return false;
    return true;
}

std::string to_string( const Justification& j )
{
    struct Printer
    {
        std::string operator()( const ByAxiom& a ) const { return "ax:" + std::string( schema_name( a.schema ) ); }
        std::string operator()( const ByTautology& ) const { return "taut"; }
        std::string operator()( const ByModusPonens& m ) const
        {
            return "mp " + std::to_string( m.premise ) + " " + std::to_string( m.implication );
        }
        std::string operator()( const ByEpistemicNecessitation& n ) const
        {
            return "necK " + std::to_string( n.premise ) + " " + n.coalition.to_string();
        }
        std::string operator()( const ByStrategicNecessitation& n ) const
        {
            return "necS " + std::to_string( n.premise ) + " " + n.actor.to_string() + n.intel.to_string();
        }
    };
    return std::visit( Printer{}, j );
}

const LineVerdict* Verdict::first_error() const
{
    for ( const auto& line : lines )
        if ( !line.ok )
            return &line;
    return nullptr;
}

Verdict check_proof( const ProofScript& script )
{
    Verdict verdict;
    const auto& lines = script.lines;
    std::vector< bool > accepted;

    for ( std::size_t pos = 0; pos < lines.size(); ++pos )
    {
        const auto& line = lines[ pos ];
        const std::size_t number = pos + 1;
        std::string error;

        // Resolves a citation, recording the first problem in `error`.
        auto cite = [ & ]( std::size_t ref ) -> const Formula* {
            if ( ref < 1 || ref >= number )
            {
                error = "cites line " + std::to_string( ref ) + ", which is not an earlier line";
                return nullptr;
            }
            if ( !accepted[ ref - 1 ] )
            {
                error = "cites rejected line " + std::to_string( ref );
                return nullptr;
            }
            return &*lines[ ref - 1 ].formula;
        };

        if ( line.index != number )
            error = "numbered " + std::to_string( line.index ) + ", expected " + std::to_string( number );
        else if ( line.malformed )
            error = *line.malformed;
        else
        {
            const Formula& f = *line.formula;
            if ( const auto* ax = std::get_if< ByAxiom >( &line.justification ) )
            {
                auto match = match_axiom( ax->schema, f );
                if ( !match )
                    error = "not an instance of " + std::string( schema_name( ax->schema ) ) + ": " + match.mismatch;
                else if ( ax->witness )
                {
                    for ( const auto& [ name, value ] : ax->witness->formulas )
                    {
                        auto it = match.substitution->formulas.find( name );
                        if ( it == match.substitution->formulas.end() || !( it->second == value ) )
                        {
                            error = "substitution witness disagrees on " + name;
                            break;
                        }
                    }
                    for ( const auto& [ name, value ] : ax->witness->coalitions )
                    {
                        auto it = match.substitution->coalitions.find( name );
                        if ( it == match.substitution->coalitions.end() || !( it->second == value ) )
                        {
                            error = "substitution witness disagrees on " + name;
                            break;
                        }
                    }
                }
            }
            else if ( std::holds_alternative< ByTautology >( line.justification ) )
            {
                try
                {
                    if ( !is_tautology( f ) )
                        error = "not a propositional tautology";
                }
                catch ( const AtomBudgetExceeded& e )
                {
                    error = e.what();
                }
            }
            else if ( const auto* mp = std::get_if< ByModusPonens >( &line.justification ) )
            {
                const auto* premise = cite( mp->premise );
                const auto* implication = premise ? cite( mp->implication ) : nullptr;
                if ( premise && implication && !( *implication == implies( *premise, f ) ) )
                    error = "line " + std::to_string( mp->implication ) + " is not line "
                            + std::to_string( mp->premise ) + " -> this line";
            }
            else if ( const auto* nk = std::get_if< ByEpistemicNecessitation >( &line.justification ) )
            {
                const auto* premise = cite( nk->premise );
                if ( premise && !( f == knows( nk->coalition, *premise ) ) )
                    error = "expected K" + nk->coalition.to_string() + " applied to line "
                            + std::to_string( nk->premise );
            }
            else if ( const auto* ns = std::get_if< ByStrategicNecessitation >( &line.justification ) )
            {
                if ( !ns->actor.is_disjoint_from( ns->intel ) )
                    error = "necessitation coalitions " + ns->actor.to_string() + " and " + ns->intel.to_string()
                            + " overlap";
                else if ( const auto* premise = cite( ns->premise );
                          premise && !( f == intel_power( ns->actor, ns->intel, *premise ) ) )
                    error = "expected [" + ns->actor.to_string() + "]" + ns->intel.to_string()
                            + " applied to line " + std::to_string( ns->premise );
            }
        }

        accepted.push_back( error.empty() );
        verdict.lines.push_back( { number, error.empty(), error } );
    }

    verdict.goal_reached = !lines.empty() && accepted.back() && lines.back().formula
                           && *lines.back().formula == script.goal;
    verdict.ok = verdict.goal_reached
                 && std::all_of( accepted.begin(), accepted.end(), []( bool b ) { return b; } );
    return verdict;
}

} // namespace cil
