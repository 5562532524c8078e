#include "cil/formula.hpp"

#include "cil/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <unordered_set>

namespace cil
{

struct Formula::Node
{
    FormulaKind kind;
    std::string name;
    Coalition first;   // Knows: coalition; IntelPower: actor
    Coalition second;  // IntelPower: intel
    std::vector< Formula > children;
    std::size_t hash = 0;
    std::size_t count = 1;
    std::size_t depth = 0;
};

namespace
{

std::size_t mix( std::size_t h, std::size_t v )
{
    return h ^ ( v + 0x9e3779b97f4a7c15ULL + ( h << 6 ) + ( h >> 2 ) );
}

std::shared_ptr< Formula::Node > make_node( FormulaKind kind )
{
    auto node = std::make_shared< Formula::Node >();
    node->kind = kind;
    return node;
}

void finish( Formula::Node& node )
{
    std::size_t h = static_cast< std::size_t >( node.kind ) + 1;
    h = mix( h, std::hash< std::string >{}( node.name ) );
    h = mix( h, node.first.hash() );
    h = mix( h, node.second.hash() );
    for ( const auto& child : node.children )
    {
        h = mix( h, child.hash() );
        node.count += child.node_count();
        node.depth = std::max( node.depth, child.depth() + 1 );
    }
    node.hash = h;
}

std::string operand( const Formula& f )
{
    if ( f.is( FormulaKind::Implies ) )
        return "(" + f.to_string() + ")";
    return f.to_string();
}

} // namespace

FormulaKind Formula::kind() const { return _node->kind; }

const std::string& Formula::atom_name() const
{
    assert( is( FormulaKind::Atom ) );
    return _node->name;
}

const Formula& Formula::body() const
{
    assert( _node->children.size() == 1 );
    return _node->children[ 0 ];
}

const Formula& Formula::lhs() const
{
    assert( is( FormulaKind::Implies ) );
    return _node->children[ 0 ];
}

const Formula& Formula::rhs() const
{
    assert( is( FormulaKind::Implies ) );
    return _node->children[ 1 ];
}

const Coalition& Formula::coalition() const
{
    assert( is( FormulaKind::Knows ) );
    return _node->first;
}

const Coalition& Formula::actor() const
{
    assert( is( FormulaKind::IntelPower ) );
    return _node->first;
}

const Coalition& Formula::intel() const
{
    assert( is( FormulaKind::IntelPower ) );
    return _node->second;
}

std::size_t Formula::hash() const { return _node->hash; }
std::size_t Formula::node_count() const { return _node->count; }
std::size_t Formula::depth() const { return _node->depth; }

std::string Formula::to_string() const
{
    switch ( kind() )
    {
    case FormulaKind::Atom:
        return _node->name;
    case FormulaKind::Not:
        return "!" + operand( body() );
    case FormulaKind::Implies:
        return operand( lhs() ) + " -> " + rhs().to_string();
    case FormulaKind::Knows:
        return "K" + coalition().to_string() + " " + operand( body() );
    case FormulaKind::IntelPower:
    {
        auto actors = actor().to_string();
        return "[" + actors.substr( 1, actors.size() - 2 ) + "]" + intel().to_string() + " " + operand( body() );
    }
    }
    return {};
}

bool operator==( const Formula& a, const Formula& b )
{
    if ( a._node == b._node )
        return true;
    const auto& x = *a._node;
    const auto& y = *b._node;
    if ( x.hash != y.hash || x.kind != y.kind || x.count != y.count )
        return false;
    return x.name == y.name && x.first == y.first && x.second == y.second && x.children == y.children;
}

Formula atom( const std::string& name )
{
    if ( !is_identifier( name ) || name == "true" || name == "false" )
        throw Error( "invalid atom name '" + name + "'" );
    auto node = make_node( FormulaKind::Atom );
    node->name = name;
    finish( *node );
    return Formula( std::move( node ) );
}

Formula negation( const Formula& body )
{
    auto node = make_node( FormulaKind::Not );
    node->children = { body };
    finish( *node );
    return Formula( std::move( node ) );
}

Formula implies( const Formula& lhs, const Formula& rhs )
{
    auto node = make_node( FormulaKind::Implies );
    node->children = { lhs, rhs };
    finish( *node );
    return Formula( std::move( node ) );
}

Formula knows( const Coalition& coalition, const Formula& body )
{
    auto node = make_node( FormulaKind::Knows );
    node->first = coalition;
    node->children = { body };
    finish( *node );
    return Formula( std::move( node ) );
}

Formula intel_power( const Coalition& actor, const Coalition& intel, const Formula& body )
{
    auto shared = actor.intersected_with( intel );
    if ( !shared.empty() )
        throw DisjointnessViolation( shared.members() );
    auto node = make_node( FormulaKind::IntelPower );
    node->first = actor;
    node->second = intel;
    node->children = { body };
    finish( *node );
    return Formula( std::move( node ) );
}

Formula top()
{
    auto p = atom( reserved_atom );
    return implies( p, p );
}

Formula bottom() { return negation( top() ); }

Formula conjunction( const Formula& a, const Formula& b ) { return negation( implies( a, negation( b ) ) ); }

Formula disjunction( const Formula& a, const Formula& b ) { return implies( negation( a ), b ); }

std::vector< Formula > subformulas( const Formula& f )
{
    std::vector< Formula > out;
    std::unordered_set< Formula, FormulaHash > seen;
    std::function< void( const Formula& ) > visit = [ & ]( const Formula& g ) {
        if ( seen.contains( g ) )
            return;
        switch ( g.kind() )
        {
        case FormulaKind::Atom:
            break;
        case FormulaKind::Implies:
            visit( g.lhs() );
            visit( g.rhs() );
            break;
        default:
            visit( g.body() );
        }
        seen.insert( g );
        out.push_back( g );
    };
    visit( f );
    return out;
}

std::set< Agent > agents_of( const Formula& f )
{
    std::set< Agent > out;
    for ( const auto& g : subformulas( f ) )
    {
        if ( g.is( FormulaKind::Knows ) )
            out.insert( g.coalition().begin(), g.coalition().end() );
        else if ( g.is( FormulaKind::IntelPower ) )
        {
            out.insert( g.actor().begin(), g.actor().end() );
            out.insert( g.intel().begin(), g.intel().end() );
        }
    }
    return out;
}

std::set< std::string > atoms_of( const Formula& f )
{
    std::set< std::string > out;
    for ( const auto& g : subformulas( f ) )
        if ( g.is( FormulaKind::Atom ) )
            out.insert( g.atom_name() );
    return out;
}

} // namespace cil
