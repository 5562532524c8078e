#include "cil/coalition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <iterator>

namespace cil
{

Coalition::Coalition( std::initializer_list< Agent > members )
        : Coalition( std::vector< Agent >( members ) )
{}

Coalition::Coalition( std::vector< Agent > members ) : _members{ std::move( members ) }
{
    std::sort( _members.begin(), _members.end() );
    _members.erase( std::unique( _members.begin(), _members.end() ), _members.end() );
}

bool Coalition::contains( const Agent& agent ) const
{
    return std::binary_search( _members.begin(), _members.end(), agent );
}

bool Coalition::is_subset_of( const Coalition& other ) const
{
    return std::includes( other._members.begin(), other._members.end(), _members.begin(), _members.end() );
}

bool Coalition::is_disjoint_from( const Coalition& other ) const
{
    return intersected_with( other ).empty();
}

Coalition Coalition::united_with( const Coalition& other ) const
{
    Coalition out;
    std::set_union( _members.begin(), _members.end(), other._members.begin(), other._members.end(),
                    std::back_inserter( out._members ) );
    return out;
}

Coalition Coalition::intersected_with( const Coalition& other ) const
{
    Coalition out;
    std::set_intersection( _members.begin(), _members.end(), other._members.begin(), other._members.end(),
                           std::back_inserter( out._members ) );
    return out;
}

Coalition Coalition::without( const Coalition& other ) const
{
    Coalition out;
    std::set_difference( _members.begin(), _members.end(), other._members.begin(), other._members.end(),
                         std::back_inserter( out._members ) );
    return out;
}

std::string Coalition::to_string() const
{
    std::string out = "{";
    for ( std::size_t i = 0; i < _members.size(); ++i )
    {
        if ( i > 0 )
            out += ",";
        out += _members[ i ];
    }
    return out + "}";
}

std::size_t Coalition::hash() const
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for ( const auto& m : _members )
        h = ( h ^ std::hash< std::string >{}( m ) ) * 0x100000001b3ULL;
    return h;
}

bool is_identifier( const std::string& text )
{
    if ( text.empty() )
        return false;
    auto word = []( char c ) { return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_'; };
    if ( std::isdigit( static_cast< unsigned char >( text.front() ) ) )
        return false;
    return std::all_of( text.begin(), text.end(), word );
}

} // namespace cil
