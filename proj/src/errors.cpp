#include "cil/errors.hpp"

namespace cil
{

namespace
{

std::string join( const std::vector< std::string >& items )
{
    std::string out;
    for ( const auto& item : items )
    {
        if ( !out.empty() )
            out += ", ";
        out += item;
    }
    return out;
}

} // namespace

DisjointnessViolation::DisjointnessViolation( std::vector< std::string > shared )
        : Error( "actor and intelligence coalitions share agents: " + join( shared ) ),
          _shared{ std::move( shared ) }
{}

ParseError::ParseError( const std::string& message, std::size_t line, std::size_t column )
        : Error( std::to_string( line ) + ":" + std::to_string( column ) + ": " + message ),
          _message{ message }, _line{ line }, _column{ column }
{}

IncompatibleAgents::IncompatibleAgents( std::vector< std::string > missing )
        : Error( "formula mentions agents the game does not declare: " + join( missing ) ),
          _missing{ std::move( missing ) }
{}

} // namespace cil
