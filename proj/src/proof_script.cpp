#include "cil/proof_script.hpp"

#include "cil/errors.hpp"
#include "cil/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cil
{

namespace
{

std::string trim( std::string_view text )
{
    std::size_t b = 0, e = text.size();
    while ( b < e && std::isspace( static_cast< unsigned char >( text[ b ] ) ) )
        ++b;
    while ( e > b && std::isspace( static_cast< unsigned char >( text[ e - 1 ] ) ) )
        --e;
    return std::string( text.substr( b, e - b ) );
}

std::size_t to_line_number( const std::string& token )
{
    if ( token.empty() || !std::all_of( token.begin(), token.end(), []( char c ) { return std::isdigit( c ); } ) )
        throw Error( "expected a line number, found '" + token + "'" );
    return std::stoul( token );
}

Substitution parse_witness( const std::string& text, SourcePos origin )
{
    Substitution sigma;
    std::stringstream parts( text );
    std::string part;
    while ( std::getline( parts, part, ';' ) )
    {
        auto eq = part.find( '=' );
        if ( eq == std::string::npos )
            throw Error( "witness entries look like slot=value" );
        auto name = trim( part.substr( 0, eq ) );
        auto value = part.substr( eq + 1 );
        if ( name == "phi" || name == "psi" )
            sigma.formulas.emplace( name, parse_formula( value, origin ) );
        else if ( name == "C" || name == "D" || name == "B" || name == "B'" )
            sigma.coalitions.emplace( name, parse_coalition( trim( value ), origin ) );
        else
            throw Error( "unknown witness slot '" + name + "'" );
    }
    return sigma;
}

Justification parse_justification( const std::string& text, SourcePos origin )
{
    std::istringstream in( text );
    std::string head;
    in >> head;

    if ( head == "taut" )
    {
        std::string rest;
        if ( in >> rest )
            throw Error( "unexpected '" + rest + "' after taut" );
        return ByTautology{};
    }
    if ( head.rfind( "ax:", 0 ) == 0 )
    {
        auto schema = schema_from_name( head.substr( 3 ) );
        if ( !schema )
            throw Error( "unknown axiom schema '" + head.substr( 3 ) + "'" );
        ByAxiom ax{ *schema, std::nullopt };
        std::string keyword;
        if ( in >> keyword )
        {
            if ( keyword != "where" )
                throw Error( "expected 'where' after the schema name" );
            std::string rest;
            std::getline( in, rest );
            ax.witness = parse_witness( rest, origin );
        }
        return ax;
    }
    if ( head == "mp" )
    {
        std::string a, b, extra;
        in >> a >> b;
        if ( in >> extra )
            throw Error( "mp takes two line numbers" );
        return ByModusPonens{ to_line_number( a ), to_line_number( b ) };
    }
    if ( head == "necK" || head == "necS" )
    {
        std::string n;
        in >> n;
        std::string rest;
        std::getline( in, rest );
        rest = trim( rest );
        if ( head == "necK" )
            return ByEpistemicNecessitation{ to_line_number( n ), parse_coalition( rest, origin ) };
        auto split = rest.find( '}' );
        if ( split == std::string::npos )
            throw Error( "necS takes two coalitions" );
        return ByStrategicNecessitation{ to_line_number( n ), parse_coalition( rest.substr( 0, split + 1 ), origin ),
                                         parse_coalition( rest.substr( split + 1 ), origin ) };
    }
    throw Error( "unknown justification '" + head + "'" );
}

ProofLine parse_line( const std::string& text, std::size_t line_no )
{
    ProofLine line;
    auto dot = text.find( '.' );
    try
    {
        if ( dot == std::string::npos )
            throw Error( "expected '<n>. <formula> ; <justification>'" );
        line.index = to_line_number( trim( text.substr( 0, dot ) ) );
        auto semi = text.find( ';', dot );
        if ( semi == std::string::npos )
            throw Error( "missing ';' before the justification" );
        line.formula = parse_formula( std::string_view( text ).substr( dot + 1, semi - dot - 1 ), { line_no, dot + 2 } );
        line.justification = parse_justification( text.substr( semi + 1 ), { line_no, semi + 2 } );
    }
    catch ( const ParseError& e )
    {
        line.malformed = e.what();
    }
    catch ( const Error& e )
    {
        line.malformed = "line " + std::to_string( line_no ) + ": " + e.what();
    }
    return line;
}

} // namespace

ProofScript parse_proof_script( const std::string& text )
{
    std::optional< Formula > goal;
    std::vector< ProofLine > lines;
    std::istringstream in( text );
    std::string raw;
    std::size_t line_no = 0;
    while ( std::getline( in, raw ) )
    {
        ++line_no;
        auto content = trim( raw );
        if ( content.empty() || content.front() == '#' )
            continue;
        if ( content.rfind( "goal:", 0 ) == 0 )
        {
            if ( goal )
                throw ParseError( "duplicate goal", line_no, 1 );
            auto offset = raw.find( "goal:" ) + 5;
            goal = parse_formula( std::string_view( raw ).substr( offset ), { line_no, offset + 1 } );
            continue;
        }
        lines.push_back( parse_line( raw, line_no ) );
    }
    if ( !goal )
        throw ParseError( "proof script has no 'goal:' line", line_no + 1, 1 );
    return { *goal, std::move( lines ) };
}

ProofScript load_proof_script( const std::filesystem::path& path ) { return parse_proof_script( read_text_file( path ) ); }

Json verdict_to_json( const ProofScript& script, const Verdict& verdict )
{
    Json out;
    out[ "verdict" ] = verdict.ok ? "ok" : "rejected";
    out[ "goal" ] = script.goal.to_string();
    out[ "goal_reached" ] = verdict.goal_reached;
    out[ "lines" ] = Json::array();
    for ( std::size_t i = 0; i < verdict.lines.size(); ++i )
    {
        const auto& lv = verdict.lines[ i ];
        const auto& line = script.lines[ i ];
        Json entry;
        entry[ "line" ] = lv.index;
        if ( !line.malformed )
        {
            entry[ "formula" ] = line.formula->to_string();
            entry[ "justification" ] = to_string( line.justification );
        }
        entry[ "status" ] = lv.ok ? "ok" : "error";
        if ( !lv.ok )
            entry[ "error" ] = lv.error;
        out[ "lines" ].push_back( std::move( entry ) );
    }
    return out;
}

} // namespace cil
