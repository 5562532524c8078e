#include "cil/model_io.hpp"

#include "cil/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cil
{

namespace
{

std::string scalar( const Json& value, const std::string& where )
{
    if ( value.is_string() )
        return value.get< std::string >();
    if ( value.is_number_integer() )
        return std::to_string( value.get< long long >() );
    throw LoadError( where + ": expected a string or integer" );
}

std::vector< std::string > scalar_list( const Json& value, const std::string& where )
{
    if ( !value.is_array() )
        throw LoadError( where + ": expected a list" );
    std::vector< std::string > out;
    for ( std::size_t i = 0; i < value.size(); ++i )
        out.push_back( scalar( value[ i ], where + "[" + std::to_string( i ) + "]" ) );
    return out;
}

const Json& required( const Json& object, const char* key )
{
    auto it = object.find( key );
    if ( it == object.end() )
        throw LoadError( std::string( "missing key '" ) + key + "'" );
    return *it;
}

ActionAssignment assignment( const Json& value, const std::string& where )
{
    if ( !value.is_object() )
        throw LoadError( where + ": expected a map from agents to actions" );
    ActionAssignment out;
    for ( const auto& [ agent, action ] : value.items() )
        out[ agent ] = scalar( action, where + "." + agent );
    return out;
}

} // namespace

GameModel model_from_json( const Json& document )
{
    if ( !document.is_object() )
        throw LoadError( "model: expected an object" );

    static const std::vector< std::string > known = { "states", "agents", "actions", "indist", "rules", "valuation" };
    for ( const auto& [ key, value ] : document.items() )
        if ( std::find( known.begin(), known.end(), key ) == known.end() )
            throw LoadError( "unknown key '" + key + "'" );

    GameModel model;
    model.states = scalar_list( required( document, "states" ), "states" );
    model.agents = scalar_list( required( document, "agents" ), "agents" );
    model.actions = scalar_list( required( document, "actions" ), "actions" );

    if ( auto it = document.find( "indist" ); it != document.end() )
    {
        if ( !it->is_object() )
            throw LoadError( "indist: expected a map from agents to blocks" );
        for ( const auto& [ agent, blocks ] : it->items() )
        {
            auto where = "indist." + agent;
            if ( !blocks.is_array() )
                throw LoadError( where + ": expected a list of blocks" );
            auto& partition = model.indist[ agent ];
            for ( std::size_t b = 0; b < blocks.size(); ++b )
                partition.push_back( scalar_list( blocks[ b ], where + "[" + std::to_string( b ) + "]" ) );
        }
    }

    if ( auto it = document.find( "rules" ); it != document.end() )
    {
        if ( !it->is_array() )
            throw LoadError( "rules: expected a list" );
        for ( std::size_t i = 0; i < it->size(); ++i )
        {
            const auto& rule = ( *it )[ i ];
            auto where = "rules[" + std::to_string( i ) + "]";
            if ( !rule.is_object() )
                throw LoadError( where + ": expected an object" );
            TransitionRule r;
            r.from = scalar( required( rule, "from" ), where + ".from" );
            r.to = scalar( required( rule, "to" ), where + ".to" );
            if ( auto g = rule.find( "guard" ); g != rule.end() )
                r.guard = assignment( *g, where + ".guard" );
            model.rules.push_back( std::move( r ) );
        }
    }

    if ( auto it = document.find( "valuation" ); it != document.end() )
    {
        if ( !it->is_object() )
            throw LoadError( "valuation: expected a map from atoms to states" );
        for ( const auto& [ atom, states ] : it->items() )
            model.valuation[ atom ] = scalar_list( states, "valuation." + atom );
    }

    return model;
}

GameModel parse_model( const std::string& text )
{
    Json document;
    try
    {
        document = Json::parse( text );
    }
    catch ( const Json::parse_error& e )
    {
        throw LoadError( std::string( "malformed model document: " ) + e.what() );
    }
    return model_from_json( document );
}

GameModel load_model( const std::filesystem::path& path ) { return parse_model( read_text_file( path ) ); }

Json model_to_json( const GameModel& model )
{
    Json out;
    out[ "states" ] = model.states;
    out[ "agents" ] = model.agents;
    out[ "actions" ] = model.actions;
    out[ "indist" ] = Json::object();
    for ( const auto& [ agent, blocks ] : model.indist )
        out[ "indist" ][ agent ] = blocks;
    out[ "rules" ] = Json::array();
    for ( const auto& rule : model.rules )
        out[ "rules" ].push_back( { { "from", rule.from }, { "guard", assignment_to_json( rule.guard ) }, { "to", rule.to } } );
    out[ "valuation" ] = Json::object();
    for ( const auto& [ atom, states ] : model.valuation )
        out[ "valuation" ][ atom ] = states;
    return out;
}

Json assignment_to_json( const ActionAssignment& assignment )
{
    Json out = Json::object();
    for ( const auto& [ agent, action ] : assignment )
        out[ agent ] = action;
    return out;
}

std::string read_text_file( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw LoadError( "cannot open '" + path.string() + "'" );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace cil
