#include "cil/parser.hpp"

#include "cil/errors.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace cil
{

namespace
{

class Cursor
{
public:
    Cursor( std::string_view text, SourcePos origin ) : _text{ text }, _line{ origin.line }, _column{ origin.column } {}

    void skip_space()
    {
        while ( _pos < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
            advance();
    }

    bool at_end()
    {
        skip_space();
        return _pos >= _text.size();
    }

    bool peek( std::string_view token )
    {
        skip_space();
        return _text.substr( _pos, token.size() ) == token;
    }

    bool accept( std::string_view token )
    {
        if ( !peek( token ) )
            return false;
        for ( std::size_t i = 0; i < token.size(); ++i )
            advance();
        return true;
    }

    void expect( std::string_view token )
    {
        if ( !accept( token ) )
            fail( "expected '" + std::string( token ) + "'" + found() );
    }

    // Reads [A-Za-z0-9_]* without consuming it when `consume` is false.
    std::string word( bool consume = true )
    {
        skip_space();
        std::size_t end = _pos;
        while ( end < _text.size()
                && ( std::isalnum( static_cast< unsigned char >( _text[ end ] ) ) || _text[ end ] == '_' ) )
            ++end;
        std::string out( _text.substr( _pos, end - _pos ) );
        if ( consume )
            while ( _pos < end )
                advance();
        return out;
    }

    // The character following the next word, skipping blanks.
    char after_word()
    {
        skip_space();
        std::size_t end = _pos;
        while ( end < _text.size()
                && ( std::isalnum( static_cast< unsigned char >( _text[ end ] ) ) || _text[ end ] == '_' ) )
            ++end;
        while ( end < _text.size() && std::isspace( static_cast< unsigned char >( _text[ end ] ) ) )
            ++end;
        return end < _text.size() ? _text[ end ] : '\0';
    }

    [[noreturn]] void fail( const std::string& message ) const { throw ParseError( message, _line, _column ); }

    [[nodiscard]] SourcePos where() const { return { _line, _column }; }

    std::string found()
    {
        skip_space();
        if ( _pos >= _text.size() )
            return ", found end of input";
        return ", found '" + std::string( 1, _text[ _pos ] ) + "'";
    }

private:
    void advance()
    {
        if ( _text[ _pos ] == '\n' )
        {
            ++_line;
            _column = 1;
        }
        else
            ++_column;
        ++_pos;
    }

    std::string_view _text;
    std::size_t _pos = 0;
    std::size_t _line;
    std::size_t _column;
};

class FormulaParser
{
public:
    explicit FormulaParser( Cursor& cursor ) : _in{ cursor } {}

    Formula formula()
    {
        auto lhs = disj();
        if ( _in.accept( "->" ) )
            return implies( lhs, formula() );
        return lhs;
    }

    // Contents between the delimiters; the opening one is already consumed.
    Coalition agents( char close )
    {
        std::vector< Agent > members;
        if ( _in.accept( std::string_view( &close, 1 ) ) )
            return Coalition( members );
        do
        {
            auto pos = _in.where();
            auto name = _in.word();
            if ( !is_identifier( name ) )
            {
                if ( name.empty() )
                    _in.fail( "expected agent name" + _in.found() );
                throw ParseError( "invalid agent name '" + name + "'", pos.line, pos.column );
            }
            members.push_back( std::move( name ) );
        } while ( _in.accept( "," ) );
        _in.expect( std::string_view( &close, 1 ) );
        return Coalition( std::move( members ) );
    }

private:
    Formula disj()
    {
        auto lhs = conj();
        while ( _in.accept( "|" ) )
            lhs = disjunction( lhs, conj() );
        return lhs;
    }

    Formula conj()
    {
        auto lhs = unary();
        while ( _in.accept( "&" ) )
            lhs = conjunction( lhs, unary() );
        return lhs;
    }

    Formula unary()
    {
        if ( _in.accept( "!" ) )
            return negation( unary() );
        if ( _in.peek( "[" ) )
        {
            auto pos = _in.where();
            _in.expect( "[" );
            auto actor = agents( ']' );
            _in.expect( "{" );
            auto intel = agents( '}' );
            auto body = unary();
            try
            {
                return intel_power( actor, intel, body );
            }
            catch ( const DisjointnessViolation& e )
            {
                throw ParseError( e.what(), pos.line, pos.column );
            }
        }
        if ( _in.peek( "K" ) && _in.word( false ) == "K" && _in.after_word() == '{' )
        {
            _in.word();
            _in.expect( "{" );
            auto coalition = agents( '}' );
            return knows( coalition, unary() );
        }
        return primary();
    }

    Formula primary()
    {
        if ( _in.accept( "(" ) )
        {
            auto inner = formula();
            _in.expect( ")" );
            return inner;
        }
        auto pos = _in.where();
        auto name = _in.word();
        if ( name.empty() )
            _in.fail( "expected formula" + _in.found() );
        if ( name == "true" )
            return top();
        if ( name == "false" )
            return bottom();
        if ( !is_identifier( name ) )
            throw ParseError( "invalid atom name '" + name + "'", pos.line, pos.column );
        return atom( name );
    }

    Cursor& _in;
};

} // namespace

Formula parse_formula( std::string_view text, SourcePos origin )
{
    Cursor cursor( text, origin );
    FormulaParser parser( cursor );
    auto result = parser.formula();
    if ( !cursor.at_end() )
        cursor.fail( "unexpected trailing input" + cursor.found() );
    return result;
}

Coalition parse_coalition( std::string_view text, SourcePos origin )
{
    Cursor cursor( text, origin );
    FormulaParser parser( cursor );
    cursor.expect( "{" );
    auto result = parser.agents( '}' );
    if ( !cursor.at_end() )
        cursor.fail( "unexpected trailing input" + cursor.found() );
    return result;
}

} // namespace cil
