#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cil
{

// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Raised when an intelligence modality is built over overlapping coalitions.
class DisjointnessViolation : public Error
{
public:
    explicit DisjointnessViolation( std::vector< std::string > shared );

    [[nodiscard]] const std::vector< std::string >& shared_agents() const { return _shared; }

private:
    std::vector< std::string > _shared;
};

// Concrete-syntax error. Line and column are 1-based.
class ParseError : public Error
{
public:
    ParseError( const std::string& message, std::size_t line, std::size_t column );

    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t column() const { return _column; }
    [[nodiscard]] const std::string& message() const { return _message; }

private:
    std::string _message;
    std::size_t _line;
    std::size_t _column;
};

class UnknownAgent : public Error
{
public:
    explicit UnknownAgent( const std::string& agent )
            : Error( "unknown agent '" + agent + "'" ) {}
};

class UnknownState : public Error
{
public:
    explicit UnknownState( const std::string& state )
            : Error( "unknown state '" + state + "'" ) {}
};

// The formula mentions agents the game does not declare.
class IncompatibleAgents : public Error
{
public:
    explicit IncompatibleAgents( std::vector< std::string > missing );

    [[nodiscard]] const std::vector< std::string >& missing_agents() const { return _missing; }

private:
    std::vector< std::string > _missing;
};

// The brute-force oracle refuses instances whose profile space is too large.
class BoundExceeded : public Error
{
public:
    using Error::Error;
};

class AtomBudgetExceeded : public Error
{
public:
    using Error::Error;
};

// A model or proof file could not be read or decoded.
class LoadError : public Error
{
public:
    using Error::Error;
};

} // namespace cil
