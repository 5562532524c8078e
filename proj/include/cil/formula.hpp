#pragma once

#include "cil/coalition.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace cil
{

enum class FormulaKind : std::uint8_t
{
    Atom,
    Not,
    Implies,
    Knows,      // distributed knowledge K_C body
    IntelPower  // [actor]_intel body
};

// Immutable formula handle. Copies share the underlying node, so formulas
// can be passed by value and read concurrently. Equality is syntactic.
//
// Only the primitive connectives live in the tree; conjunction, disjunction
// and the constants are expanded by the helpers further down.
class Formula
{
public:
    [[nodiscard]] FormulaKind kind() const;

    // Atom only.
    [[nodiscard]] const std::string& atom_name() const;
    // Not, Knows and IntelPower.
    [[nodiscard]] const Formula& body() const;
    // Implies only.
    [[nodiscard]] const Formula& lhs() const;
    [[nodiscard]] const Formula& rhs() const;
    // Knows only.
    [[nodiscard]] const Coalition& coalition() const;
    // IntelPower only.
    [[nodiscard]] const Coalition& actor() const;
    [[nodiscard]] const Coalition& intel() const;

    [[nodiscard]] bool is( FormulaKind kind ) const { return this->kind() == kind; }
    [[nodiscard]] bool is_modal() const { return is( FormulaKind::Knows ) || is( FormulaKind::IntelPower ); }

    [[nodiscard]] std::size_t hash() const;
    [[nodiscard]] std::size_t node_count() const;
    [[nodiscard]] std::size_t depth() const;

    // Concrete syntax accepted by parse_formula.
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] bool same_node( const Formula& other ) const { return _node == other._node; }

    friend bool operator==( const Formula& a, const Formula& b );

    struct Node;

private:
    explicit Formula( std::shared_ptr< const Node > node ) : _node{ std::move( node ) } {}

    std::shared_ptr< const Node > _node;

    friend Formula atom( const std::string& );
    friend Formula negation( const Formula& );
    friend Formula implies( const Formula&, const Formula& );
    friend Formula knows( const Coalition&, const Formula& );
    friend Formula intel_power( const Coalition&, const Coalition&, const Formula& );
};

struct FormulaHash
{
    std::size_t operator()( const Formula& f ) const noexcept { return f.hash(); }
};

// Throws Error if the name is not a valid atom identifier.
[[nodiscard]] Formula atom( const std::string& name );
[[nodiscard]] Formula negation( const Formula& body );
[[nodiscard]] Formula implies( const Formula& lhs, const Formula& rhs );
[[nodiscard]] Formula knows( const Coalition& coalition, const Formula& body );
// Throws DisjointnessViolation unless actor and intel are disjoint.
[[nodiscard]] Formula intel_power( const Coalition& actor, const Coalition& intel, const Formula& body );

// Atom reserved for the constants: top is p0 -> p0, bottom is !top.
inline constexpr const char* reserved_atom = "p0";

[[nodiscard]] Formula top();
[[nodiscard]] Formula bottom();
// a & b  is  !(a -> !b)
[[nodiscard]] Formula conjunction( const Formula& a, const Formula& b );
// a | b  is  !a -> b
[[nodiscard]] Formula disjunction( const Formula& a, const Formula& b );

// Post-order list of distinct subformulas; the last element is f itself.
[[nodiscard]] std::vector< Formula > subformulas( const Formula& f );

// Union of all coalitions occurring in modal nodes.
[[nodiscard]] std::set< Agent > agents_of( const Formula& f );

[[nodiscard]] std::set< std::string > atoms_of( const Formula& f );

} // namespace cil
