#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cil
{

// Agents are identified by exact, case-sensitive name.
using Agent = std::string;

// A finite set of agents, stored in canonical (lexicographic) order.
class Coalition
{
public:
    Coalition() = default;
    Coalition( std::initializer_list< Agent > members );
    explicit Coalition( std::vector< Agent > members );

    [[nodiscard]] const std::vector< Agent >& members() const { return _members; }
    [[nodiscard]] std::size_t size() const { return _members.size(); }
    [[nodiscard]] bool empty() const { return _members.empty(); }
    [[nodiscard]] auto begin() const { return _members.begin(); }
    [[nodiscard]] auto end() const { return _members.end(); }

    [[nodiscard]] bool contains( const Agent& agent ) const;
    [[nodiscard]] bool is_subset_of( const Coalition& other ) const;
    [[nodiscard]] bool is_disjoint_from( const Coalition& other ) const;

    [[nodiscard]] Coalition united_with( const Coalition& other ) const;
    [[nodiscard]] Coalition intersected_with( const Coalition& other ) const;
    [[nodiscard]] Coalition without( const Coalition& other ) const;

    // "{a,b}" with members in canonical order.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::size_t hash() const;

    friend bool operator==( const Coalition&, const Coalition& ) = default;
    friend auto operator<=>( const Coalition&, const Coalition& ) = default;

private:
    std::vector< Agent > _members;
};

// Identifier rule shared by atoms, agents and the model file: [A-Za-z0-9_]+
// with a non-digit first character for atoms and agents.
[[nodiscard]] bool is_identifier( const std::string& text );

} // namespace cil
