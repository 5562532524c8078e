#pragma once

#include "cil/coalition.hpp"
#include "cil/formula.hpp"

#include <cstddef>
#include <string_view>

namespace cil
{

// Position of the first character of a parsed fragment, used to report
// errors relative to an enclosing file.
struct SourcePos
{
    std::size_t line = 1;
    std::size_t column = 1;
};

// Grammar, loosest binding first:
//   formula := disj [ "->" formula ]              (right associative)
//   disj    := conj { "|" conj }
//   conj    := unary { "&" unary }
//   unary   := "!" unary | "K" "{" agents "}" unary
//            | "[" agents "]" "{" agents "}" unary | primary
//   primary := "true" | "false" | atom | "(" formula ")"
// Sugar is expanded on the fly, so the result only holds primitive nodes.
// Throws ParseError, including for overlapping actor/intel coalitions.
[[nodiscard]] Formula parse_formula( std::string_view text, SourcePos origin = {} );

// Parses "{a,b,...}" (possibly empty). Throws ParseError.
[[nodiscard]] Coalition parse_coalition( std::string_view text, SourcePos origin = {} );

} // namespace cil
