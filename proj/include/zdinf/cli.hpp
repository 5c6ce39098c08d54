/**
 * @file cli.hpp
 * @brief Object DSL, JSON object literals and the command dispatcher behind the zdinf tool.
 *
 * DSL grammar:
 *   expr := atom ('+' atom)*
 *   atom := 'F0[' int ']' | 'F1[' int ']' | 'F[' int ',' int ']' | 'T[' int ',' int ']'
 * Whitespace between tokens is ignored. Text starting with '{' is read as a JSON literal
 *   {"field":"Q","torsion":[[n,a],...],"lattice":{"p":..,"q":..,"gens":[{"jump":e,"dir":[..]}]}}
 * where directions hold integers or rational strings such as "-3/4".
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdinf/decomp.hpp"

namespace zdinf {

struct ObjectExpr {
    std::vector<IndecLabel> atoms;   // sorted; empty for a literal
    std::optional<CObject> literal;  // set for JSON input
};

/// Throws ParseError (with position) or RangeError (m <= 0, n <= 0).
ObjectExpr parse_expr(std::string_view text, FieldSpec field);
/// Sorted label list joined by " + ", or the object itself for a literal.
std::string print_expr(const ObjectExpr& e);
CObject to_object(FieldSpec field, const ObjectExpr& e);
CObject parse_object(std::string_view text, FieldSpec field);

/// The JSON literal form of x (accepted back by parse_object).
std::string object_json(const CObject& x);

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdinf
