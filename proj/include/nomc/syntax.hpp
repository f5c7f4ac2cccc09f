#pragma once

// Concrete ASCII syntax for terms, contexts, problems and solutions.
//
//   problem  := ("commutative:" sym ("," sym)* NEWLINE)? context "|-" constraints
//   context  := "{" (atom "#" VAR ("," atom "#" VAR)*)? "}"
//   constraint := atom "#?" term | term "=?" term      (separated by ";")
//   term     := "<>" | atom | VAR | perm "." VAR | "[" atom "]" term
//             | "(" term "," term ")" | f term | f^C term | term op term | op term
//   solution := "<" context "," ("id" | "{" VAR "/" term ("," ...)* "}") ">"
//
// Atoms and symbols are lower-case identifiers, variables upper-case. Infix
// operators (`*`, `+`, ...) are commutative and associate to the left.
// `//` starts a comment.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nomc/problem.hpp"

namespace nomc {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct ParsedProblem {
    FreshnessContext ctx;
    Problem problem;
    /// Commutative symbols declared in the preamble or used in the problem.
    std::vector<FunctionSymbol> commutative;
};

/// Throws ParseError on bad syntax and WellFormednessError on a commutative
/// symbol applied to a non-pair, unless `allow_malformed`.
ParsedProblem parse_problem(std::string_view text, bool allow_malformed = false);

Term parse_term(std::string_view text);
FreshnessContext parse_context(std::string_view text);
Solution parse_solution(std::string_view text);

/// Text accepted by parse_problem; includes a preamble when `commutative`
/// holds symbols that the problem does not use.
std::string problem_text(const FreshnessContext& ctx, const Problem& p,
                         const std::vector<FunctionSymbol>& commutative = {});

}  // namespace nomc
