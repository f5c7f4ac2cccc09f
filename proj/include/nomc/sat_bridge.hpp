#pragma once

// Positive 1-in-3-SAT as nominal C-unification: each clause (p, q, r) becomes
//   ((X_p ⊕ X_q) ⊕ X_r) ⊕ Y_i ≈? ((b̄ ⊕ b̄) ⊕ ā) ⊕ ((b̄ ⊕ ā) ⊕ b̄)
// and X_p ↦ ā reads as p = true.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nomc/problem.hpp"

namespace nomc {

struct Clause {
    std::string p, q, r;
};

struct OneInThreeInstance {
    std::vector<Clause> clauses;

    /// Propositional variables in order of first occurrence.
    std::vector<std::string> variables() const;
};

class SatFormatError : public std::runtime_error {
public:
    SatFormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class NonGroundAssignment : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One clause per line, three identifiers; '#' starts a comment.
OneInThreeInstance parse_instance(std::string_view text);

/// The ⊕ symbol used by the encoding.
FunctionSymbol sat_symbol();
Variable sat_variable(const std::string& p);
Variable padding_variable(std::size_t clause_index);

Problem encode(const OneInThreeInstance& inst);

using Valuation = std::map<std::string, bool>;

/// p ↦ (X_pσ = ā). Throws NonGroundAssignment when some X_pσ is neither ā nor b̄.
Valuation decode(const Solution& sol, const OneInThreeInstance& inst);

bool exactly_one_per_clause(const OneInThreeInstance& inst, const Valuation& v);

/// Exhaustive search over all valuations.
std::optional<Valuation> brute_force_one_in_three(const OneInThreeInstance& inst);

struct SatOutcome {
    std::optional<Valuation> valuation;
    /// Every valuation decoded from a successful leaf, in tree order.
    std::vector<Valuation> decoded;
    std::size_t tree_nodes = 0;
};

/// Encodes, builds the derivation tree and decodes each successful leaf
/// through its first (trivial) combined solution.
SatOutcome solve_one_in_three(const OneInThreeInstance& inst);

}  // namespace nomc
