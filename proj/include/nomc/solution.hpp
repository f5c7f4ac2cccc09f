#pragma once

// Checking candidate solutions ⟨∇, σ⟩ against triples, and the
// more-general-than preorder on solutions. Both need an instantiating
// substitution λ; it is found by nominal matching modulo C.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nomc/problem.hpp"

namespace nomc {

struct SolutionCheck {
    bool context = true;    // ∇ ⊢ Δσ
    bool freshness = true;  // ∇ ⊢ a # tσ for every a #? t
    bool equations = true;  // ∇ ⊢ sσ ≈ tσ for every s ≈? t
    bool instance = true;   // ∃λ. ∇ ⊢ δλ ≈ σ
    /// First failing item, empty when everything holds.
    std::string failure;

    bool conditions_1_to_3() const { return context && freshness && equations; }
    bool ok() const { return conditions_1_to_3() && instance; }
    explicit operator bool() const { return ok(); }
};

/// Checks the four solution conditions of `sol` for the triple ⟨Δ, δ, P⟩.
SolutionCheck check_solution(const Triple& t, const Solution& sol);

/// Shorthand for the root triple ⟨ctx, id, p⟩.
SolutionCheck check_solution(const FreshnessContext& ctx, const Problem& p, const Solution& sol);

/// ⟨∇, σ⟩ ≼ ⟨∇', σ'⟩ over `vars`: some λ has ∇' ⊢ ∇λ and ∇' ⊢ Xσλ ≈ Xσ' for X in vars.
bool solution_leq(const Solution& general, const Solution& instance, const VariableSet& vars);

using MatchPair = std::pair<Term, Term>;
/// Receives λ and the variables it was matched on (identity images included).
using MatchAcceptor = std::function<bool(const Substitution&, const VariableSet&)>;

/// Finds λ with ctx ⊢ pλ ≈{α,C} t for every (p, t). Variables of the targets
/// are rigid. Every matcher is offered to `accept` until one is taken; the
/// search backtracks over the two argument orders of commutative symbols.
std::optional<Substitution> c_match(const FreshnessContext& ctx, const std::vector<MatchPair>& pairs,
                                    const MatchAcceptor& accept = {});

}  // namespace nomc
