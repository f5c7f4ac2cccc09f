#pragma once

// Brute-force ground truth over a finite term space. Uses the freshness and
// equivalence judgements and C-matching against ground terms, never the
// reduction rules.

#include <cstddef>
#include <functional>
#include <vector>

#include "nomc/problem.hpp"

namespace nomc {

struct TermSpace {
    std::vector<Atom> atoms;
    std::vector<FunctionSymbol> signature;
    std::size_t max_depth = 3;
    /// When non-empty, id.X for each X is a leaf of the space.
    std::vector<Variable> variables;
};

/// Every well-formed term of depth ≤ max_depth, each exactly once, in order of
/// increasing depth. Leaves have depth 1.
std::vector<Term> enumerate_terms(const TermSpace& space);

/// One representative per ≈{α,C} class of the ground terms of the space.
std::vector<Term> ground_representatives(const TermSpace& space);

/// Visits the ground substitutions σ over Var(P) ∪ Var(ctx), images drawn from
/// ground_representatives(space), with ∅ ⊢ ctxσ, ∅ ⊢ a # tσ for each a #? t
/// and ∅ ⊢ sσ ≈{α,C} tσ for each s ≈? t. Stops when `visit` returns false.
/// Returns the number of solutions visited.
std::size_t for_each_ground_solution(const FreshnessContext& ctx, const Problem& p, const TermSpace& space,
                                     const std::function<bool(const Substitution&)>& visit);

/// All solutions of for_each_ground_solution as ⟨∅, σ⟩.
std::vector<Solution> brute_force_unify(const FreshnessContext& ctx, const Problem& p, const TermSpace& space);

bool brute_force_solvable(const FreshnessContext& ctx, const Problem& p, const TermSpace& space);

}  // namespace nomc
