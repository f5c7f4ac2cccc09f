#pragma once

// Combinatory solutions of fixpoint equations π.X ≈? X, built from the cycle
// decomposition of π and pseudo-cycles over commutative symbols.

#include <cstddef>
#include <vector>

#include "nomc/problem.hpp"

namespace nomc {

/// A k-cycle (a_0 ... a_{k-1}), stored rotated so that a_0 is the least atom.
class Cycle {
public:
    explicit Cycle(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t length() const { return atoms_.size(); }
    bool contains(const Atom& a) const;

    /// The cycle as a permutation (swapping list acting like the cycle).
    Permutation as_permutation() const;

    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    std::vector<Atom> atoms_;
};

std::string to_string(const Cycle& c);

/// Disjoint cycles of p over the atoms it mentions, in order of least atom.
/// Fixed atoms become 1-cycles only when `with_fixed` is set.
std::vector<Cycle> cycle_decompose(const Permutation& p, bool with_fixed = false);

struct PseudoCycle {
    Cycle cycle;
    std::vector<Term> elements;
    /// Pairing steps from the trivial pseudo-cycle.
    std::size_t level = 0;

    std::size_t length() const { return elements.size(); }
    bool unitary() const { return elements.size() == 1; }
};

/// Same cycle and same elements up to ≈{α,C} and rotation.
bool same_pseudo_cycle(const PseudoCycle& x, const PseudoCycle& y);

std::string to_string(const PseudoCycle& pc);

PseudoCycle trivial_pseudo_cycle(const Cycle& c);

/// Pseudo-cycles whose elements are B_i * B_{i+d} for distinct elements of pc,
/// one per offset d in 1..|pc|/2.
std::vector<PseudoCycle> first_instance_pseudo_cycles(const PseudoCycle& pc, const FunctionSymbol& star);

struct EnumerationBounds {
    std::size_t max_depth = 3;
    std::size_t max_count = 64;
};

/// Breadth-first closure from the trivial pseudo-cycle of c, `max_depth`
/// pairing levels deep. Besides first instances, each level pairs a
/// pseudo-cycle with itself at offset zero and with its ancestors, which
/// yields elements such as (ā*ā)*(b̄*b̄). Duplicates are dropped.
std::vector<PseudoCycle> enumerate_pseudo_cycles(const Cycle& c, const std::vector<FunctionSymbol>& signature,
                                                 std::size_t max_depth);

/// Elements of unitary pseudo-cycles, in generation order, at most max_count,
/// pairwise non-equivalent. Each t satisfies c·t ≈{α,C} t.
std::vector<Term> enumerate_unitary_pseudo_cycles(const Cycle& c, const std::vector<FunctionSymbol>& signature,
                                                  const EnumerationBounds& bounds = {});

/// Solutions of p.x ≈? x under ctx: first ⟨ctx ∪ dom(p)#x, id⟩, then one
/// ⟨ctx ∪ (dom(p) \ κ)#x, {x/t}⟩ per cycle κ avoiding the atoms ctx requires
/// fresh for x and per unitary element t over κ.
std::vector<Solution> solve_fixpoint_equation(const FreshnessContext& ctx, const Permutation& p, const Variable& x,
                                              const std::vector<FunctionSymbol>& signature,
                                              const EnumerationBounds& bounds = {});

/// Solutions of a successful leaf: per-variable candidates that satisfy every
/// fixpoint equation on that variable, combined across variables and composed
/// with the leaf substitution. The first solution uses only trivial
/// candidates. Throws InvariantViolation if a combination fails check_solution.
std::vector<Solution> combine_leaf_solutions(const Triple& leaf, const std::vector<FunctionSymbol>& signature,
                                             const EnumerationBounds& bounds = {});

/// Commutative symbols of p, or {*} when it has none.
std::vector<FunctionSymbol> commutative_signature(const Problem& p);

}  // namespace nomc
