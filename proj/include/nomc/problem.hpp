#pragma once

// Unification problems, triples ⟨∇, σ, P⟩ and solutions ⟨∇, σ⟩.

#include <optional>
#include <tuple>
#include <variant>
#include <vector>

#include "nomc/core.hpp"
#include "nomc/relations.hpp"

namespace nomc {

/// s ≈? t. Symmetric: equality ignores orientation.
struct Equation {
    Term lhs;
    Term rhs;
};

/// a #? t
struct FreshnessConstraint {
    Atom atom;
    Term term;
};

class Constraint {
public:
    Constraint(Equation e) : data_(std::move(e)) {}
    Constraint(FreshnessConstraint f) : data_(std::move(f)) {}

    static Constraint equation(Term lhs, Term rhs) { return Equation{std::move(lhs), std::move(rhs)}; }
    static Constraint freshness(Atom a, Term t) { return FreshnessConstraint{std::move(a), std::move(t)}; }

    bool is_equation() const { return std::holds_alternative<Equation>(data_); }
    bool is_freshness() const { return !is_equation(); }
    const Equation& as_equation() const { return std::get<Equation>(data_); }
    const FreshnessConstraint& as_freshness() const { return std::get<FreshnessConstraint>(data_); }

    /// π.X ≈? X in either orientation (one side is the bare variable).
    bool is_fixpoint() const;

    friend bool operator==(const Constraint& x, const Constraint& y);

private:
    std::variant<Equation, FreshnessConstraint> data_;
};

/// Fixpoint equation viewed as (π, X) with π.X ≈? X.
struct FixpointView {
    Permutation perm;
    Variable var;
};
std::optional<FixpointView> as_fixpoint(const Constraint& c);

/// A set of constraints kept in insertion order.
class Problem {
public:
    Problem() = default;
    Problem(std::initializer_list<Constraint> cs);

    /// Inserts unless an equal constraint is already present.
    void add(Constraint c);
    void add_all(const Problem& other);

    const std::vector<Constraint>& constraints() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    bool contains(const Constraint& c) const;
    /// Copy without the constraint at `index`.
    Problem without(std::size_t index) const;

    Problem equations() const;
    Problem freshness_constraints() const;
    Problem fixpoint_equations() const;
    Problem non_fixpoint_equations() const;

    bool only_fixpoint_equations() const;

    Problem substituted(const Substitution& s) const;

    VariableSet vars() const;
    AtomSet atoms() const;
    std::set<FunctionSymbol> symbols() const;

    /// Set equality.
    friend bool operator==(const Problem& x, const Problem& y);

private:
    std::vector<Constraint> items_;
};

/// ⟨∇, σ, P⟩
struct Triple {
    FreshnessContext ctx;
    Substitution subst;
    Problem problem;
};

/// im(σ) ∩ dom(σ) = ∅ and dom(σ) ∩ Var(P) = ∅.
bool is_valid(const Triple& t);

/// ⟨∇, σ⟩
struct Solution {
    FreshnessContext ctx;
    Substitution subst;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Lexicographic termination measure ⟨|Var(P≈)|, ‖P‖, |Pnfp≈|⟩.
struct Measure {
    std::size_t equation_vars = 0;
    std::size_t weight = 0;
    std::size_t non_fixpoint = 0;

    friend auto operator<=>(const Measure&, const Measure&) = default;
};

/// Measure with ‖P‖ summing the sizes of both equation sides and of the
/// terms of the freshness constraints.
Measure full_measure(const Problem& p);
/// Same, with ‖P‖ restricted to the equations. This is the measure the tree
/// builder asserts on ⇒≈ edges; the full one is not decreased by the
/// abstraction rule when the right body has more than two symbols.
Measure equational_measure(const Problem& p);
/// ‖P#‖: sum of sizes of the freshness constraint terms.
std::size_t freshness_weight(const Problem& p);

std::string to_string(const Constraint& c);
std::string to_string(const Problem& p);
std::string to_string(const Triple& t);
std::string to_string(const Solution& s);

}  // namespace nomc
