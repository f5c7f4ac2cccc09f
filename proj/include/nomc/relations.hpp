#pragma once

// Freshness (∇ ⊢ a # t) and equivalence (∇ ⊢ s ≈α t, ∇ ⊢ s ≈{α,C} t)
// judgements, decided by syntax-directed recursion over the rule sets.

#include <functional>
#include <set>
#include <string_view>
#include <utility>

#include "nomc/core.hpp"

namespace nomc {

/// A set of constraints a # X.
class FreshnessContext {
public:
    using Entry = std::pair<Atom, Variable>;

    FreshnessContext() = default;
    FreshnessContext(std::initializer_list<Entry> entries) : entries_(entries) {}

    void add(const Atom& a, const Variable& x) { entries_.emplace(a, x); }
    void add_all(const FreshnessContext& other) { entries_.insert(other.entries_.begin(), other.entries_.end()); }

    bool contains(const Atom& a, const Variable& x) const { return entries_.count({a, x}) != 0; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    const std::set<Entry>& entries() const { return entries_; }

    /// ∇|_X
    FreshnessContext restrict_to(const Variable& x) const;
    /// Atoms a with a # X in the context.
    AtomSet atoms_fresh_for(const Variable& x) const;
    /// Atoms appearing in the context.
    AtomSet domain() const;
    VariableSet variables() const;

    friend bool operator==(const FreshnessContext&, const FreshnessContext&) = default;

private:
    std::set<Entry> entries_;
};

FreshnessContext operator|(FreshnessContext lhs, const FreshnessContext& rhs);

std::string to_string(const FreshnessContext& ctx);

/// Optional observer called with the name of each rule used, outermost first.
using RuleTrace = std::function<void(std::string_view rule)>;

/// ∇ ⊢ a # t
bool check_fresh(const FreshnessContext& ctx, const Atom& a, const Term& t, const RuleTrace& trace = {});

/// ∇ ⊢ s ≈{α,C} t
bool alpha_c_equiv(const FreshnessContext& ctx, const Term& s, const Term& t, const RuleTrace& trace = {});

/// ∇ ⊢ s ≈α t: every function symbol treated as syntactic.
bool alpha_equiv(const FreshnessContext& ctx, const Term& s, const Term& t, const RuleTrace& trace = {});

/// Canonical rendering of a ground term: two ground terms are ≈{α,C}-equivalent
/// (under any context) iff their keys are equal. Bound atoms are replaced by
/// binder indices and commutative arguments are ordered. Throws
/// std::invalid_argument on a term with variables.
std::string ground_key(const Term& t);

}  // namespace nomc
