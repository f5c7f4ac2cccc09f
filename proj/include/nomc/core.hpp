#pragma once

// Nominal terms: atoms, variables, swapping-list permutations, the term AST
// and the permutation / substitution actions on it.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nomc {

/// A name that can be abstracted and swapped. Distinct names are distinct atoms.
struct Atom {
    std::string name;

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// A unification variable. Lexically upper-case, disjoint from atoms.
struct Variable {
    std::string name;

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

using AtomSet = std::set<Atom>;
using VariableSet = std::set<Variable>;

/// Raised when a term or problem breaks the commutative-pair restriction.
class WellFormednessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The swapping (a b). (a b) and (b a) compare equal.
class Swapping {
public:
    Swapping(Atom first, Atom second);

    const Atom& first() const { return first_; }
    const Atom& second() const { return second_; }

    Atom apply(const Atom& a) const;

    friend bool operator==(const Swapping& x, const Swapping& y);

private:
    Atom first_;
    Atom second_;
};

/// A finite permutation represented as a list of swappings. The head swapping
/// acts first, so the list (a b)(c d) maps an atom through (a b) and then (c d).
/// Two permutations are never compared as lists by the algorithms; use
/// `same_action` (or an empty `difference_set`) instead.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Swapping> swaps) : swaps_(std::move(swaps)) {}

    static Permutation swap(Atom a, Atom b);

    const std::vector<Swapping>& swaps() const { return swaps_; }
    bool is_nil() const { return swaps_.empty(); }

    Atom apply(const Atom& a) const;

    /// Reversed swapping list.
    Permutation inverse() const;

    /// {a | this·a ≠ a}.
    AtomSet domain() const;

    /// Every atom mentioned by some swapping, moved or not.
    AtomSet mentioned_atoms() const;

    /// Syntactic list equality. Only the refl rule and the printer care.
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<Swapping> swaps_;
};

/// first ⊕ second: apply `first`, then `second`.
Permutation concat(const Permutation& first, const Permutation& second);

/// {a | p·a ≠ q·a}
AtomSet difference_set(const Permutation& p, const Permutation& q);

inline bool same_action(const Permutation& p, const Permutation& q) {
    return difference_set(p, q).empty();
}

enum class Theory { Plain, Commutative };

struct FunctionSymbol {
    std::string name;
    Theory theory = Theory::Plain;

    bool commutative() const { return theory == Theory::Commutative; }

    friend auto operator<=>(const FunctionSymbol&, const FunctionSymbol&) = default;
};

/// Immutable nominal term. Copies share structure.
class Term {
public:
    enum class Kind { Unit, Atom, Abstraction, Pair, App, Suspension };

    static Term unit();
    static Term atom(Atom a);
    static Term abstraction(Atom binder, Term body);
    static Term pair(Term first, Term second);
    static Term app(FunctionSymbol symbol, Term argument);
    static Term suspension(Permutation perm, Variable var);
    /// id.X
    static Term var(Variable var) { return suspension(Permutation{}, std::move(var)); }

    Kind kind() const;
    bool is(Kind k) const { return kind() == k; }

    /// Atom of an atom term, binder of an abstraction.
    const Atom& atom_name() const;
    /// Body of an abstraction, argument of an application.
    const Term& body() const;
    const Term& first() const;
    const Term& second() const;
    const FunctionSymbol& symbol() const;
    const Permutation& permutation() const;
    const Variable& variable() const;

    /// Syntactic equality, permutation lists compared verbatim.
    friend bool operator==(const Term& s, const Term& t);

    bool same_node(const Term& other) const { return node_ == other.node_; }

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Convenience builders used throughout the tests.
inline Term atom_term(const std::string& name) { return Term::atom(Atom{name}); }
inline Term var_term(const std::string& name) { return Term::var(Variable{name}); }
Term commutative_app(const std::string& symbol, Term left, Term right);

/// p·t
Term apply(const Permutation& p, const Term& t);

/// Number of symbols in t. Suspensions count as one regardless of their
/// permutation, so the orientation rule leaves sizes unchanged.
std::size_t term_size(const Term& t);
/// Longest root-to-leaf path; leaves have depth one.
std::size_t term_depth(const Term& t);

VariableSet term_vars(const Term& t);
void collect_vars(const Term& t, VariableSet& out);
/// Atoms occurring anywhere in t, including binders and suspension permutations.
AtomSet term_atoms(const Term& t);
void collect_atoms(const Term& t, AtomSet& out);
/// Function symbols occurring in t.
std::set<FunctionSymbol> term_symbols(const Term& t);
bool is_ground(const Term& t);

/// Commutative symbols may only be applied to pairs.
bool is_well_formed(const Term& t);
/// Throws WellFormednessError naming the first offending application.
void require_well_formed(const Term& t);

/// A finite map from variables to terms. Identity bindings are never stored.
class Substitution {
public:
    Substitution() = default;

    static Substitution single(Variable x, Term t);

    /// Adds or replaces the binding of x; binding x to id.X removes it.
    void bind(const Variable& x, Term t);

    const std::map<Variable, Term>& bindings() const { return bindings_; }
    bool empty() const { return bindings_.empty(); }
    std::size_t size() const { return bindings_.size(); }

    bool binds(const Variable& x) const { return bindings_.count(x) != 0; }
    /// Xσ
    Term image_of(const Variable& x) const;

    VariableSet domain() const;
    /// Variables occurring in the images.
    VariableSet image_vars() const;

    Term apply(const Term& t) const;

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    std::map<Variable, Term> bindings_;
};

/// The substitution that applies `first` and then `second`.
Substitution compose(const Substitution& first, const Substitution& second);

/// σσ = σ on every variable of the domain.
bool is_idempotent(const Substitution& s);

// Printing in the concrete syntax read by the problem parser.
std::string to_string(const Atom& a);
std::string to_string(const Variable& x);
std::string to_string(const Permutation& p);
std::string to_string(const Term& t);
std::string to_string(const Substitution& s);

/// True for symbol names written infix (`*`, `+`, ...). Such symbols are
/// always commutative.
bool is_operator_name(const std::string& name);

}  // namespace nomc
