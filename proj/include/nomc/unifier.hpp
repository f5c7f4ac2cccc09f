#pragma once

// Two-phase simplification of nominal C-unification problems: ⇒≈ (equations)
// followed by ⇒# (freshness constraints), recorded as a derivation tree.

#include <optional>
#include <string_view>
#include <vector>

#include "nomc/problem.hpp"

namespace nomc {

class MalformedProblem : public WellFormednessError {
public:
    using WellFormednessError::WellFormednessError;
};

/// An internal invariant (validity, termination measure, leaf shape) failed.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Rule {
    // ⇒≈
    EqRefl,
    EqPair,
    EqApp,
    EqC,
    EqAbsSame,
    EqAbsDiff,
    EqInst,
    EqInv,
    // ⇒#
    FreshUnit,
    FreshAtom,
    FreshApp,
    FreshAbsSame,
    FreshAbsDiff,
    FreshVar,
    FreshPair,
};

std::string_view rule_name(Rule r);
bool is_equational(Rule r);

struct Step {
    Rule rule;
    Triple result;
};

/// All triples reachable by one ⇒≈ rule applied to the first reducible
/// equation. Two results for the commutative rule, none at a normal form.
std::vector<Step> reduce_eq_step(const Triple& t);

/// One ⇒# rule applied to the first reducible freshness constraint.
std::optional<Step> reduce_fresh_step(const Triple& t);

enum class NodeStatus { Internal, SuccessfulLeaf, FailLeaf };

struct TreeNode {
    std::size_t id = 0;
    std::optional<std::size_t> parent;
    /// Rule on the edge from the parent.
    std::optional<Rule> rule;
    Triple triple;
    std::vector<std::size_t> children;
    NodeStatus status = NodeStatus::Internal;
};

class DerivationTree {
public:
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const TreeNode& root() const { return nodes_.front(); }
    const TreeNode& node(std::size_t id) const { return nodes_.at(id); }

    std::vector<const TreeNode*> leaves() const;
    std::vector<const TreeNode*> successful_leaves() const;
    std::vector<const TreeNode*> fail_leaves() const;

    /// Successful triples in tree order.
    std::vector<Triple> successful_triples() const;
    bool has_successful_leaf() const { return !successful_leaves().empty(); }

    /// Number of edges labelled with the commutative rule, counted per
    /// application (each application contributes two edges).
    std::size_t commutative_applications() const;

private:
    friend class TreeBuilder;
    std::vector<TreeNode> nodes_;
};

struct TreeOptions {
    /// Check validity and the termination measures on every edge.
    bool check_invariants = true;
};

/// Builds the derivation tree for ⟨∇, P⟩ rooted at ⟨∇, id, P⟩.
/// Throws MalformedProblem when a commutative symbol is applied to a non-pair.
DerivationTree build_derivation_tree(const FreshnessContext& ctx, const Problem& p, const TreeOptions& options = {});

struct Translation {
    FreshnessContext ctx;
    Problem problem;
    /// X ↦ ⟨X_1, X_2⟩ for every variable that was split.
    Substitution split;
};

/// Replaces each variable X occurring as f^C π.X by a pair of fresh variables
/// ⟨X_1, X_2⟩ that inherit the freshness constraints of X.
Translation translate_commutative_suspensions(const FreshnessContext& ctx, const Problem& p);

}  // namespace nomc
