#include "nomc/unifier.hpp"

#include <algorithm>

namespace nomc {

std::string_view rule_name(Rule r) {
    switch (r) {
        case Rule::EqRefl: return "=?refl";
        case Rule::EqPair: return "=?pair";
        case Rule::EqApp: return "=?app";
        case Rule::EqC: return "=?C";
        case Rule::EqAbsSame: return "=?[aa]";
        case Rule::EqAbsDiff: return "=?[ab]";
        case Rule::EqInst: return "=?inst";
        case Rule::EqInv: return "=?inv";
        case Rule::FreshUnit: return "#?<>";
        case Rule::FreshAtom: return "#?ab";
        case Rule::FreshApp: return "#?app";
        case Rule::FreshAbsSame: return "#?a[a]";
        case Rule::FreshAbsDiff: return "#?a[b]";
        case Rule::FreshVar: return "#?var";
        case Rule::FreshPair: return "#?pair";
    }
    return "?";
}

bool is_equational(Rule r) { return r <= Rule::EqInv; }

namespace {

/// P with the constraint at `index` replaced by `replacement`, in place.
Problem replace(const Problem& p, std::size_t index, std::initializer_list<Constraint> replacement) {
    Problem out;
    const auto& items = p.constraints();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i == index) {
            for (const auto& c : replacement) out.add(c);
        } else {
            out.add(items[i]);
        }
    }
    return out;
}

Triple with_problem(const Triple& t, Problem p) { return Triple{t.ctx, t.subst, std::move(p)}; }

/// ≈?inst for π.X ≈? t with X ∉ Var(t).
Triple instantiate(const Triple& tr, std::size_t index, const Term& suspension, const Term& other) {
    const Variable& x = suspension.variable();
    const Substitution binding = Substitution::single(x, apply(suspension.permutation().inverse(), other));
    Triple out;
    out.ctx = tr.ctx;
    out.subst = compose(tr.subst, binding);
    out.problem = tr.problem.without(index).substituted(binding);
    for (const auto& y : out.subst.domain()) {
        const Term image = out.subst.image_of(y);
        for (const auto& a : tr.ctx.atoms_fresh_for(y)) out.problem.add(Constraint::freshness(a, image));
    }
    return out;
}

std::vector<Step> reduce_equation(const Triple& tr, std::size_t index) {
    const auto& [s, t] = tr.problem.constraints()[index].as_equation();
    using K = Term::Kind;

    if (s == t) return {{Rule::EqRefl, with_problem(tr, tr.problem.without(index))}};

    if (s.is(K::Suspension) && t.is(K::Suspension) && s.variable() == t.variable()) {
        // Fixpoint equations are left for the generation phase.
        if (s.permutation().is_nil() || t.permutation().is_nil()) return {};
        Term oriented = Term::suspension(concat(s.permutation(), t.permutation().inverse()), s.variable());
        return {{Rule::EqInv,
                 with_problem(tr, replace(tr.problem, index, {Constraint::equation(oriented, Term::var(s.variable()))}))}};
    }
    if (s.is(K::Suspension) && !term_vars(t).count(s.variable())) {
        return {{Rule::EqInst, instantiate(tr, index, s, t)}};
    }
    if (t.is(K::Suspension) && !term_vars(s).count(t.variable())) {
        return {{Rule::EqInst, instantiate(tr, index, t, s)}};
    }
    if (s.kind() != t.kind()) return {};

    switch (s.kind()) {
        case K::Pair:
            return {{Rule::EqPair,
                     with_problem(tr, replace(tr.problem, index,
                                              {Constraint::equation(s.first(), t.first()),
                                               Constraint::equation(s.second(), t.second())}))}};
        case K::App: {
            if (s.symbol() != t.symbol()) return {};
            const Term& u = s.body();
            const Term& v = t.body();
            if (!s.symbol().commutative()) {
                return {{Rule::EqApp, with_problem(tr, replace(tr.problem, index, {Constraint::equation(u, v)}))}};
            }
            if (!u.is(K::Pair) || !v.is(K::Pair)) {
                throw MalformedProblem("commutative symbol '" + s.symbol().name + "' applied to a non-pair");
            }
            const Term crossed = Term::pair(v.second(), v.first());
            return {{Rule::EqC, with_problem(tr, replace(tr.problem, index, {Constraint::equation(u, v)}))},
                    {Rule::EqC, with_problem(tr, replace(tr.problem, index, {Constraint::equation(u, crossed)}))}};
        }
        case K::Abstraction: {
            const Atom& a = s.atom_name();
            const Atom& b = t.atom_name();
            if (a == b) {
                return {{Rule::EqAbsSame,
                         with_problem(tr, replace(tr.problem, index, {Constraint::equation(s.body(), t.body())}))}};
            }
            return {{Rule::EqAbsDiff,
                     with_problem(tr, replace(tr.problem, index,
                                              {Constraint::equation(s.body(), apply(Permutation::swap(a, b), t.body())),
                                               Constraint::freshness(a, t.body())}))}};
        }
        default:
            // Distinct atoms, units already handled by refl, occurs-check failures.
            return {};
    }
}

std::optional<Step> reduce_freshness(const Triple& tr, std::size_t index) {
    const auto& [a, t] = tr.problem.constraints()[index].as_freshness();
    using K = Term::Kind;
    switch (t.kind()) {
        case K::Unit:
            return Step{Rule::FreshUnit, with_problem(tr, tr.problem.without(index))};
        case K::Atom:
            if (t.atom_name() == a) return std::nullopt;
            return Step{Rule::FreshAtom, with_problem(tr, tr.problem.without(index))};
        case K::App:
            return Step{Rule::FreshApp, with_problem(tr, replace(tr.problem, index, {Constraint::freshness(a, t.body())}))};
        case K::Abstraction:
            if (t.atom_name() == a) return Step{Rule::FreshAbsSame, with_problem(tr, tr.problem.without(index))};
            return Step{Rule::FreshAbsDiff,
                        with_problem(tr, replace(tr.problem, index, {Constraint::freshness(a, t.body())}))};
        case K::Pair:
            return Step{Rule::FreshPair, with_problem(tr, replace(tr.problem, index,
                                                                   {Constraint::freshness(a, t.first()),
                                                                    Constraint::freshness(a, t.second())}))};
        case K::Suspension: {
            Triple out{tr.ctx, tr.subst, tr.problem.without(index)};
            out.ctx.add(t.permutation().inverse().apply(a), t.variable());
            return Step{Rule::FreshVar, std::move(out)};
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Step> reduce_eq_step(const Triple& t) {
    const auto& items = t.problem.constraints();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!items[i].is_equation()) continue;
        auto steps = reduce_equation(t, i);
        if (!steps.empty()) return steps;
    }
    return {};
}

std::optional<Step> reduce_fresh_step(const Triple& t) {
    const auto& items = t.problem.constraints();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!items[i].is_freshness()) continue;
        if (auto step = reduce_freshness(t, i)) return step;
    }
    return std::nullopt;
}

std::vector<const TreeNode*> DerivationTree::leaves() const {
    std::vector<const TreeNode*> out;
    for (const auto& n : nodes_) {
        if (n.status != NodeStatus::Internal) out.push_back(&n);
    }
    return out;
}

std::vector<const TreeNode*> DerivationTree::successful_leaves() const {
    std::vector<const TreeNode*> out;
    for (const auto& n : nodes_) {
        if (n.status == NodeStatus::SuccessfulLeaf) out.push_back(&n);
    }
    return out;
}

std::vector<const TreeNode*> DerivationTree::fail_leaves() const {
    std::vector<const TreeNode*> out;
    for (const auto& n : nodes_) {
        if (n.status == NodeStatus::FailLeaf) out.push_back(&n);
    }
    return out;
}

std::vector<Triple> DerivationTree::successful_triples() const {
    std::vector<Triple> out;
    for (const auto* n : successful_leaves()) out.push_back(n->triple);
    return out;
}

std::size_t DerivationTree::commutative_applications() const {
    std::size_t edges = 0;
    for (const auto& n : nodes_) {
        if (n.rule == Rule::EqC) ++edges;
    }
    return edges / 2;
}

class TreeBuilder {
public:
    explicit TreeBuilder(const TreeOptions& options) : options_(options) {}

    DerivationTree build(const FreshnessContext& ctx, const Problem& p) {
        for (const auto& c : p.constraints()) {
            try {
                if (c.is_equation()) {
                    require_well_formed(c.as_equation().lhs);
                    require_well_formed(c.as_equation().rhs);
                } else {
                    require_well_formed(c.as_freshness().term);
                }
            } catch (const WellFormednessError& e) {
                throw MalformedProblem(e.what());
            }
        }
        tree_.nodes_.push_back(TreeNode{0, std::nullopt, std::nullopt, Triple{ctx, {}, p}, {}, NodeStatus::Internal});
        expand_equational(0);
        return std::move(tree_);
    }

private:
    std::size_t add_child(std::size_t parent, Step step) {
        const std::size_t id = tree_.nodes_.size();
        if (options_.check_invariants) check_edge(tree_.nodes_[parent].triple, step);
        tree_.nodes_.push_back(TreeNode{id, parent, step.rule, std::move(step.result), {}, NodeStatus::Internal});
        tree_.nodes_[parent].children.push_back(id);
        return id;
    }

    void check_edge(const Triple& from, const Step& step) const {
        const Triple& to = step.result;
        if (!is_valid(to)) {
            throw InvariantViolation("invalid triple after " + std::string(rule_name(step.rule)) + ": " + to_string(to));
        }
        if (is_equational(step.rule)) {
            if (!(equational_measure(to.problem) < equational_measure(from.problem))) {
                throw InvariantViolation("termination measure did not decrease across " +
                                         std::string(rule_name(step.rule)));
            }
        } else if (!(freshness_weight(to.problem) < freshness_weight(from.problem))) {
            throw InvariantViolation("freshness measure did not decrease across " + std::string(rule_name(step.rule)));
        }
    }

    void expand_equational(std::size_t id) {
        auto steps = reduce_eq_step(tree_.nodes_[id].triple);
        if (steps.empty()) {
            if (tree_.nodes_[id].triple.problem.non_fixpoint_equations().empty()) {
                expand_freshness(id);
            } else {
                tree_.nodes_[id].status = NodeStatus::FailLeaf;
            }
            return;
        }
        for (auto& step : steps) expand_equational(add_child(id, std::move(step)));
    }

    void expand_freshness(std::size_t id) {
        for (;;) {
            auto step = reduce_fresh_step(tree_.nodes_[id].triple);
            if (!step) break;
            id = add_child(id, std::move(*step));
        }
        TreeNode& leaf = tree_.nodes_[id];
        const bool success = leaf.triple.problem.freshness_constraints().empty();
        leaf.status = success ? NodeStatus::SuccessfulLeaf : NodeStatus::FailLeaf;
        if (options_.check_invariants && success && !leaf.triple.problem.only_fixpoint_equations()) {
            throw InvariantViolation("successful leaf with non-fixpoint residue: " + to_string(leaf.triple));
        }
    }

    const TreeOptions& options_;
    DerivationTree tree_;
};

DerivationTree build_derivation_tree(const FreshnessContext& ctx, const Problem& p, const TreeOptions& options) {
    return TreeBuilder(options).build(ctx, p);
}

namespace {
Variable fresh_variable(const std::string& base, int index, const VariableSet& taken) {
    std::string name = base + "_" + std::to_string(index);
    while (taken.count(Variable{name})) name += "'";
    return Variable{name};
}

void collect_split_candidates(const Term& t, VariableSet& out) {
    switch (t.kind()) {
        case Term::Kind::App:
            if (t.symbol().commutative() && t.body().is(Term::Kind::Suspension)) out.insert(t.body().variable());
            collect_split_candidates(t.body(), out);
            break;
        case Term::Kind::Abstraction:
            collect_split_candidates(t.body(), out);
            break;
        case Term::Kind::Pair:
            collect_split_candidates(t.first(), out);
            collect_split_candidates(t.second(), out);
            break;
        default:
            break;
    }
}
}  // namespace

Translation translate_commutative_suspensions(const FreshnessContext& ctx, const Problem& p) {
    VariableSet offending;
    for (const auto& c : p.constraints()) {
        if (c.is_equation()) {
            collect_split_candidates(c.as_equation().lhs, offending);
            collect_split_candidates(c.as_equation().rhs, offending);
        } else {
            collect_split_candidates(c.as_freshness().term, offending);
        }
    }
    Translation out{ctx, p, {}};
    if (offending.empty()) return out;

    VariableSet taken = p.vars();
    taken.merge(ctx.variables());
    for (const auto& x : offending) {
        const Variable x1 = fresh_variable(x.name, 1, taken);
        taken.insert(x1);
        const Variable x2 = fresh_variable(x.name, 2, taken);
        taken.insert(x2);
        out.split.bind(x, Term::pair(Term::var(x1), Term::var(x2)));
        for (const auto& a : ctx.atoms_fresh_for(x)) {
            out.ctx.add(a, x1);
            out.ctx.add(a, x2);
        }
    }
    out.problem = p.substituted(out.split);
    return out;
}

}  // namespace nomc
