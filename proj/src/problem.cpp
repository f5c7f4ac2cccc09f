#include "nomc/problem.hpp"

#include <algorithm>

namespace nomc {

namespace {
bool is_bare(const Term& t) { return t.is(Term::Kind::Suspension) && t.permutation().is_nil(); }
}  // namespace

bool Constraint::is_fixpoint() const { return as_fixpoint(*this).has_value(); }

std::optional<FixpointView> as_fixpoint(const Constraint& c) {
    if (!c.is_equation()) return std::nullopt;
    const auto& [l, r] = c.as_equation();
    if (!l.is(Term::Kind::Suspension) || !r.is(Term::Kind::Suspension)) return std::nullopt;
    if (l.variable() != r.variable()) return std::nullopt;
    if (is_bare(r)) return FixpointView{l.permutation(), l.variable()};
    if (is_bare(l)) return FixpointView{r.permutation(), r.variable()};
    return std::nullopt;
}

bool operator==(const Constraint& x, const Constraint& y) {
    if (x.is_equation() != y.is_equation()) return false;
    if (x.is_equation()) {
        const auto& e = x.as_equation();
        const auto& f = y.as_equation();
        return (e.lhs == f.lhs && e.rhs == f.rhs) || (e.lhs == f.rhs && e.rhs == f.lhs);
    }
    const auto& e = x.as_freshness();
    const auto& f = y.as_freshness();
    return e.atom == f.atom && e.term == f.term;
}

Problem::Problem(std::initializer_list<Constraint> cs) {
    for (const auto& c : cs) add(c);
}

void Problem::add(Constraint c) {
    if (!contains(c)) items_.push_back(std::move(c));
}

void Problem::add_all(const Problem& other) {
    for (const auto& c : other.items_) add(c);
}

bool Problem::contains(const Constraint& c) const {
    return std::find(items_.begin(), items_.end(), c) != items_.end();
}

Problem Problem::without(std::size_t index) const {
    Problem out;
    out.items_.reserve(items_.size());
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i != index) out.items_.push_back(items_[i]);
    }
    return out;
}

namespace {
template <typename Pred>
Problem filter(const std::vector<Constraint>& items, Pred pred) {
    Problem out;
    for (const auto& c : items) {
        if (pred(c)) out.add(c);
    }
    return out;
}
}  // namespace

Problem Problem::equations() const {
    return filter(items_, [](const Constraint& c) { return c.is_equation(); });
}
Problem Problem::freshness_constraints() const {
    return filter(items_, [](const Constraint& c) { return c.is_freshness(); });
}
Problem Problem::fixpoint_equations() const {
    return filter(items_, [](const Constraint& c) { return c.is_fixpoint(); });
}
Problem Problem::non_fixpoint_equations() const {
    return filter(items_, [](const Constraint& c) { return c.is_equation() && !c.is_fixpoint(); });
}

bool Problem::only_fixpoint_equations() const {
    return std::all_of(items_.begin(), items_.end(), [](const Constraint& c) { return c.is_fixpoint(); });
}

Problem Problem::substituted(const Substitution& s) const {
    Problem out;
    for (const auto& c : items_) {
        if (c.is_equation()) {
            out.add(Constraint::equation(s.apply(c.as_equation().lhs), s.apply(c.as_equation().rhs)));
        } else {
            out.add(Constraint::freshness(c.as_freshness().atom, s.apply(c.as_freshness().term)));
        }
    }
    return out;
}

VariableSet Problem::vars() const {
    VariableSet out;
    for (const auto& c : items_) {
        if (c.is_equation()) {
            collect_vars(c.as_equation().lhs, out);
            collect_vars(c.as_equation().rhs, out);
        } else {
            collect_vars(c.as_freshness().term, out);
        }
    }
    return out;
}

AtomSet Problem::atoms() const {
    AtomSet out;
    for (const auto& c : items_) {
        if (c.is_equation()) {
            collect_atoms(c.as_equation().lhs, out);
            collect_atoms(c.as_equation().rhs, out);
        } else {
            out.insert(c.as_freshness().atom);
            collect_atoms(c.as_freshness().term, out);
        }
    }
    return out;
}

std::set<FunctionSymbol> Problem::symbols() const {
    std::set<FunctionSymbol> out;
    for (const auto& c : items_) {
        if (c.is_equation()) {
            out.merge(term_symbols(c.as_equation().lhs));
            out.merge(term_symbols(c.as_equation().rhs));
        } else {
            out.merge(term_symbols(c.as_freshness().term));
        }
    }
    return out;
}

bool operator==(const Problem& x, const Problem& y) {
    if (x.size() != y.size()) return false;
    return std::all_of(x.items_.begin(), x.items_.end(), [&](const Constraint& c) { return y.contains(c); });
}

bool is_valid(const Triple& t) {
    const VariableSet dom = t.subst.domain();
    for (const auto& x : t.subst.image_vars()) {
        if (dom.count(x)) return false;
    }
    for (const auto& x : t.problem.vars()) {
        if (dom.count(x)) return false;
    }
    return true;
}

namespace {
Measure measure(const Problem& p, bool count_freshness) {
    Measure m;
    VariableSet eq_vars;
    for (const auto& c : p.constraints()) {
        if (c.is_equation()) {
            const auto& e = c.as_equation();
            collect_vars(e.lhs, eq_vars);
            collect_vars(e.rhs, eq_vars);
            m.weight += term_size(e.lhs) + term_size(e.rhs);
            if (!c.is_fixpoint()) ++m.non_fixpoint;
        } else if (count_freshness) {
            m.weight += term_size(c.as_freshness().term);
        }
    }
    m.equation_vars = eq_vars.size();
    return m;
}
}  // namespace

Measure full_measure(const Problem& p) { return measure(p, true); }
Measure equational_measure(const Problem& p) { return measure(p, false); }

std::size_t freshness_weight(const Problem& p) {
    std::size_t w = 0;
    for (const auto& c : p.constraints()) {
        if (c.is_freshness()) w += term_size(c.as_freshness().term);
    }
    return w;
}

std::string to_string(const Constraint& c) {
    if (auto fp = as_fixpoint(c)) {
        // Printed oriented as π.X =? X.
        return to_string(Term::suspension(fp->perm, fp->var)) + " =? " + fp->var.name;
    }
    if (c.is_equation()) return to_string(c.as_equation().lhs) + " =? " + to_string(c.as_equation().rhs);
    return c.as_freshness().atom.name + " #? " + to_string(c.as_freshness().term);
}

std::string to_string(const Problem& p) {
    std::string out = "{";
    bool first = true;
    for (const auto& c : p.constraints()) {
        if (!first) out += "; ";
        first = false;
        out += to_string(c);
    }
    return out + "}";
}

std::string to_string(const Triple& t) {
    return "<" + to_string(t.ctx) + ", " + to_string(t.subst) + ", " + to_string(t.problem) + ">";
}

std::string to_string(const Solution& s) { return "<" + to_string(s.ctx) + ", " + to_string(s.subst) + ">"; }

}  // namespace nomc
