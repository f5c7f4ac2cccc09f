#include "nomc/oracle.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "nomc/solution.hpp"

namespace nomc {

std::vector<Term> enumerate_terms(const TermSpace& space) {
    std::vector<std::vector<Term>> exact(1);
    std::vector<Term>& leaves = exact[0];
    leaves.push_back(Term::unit());
    for (const auto& a : space.atoms) leaves.push_back(Term::atom(a));
    for (const auto& x : space.variables) leaves.push_back(Term::var(x));

    for (std::size_t d = 2; d <= space.max_depth; ++d) {
        const auto& prev = exact[d - 2];
        std::vector<Term> next;
        for (const auto& t : prev) {
            for (const auto& a : space.atoms) next.push_back(Term::abstraction(a, t));
        }
        // Pairs whose deeper component has depth exactly d - 1; an application
        // to such a pair has depth d as well.
        std::vector<Term> pairs;
        for (std::size_t i = 0; i + 1 < d; ++i) {
            for (std::size_t j = 0; j + 1 < d; ++j) {
                if (i != d - 2 && j != d - 2) continue;
                for (const auto& s : exact[i]) {
                    for (const auto& t : exact[j]) pairs.push_back(Term::pair(s, t));
                }
            }
        }
        next.insert(next.end(), pairs.begin(), pairs.end());
        for (const auto& f : space.signature) {
            for (const auto& t : prev) {
                if (!f.commutative() && !t.is(Term::Kind::Pair)) next.push_back(Term::app(f, t));
            }
            for (const auto& t : pairs) next.push_back(Term::app(f, t));
        }
        exact.push_back(std::move(next));
    }
    if (space.max_depth == 0) return {};
    std::vector<Term> out;
    for (auto& level : exact) out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<Term> ground_representatives(const TermSpace& space) {
    TermSpace ground = space;
    ground.variables.clear();
    std::vector<Term> out;
    std::unordered_set<std::string> seen;
    for (auto& t : enumerate_terms(ground)) {
        if (seen.insert(ground_key(t)).second) out.push_back(std::move(t));
    }
    return out;
}

namespace {

struct Item {
    Constraint constraint;
    VariableSet vars;
};

VariableSet constraint_vars(const Constraint& c) {
    if (c.is_freshness()) return term_vars(c.as_freshness().term);
    VariableSet v = term_vars(c.as_equation().lhs);
    collect_vars(c.as_equation().rhs, v);
    return v;
}

bool holds(const Constraint& c, const Substitution& s) {
    static const FreshnessContext empty;
    if (c.is_freshness()) return check_fresh(empty, c.as_freshness().atom, s.apply(c.as_freshness().term));
    return alpha_c_equiv(empty, s.apply(c.as_equation().lhs), s.apply(c.as_equation().rhs));
}

/// An equation with one side free of the variable being chosen: once the
/// earlier variables are bound, that side is ground and the other side is a
/// pattern whose matches give the candidates directly.
struct Join {
    Term pattern;
    Term target;
};

std::optional<Join> find_join(const std::vector<Item>& closing, const Variable& x, std::size_t& index) {
    for (std::size_t k = 0; k < closing.size(); ++k) {
        const auto& c = closing[k].constraint;
        if (!c.is_equation()) continue;
        const auto& e = c.as_equation();
        const bool in_lhs = term_vars(e.lhs).count(x) > 0;
        const bool in_rhs = term_vars(e.rhs).count(x) > 0;
        if (in_lhs == in_rhs) continue;
        index = k;
        return in_lhs ? Join{e.lhs, e.rhs} : Join{e.rhs, e.lhs};
    }
    return std::nullopt;
}

class Search {
public:
    Search(const FreshnessContext& ctx, const Problem& p, const TermSpace& space,
           const std::function<bool(const Substitution&)>& visit)
        : visit_(visit) {
        VariableSet all = p.vars();
        all.merge(ctx.variables());
        std::vector<Item> items;
        for (const auto& c : p.constraints()) items.push_back(Item{c, constraint_vars(c)});
        for (const auto& [a, x] : ctx.entries()) {
            items.push_back(Item{Constraint::freshness(a, Term::var(x)), VariableSet{x}});
        }
        for (const auto& item : items) {
            if (item.vars.empty() && !holds(item.constraint, {})) dead_ = true;
        }
        choose_order(std::vector<Variable>(all.begin(), all.end()), items);

        const auto terms = ground_representatives(space);
        const std::size_t n = vars_.size();
        candidates_.resize(n);
        by_key_.resize(n);
        joins_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Constraint> local;
            std::vector<Item> joint;
            for (auto& item : closing_[i]) {
                if (item.vars.size() == 1) {
                    local.push_back(item.constraint);
                } else {
                    joint.push_back(item);
                }
            }
            for (const auto& t : terms) {
                const Substitution s = Substitution::single(vars_[i], t);
                if (std::all_of(local.begin(), local.end(), [&](const Constraint& c) { return holds(c, s); })) {
                    by_key_[i].emplace(ground_key(t), candidates_[i].size());
                    candidates_[i].push_back(t);
                }
            }
            closing_[i] = std::move(joint);
            std::size_t index = 0;
            joins_[i] = find_join(closing_[i], vars_[i], index);
        }
    }

    std::size_t run() {
        if (dead_) return 0;
        Substitution s;
        descend(0, s);
        return count_;
    }

private:
    std::vector<std::vector<Item>> close(const std::vector<Variable>& order, const std::vector<Item>& items) const {
        std::vector<std::vector<Item>> closing(order.size());
        for (const auto& item : items) {
            if (item.vars.empty()) continue;
            std::size_t last = 0;
            for (std::size_t i = 0; i < order.size(); ++i) {
                if (item.vars.count(order[i])) last = i;
            }
            closing[last].push_back(item);
        }
        return closing;
    }

    /// Picks the variable order under which most variables after the first
    /// get their candidates by matching.
    void choose_order(std::vector<Variable> order, const std::vector<Item>& items) {
        vars_ = order;
        closing_ = close(order, items);
        if (order.size() > 5) return;
        auto score = [&](const std::vector<std::vector<Item>>& closing, const std::vector<Variable>& vs) {
            std::size_t n = 0, index = 0;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                std::vector<Item> joint;
                for (const auto& item : closing[i]) {
                    if (item.vars.size() > 1) joint.push_back(item);
                }
                if (find_join(joint, vs[i], index)) ++n;
            }
            return n;
        };
        std::size_t best = score(closing_, vars_);
        while (std::next_permutation(order.begin(), order.end())) {
            auto closing = close(order, items);
            const std::size_t sc = score(closing, order);
            if (sc > best) {
                best = sc;
                vars_ = order;
                closing_ = std::move(closing);
            }
        }
    }

    bool try_candidate(std::size_t i, Substitution& s, const Term& t) {
        s.bind(vars_[i], t);
        const bool ok = std::all_of(closing_[i].begin(), closing_[i].end(),
                                    [&](const Item& item) { return holds(item.constraint, s); });
        bool go_on = true;
        if (ok) go_on = descend(i + 1, s);
        return go_on;
    }

    /// Returns false once the visitor asked to stop.
    bool descend(std::size_t i, Substitution& s) {
        if (i == vars_.size()) {
            ++count_;
            return visit_(s);
        }
        const Substitution saved = s;
        if (joins_[i]) {
            const Term pattern = s.apply(joins_[i]->pattern);
            const Term target = s.apply(joins_[i]->target);
            std::vector<std::size_t> found;
            std::unordered_set<std::size_t> seen;
            c_match({}, {{pattern, target}}, [&](const Substitution& m, const VariableSet&) {
                auto it = by_key_[i].find(ground_key(m.image_of(vars_[i])));
                if (it != by_key_[i].end() && seen.insert(it->second).second) found.push_back(it->second);
                return false;
            });
            for (std::size_t k : found) {
                if (!try_candidate(i, s, candidates_[i][k])) return false;
                s = saved;
            }
            return true;
        }
        for (const auto& t : candidates_[i]) {
            if (!try_candidate(i, s, t)) return false;
            s = saved;
        }
        return true;
    }

    const std::function<bool(const Substitution&)>& visit_;
    std::vector<Variable> vars_;
    std::vector<std::vector<Item>> closing_;
    std::vector<std::vector<Term>> candidates_;
    std::vector<std::unordered_map<std::string, std::size_t>> by_key_;
    std::vector<std::optional<Join>> joins_;
    bool dead_ = false;
    std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_ground_solution(const FreshnessContext& ctx, const Problem& p, const TermSpace& space,
                                     const std::function<bool(const Substitution&)>& visit) {
    return Search(ctx, p, space, visit).run();
}

std::vector<Solution> brute_force_unify(const FreshnessContext& ctx, const Problem& p, const TermSpace& space) {
    std::vector<Solution> out;
    for_each_ground_solution(ctx, p, space, [&](const Substitution& s) {
        out.push_back(Solution{{}, s});
        return true;
    });
    return out;
}

bool brute_force_solvable(const FreshnessContext& ctx, const Problem& p, const TermSpace& space) {
    return for_each_ground_solution(ctx, p, space, [](const Substitution&) { return false; }) > 0;
}

}  // namespace nomc
