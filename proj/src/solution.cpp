#include "nomc/solution.hpp"

#include <map>

namespace nomc {

namespace {

class Matcher {
public:
    Matcher(const FreshnessContext& ctx, const MatchAcceptor& accept) : ctx_(ctx), accept_(accept) {}

    bool run(std::vector<MatchPair> work, std::map<Variable, Term> lambda) {
        using K = Term::Kind;
        while (!work.empty()) {
            auto [p, t] = std::move(work.back());
            work.pop_back();
            switch (p.kind()) {
                case K::Suspension: {
                    auto it = lambda.find(p.variable());
                    if (it == lambda.end()) {
                        lambda.emplace(p.variable(), apply(p.permutation().inverse(), t));
                    } else if (!alpha_c_equiv(ctx_, apply(p.permutation(), it->second), t)) {
                        return false;
                    }
                    break;
                }
                case K::Unit:
                    if (!t.is(K::Unit)) return false;
                    break;
                case K::Atom:
                    if (!t.is(K::Atom) || t.atom_name() != p.atom_name()) return false;
                    break;
                case K::Pair:
                    if (!t.is(K::Pair)) return false;
                    work.emplace_back(p.first(), t.first());
                    work.emplace_back(p.second(), t.second());
                    break;
                case K::Abstraction: {
                    if (!t.is(K::Abstraction)) return false;
                    const Atom& a = p.atom_name();
                    const Atom& b = t.atom_name();
                    if (a == b) {
                        work.emplace_back(p.body(), t.body());
                    } else {
                        if (!check_fresh(ctx_, a, t.body())) return false;
                        work.emplace_back(p.body(), apply(Permutation::swap(a, b), t.body()));
                    }
                    break;
                }
                case K::App: {
                    if (!t.is(K::App) || t.symbol() != p.symbol()) return false;
                    const Term& u = p.body();
                    const Term& v = t.body();
                    if (p.symbol().commutative() && u.is(K::Pair) && v.is(K::Pair)) {
                        auto crossed = work;
                        crossed.emplace_back(u.first(), v.second());
                        crossed.emplace_back(u.second(), v.first());
                        work.emplace_back(u.first(), v.first());
                        work.emplace_back(u.second(), v.second());
                        if (run(std::move(work), lambda)) return true;
                        work = std::move(crossed);
                    } else {
                        work.emplace_back(u, v);
                    }
                    break;
                }
            }
        }
        Substitution s;
        VariableSet matched;
        for (auto& [x, t] : lambda) {
            s.bind(x, t);
            matched.insert(x);
        }
        if (accept_ && !accept_(s, matched)) return false;
        result_ = std::move(s);
        return true;
    }

    std::optional<Substitution> result() { return std::move(result_); }

private:
    const FreshnessContext& ctx_;
    const MatchAcceptor& accept_;
    std::optional<Substitution> result_;
};

}  // namespace

std::optional<Substitution> c_match(const FreshnessContext& ctx, const std::vector<MatchPair>& pairs,
                                    const MatchAcceptor& accept) {
    Matcher m(ctx, accept);
    if (!m.run(pairs, {})) return std::nullopt;
    return m.result();
}

SolutionCheck check_solution(const Triple& t, const Solution& sol) {
    SolutionCheck out;
    const auto& nabla = sol.ctx;
    const auto& sigma = sol.subst;

    for (const auto& [a, x] : t.ctx.entries()) {
        if (!check_fresh(nabla, a, sigma.image_of(x))) {
            out.context = false;
            out.failure = "context: " + a.name + "#" + x.name;
            return out;
        }
    }
    for (const auto& c : t.problem.constraints()) {
        if (c.is_freshness()) {
            const auto& f = c.as_freshness();
            if (!check_fresh(nabla, f.atom, sigma.apply(f.term))) {
                out.freshness = false;
                out.failure = "freshness: " + to_string(c);
                return out;
            }
        } else {
            const auto& e = c.as_equation();
            if (!alpha_c_equiv(nabla, sigma.apply(e.lhs), sigma.apply(e.rhs))) {
                out.equations = false;
                out.failure = "equation: " + to_string(c);
                return out;
            }
        }
    }

    VariableSet vars = t.subst.domain();
    vars.merge(sigma.domain());
    vars.merge(t.subst.image_vars());
    std::vector<MatchPair> pairs;
    for (const auto& x : vars) pairs.emplace_back(t.subst.image_of(x), sigma.image_of(x));
    if (!c_match(nabla, pairs)) {
        out.instance = false;
        out.failure = "not an instance of " + to_string(t.subst);
    }
    return out;
}

SolutionCheck check_solution(const FreshnessContext& ctx, const Problem& p, const Solution& sol) {
    return check_solution(Triple{ctx, {}, p}, sol);
}

bool solution_leq(const Solution& general, const Solution& instance, const VariableSet& vars) {
    std::vector<MatchPair> pairs;
    for (const auto& x : vars) pairs.emplace_back(general.subst.image_of(x), instance.subst.image_of(x));
    // Variables left unbound by the matcher are sent to <>, which is fresh
    // for every atom, so only bound ones constrain ∇'.
    auto respects_context = [&](const Substitution& lambda, const VariableSet& matched) {
        for (const auto& [a, z] : general.ctx.entries()) {
            if (matched.count(z) && !check_fresh(instance.ctx, a, lambda.image_of(z))) return false;
        }
        return true;
    };
    return c_match(instance.ctx, pairs, respects_context).has_value();
}

}  // namespace nomc
