#pragma once

// Seeded random generators shared by the unit tests and the acceptance suite.

#include <random>
#include <vector>

#include "nomc/problem.hpp"

namespace nomc::testing {

struct GeneratorConfig {
    std::vector<Atom> atoms{{"a"}, {"b"}, {"c"}, {"d"}};
    std::vector<Variable> variables{{"X"}, {"Y"}};
    std::vector<FunctionSymbol> symbols{{"*", Theory::Commutative}, {"+", Theory::Commutative}, {"f", Theory::Plain}};
    /// Leaves have depth 1.
    std::size_t max_depth = 3;
    std::size_t max_swaps = 2;
};

class Generator {
public:
    explicit Generator(std::uint64_t seed, GeneratorConfig config = {}) : rng_(seed), config_(std::move(config)) {}

    std::mt19937_64& rng() { return rng_; }
    const GeneratorConfig& config() const { return config_; }

    std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    const Atom& atom() { return config_.atoms[uniform(config_.atoms.size())]; }
    const Variable& variable() { return config_.variables[uniform(config_.variables.size())]; }

    Permutation permutation(std::size_t max_swaps) {
        std::vector<Swapping> swaps;
        const std::size_t n = uniform(max_swaps + 1);
        while (swaps.size() < n) {
            const Atom& a = atom();
            const Atom& b = atom();
            if (a != b) swaps.emplace_back(a, b);
        }
        return Permutation(std::move(swaps));
    }
    Permutation permutation() { return permutation(config_.max_swaps); }

    /// A well-formed term of depth at most `depth`.
    Term term(std::size_t depth, bool with_variables = true) {
        if (depth <= 1 || coin(0.3)) return leaf(with_variables);
        std::vector<FunctionSymbol> plain, comm;
        for (const auto& f : config_.symbols) (f.commutative() ? comm : plain).push_back(f);
        for (;;) {
            switch (uniform(4)) {
                case 0:
                    return Term::abstraction(atom(), term(depth - 1, with_variables));
                case 1:
                    return Term::pair(term(depth - 1, with_variables), term(depth - 1, with_variables));
                case 2:
                    if (plain.empty()) break;
                    return Term::app(plain[uniform(plain.size())], term(depth - 1, with_variables));
                case 3:
                    if (comm.empty()) break;
                    return Term::app(comm[uniform(comm.size())],
                                     Term::pair(term(depth - 1, with_variables), term(depth - 1, with_variables)));
            }
        }
    }
    Term term() { return term(config_.max_depth); }
    Term ground_term(std::size_t depth) { return term(depth, false); }

    Term leaf(bool with_variables) {
        const std::size_t kinds = with_variables ? 3 : 2;
        switch (uniform(kinds)) {
            case 0: return Term::unit();
            case 1: return Term::atom(atom());
            default: return Term::suspension(permutation(), variable());
        }
    }

    FreshnessContext context(std::size_t max_entries = 3) {
        FreshnessContext ctx;
        const std::size_t n = uniform(max_entries + 1);
        for (std::size_t i = 0; i < n; ++i) ctx.add(atom(), variable());
        return ctx;
    }

    /// One or two equations, sometimes a freshness constraint.
    Problem problem() {
        Problem p;
        const std::size_t equations = 1 + uniform(2);
        for (std::size_t i = 0; i < equations; ++i) p.add(Constraint::equation(term(), term()));
        if (coin(0.25)) p.add(Constraint::freshness(atom(), term()));
        return p;
    }

    /// Equations between a term and a variant of it with some subterms replaced
    /// by suspensions, so that many of them are solvable.
    Problem related_problem() {
        Problem p;
        const std::size_t equations = 1 + uniform(2);
        for (std::size_t i = 0; i < equations; ++i) {
            const Term s = term();
            p.add(Constraint::equation(holes(s, 0.2), holes(perturb(s), 0.3)));
        }
        if (coin(0.25)) p.add(Constraint::freshness(atom(), term(2)));
        return p;
    }

    /// Replaces proper subterms by suspensions with probability `rate` each.
    Term holes(const Term& t, double rate, bool root = true) {
        if (!root && coin(rate)) return Term::suspension(permutation(), variable());
        switch (t.kind()) {
            case Term::Kind::Pair:
                return Term::pair(holes(t.first(), rate, false), holes(t.second(), rate, false));
            case Term::Kind::App:
                if (t.symbol().commutative()) {
                    // Keep the argument a pair.
                    return Term::app(t.symbol(), Term::pair(holes(t.body().first(), rate, false),
                                                            holes(t.body().second(), rate, false)));
                }
                return Term::app(t.symbol(), holes(t.body(), rate, false));
            case Term::Kind::Abstraction:
                return Term::abstraction(t.atom_name(), holes(t.body(), rate, false));
            default:
                return t;
        }
    }

    /// Pair of a term and a variant of it, for biased equivalence testing:
    /// the variant is built by C-swaps and α-renaming so it is often equivalent.
    Term perturb(const Term& t) {
        switch (t.kind()) {
            case Term::Kind::Pair:
                return Term::pair(perturb(t.first()), perturb(t.second()));
            case Term::Kind::App: {
                Term arg = perturb(t.body());
                if (t.symbol().commutative() && arg.is(Term::Kind::Pair) && coin()) {
                    arg = Term::pair(arg.second(), arg.first());
                }
                return Term::app(t.symbol(), arg);
            }
            case Term::Kind::Abstraction: {
                const Atom& b = atom();
                Term body = perturb(t.body());
                if (b == t.atom_name() || !coin()) return Term::abstraction(t.atom_name(), body);
                return Term::abstraction(b, apply(Permutation::swap(t.atom_name(), b), body));
            }
            default:
                return t;
        }
    }

private:
    std::mt19937_64 rng_;
    GeneratorConfig config_;
};

}  // namespace nomc::testing
