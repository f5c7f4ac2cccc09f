#include "nomc/fixpoint.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "nomc/solution.hpp"
#include "nomc/unifier.hpp"

namespace nomc {

Cycle::Cycle(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("empty cycle");
    std::rotate(atoms_.begin(), std::min_element(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool Cycle::contains(const Atom& a) const { return std::find(atoms_.begin(), atoms_.end(), a) != atoms_.end(); }

Permutation Cycle::as_permutation() const {
    std::vector<Swapping> swaps;
    for (std::size_t i = 1; i < atoms_.size(); ++i) swaps.emplace_back(atoms_[0], atoms_[i]);
    return Permutation(std::move(swaps));
}

std::string to_string(const Cycle& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.atoms().size(); ++i) {
        if (i) out += " ";
        out += c.atoms()[i].name;
    }
    return out + ")";
}

std::vector<Cycle> cycle_decompose(const Permutation& p, bool with_fixed) {
    std::vector<Cycle> out;
    AtomSet seen;
    for (const auto& a : p.mentioned_atoms()) {
        if (seen.count(a)) continue;
        std::vector<Atom> orbit;
        Atom b = a;
        do {
            orbit.push_back(b);
            seen.insert(b);
            b = p.apply(b);
        } while (b != a);
        if (orbit.size() > 1 || with_fixed) out.emplace_back(std::move(orbit));
    }
    return out;
}

namespace {

std::string element_set_key(const std::vector<Term>& elements) {
    std::vector<std::string> keys;
    keys.reserve(elements.size());
    for (const auto& e : elements) keys.push_back(ground_key(e));
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const auto& k : keys) out += k + ";";
    return out;
}

/// The orbit seed, κ·seed, κ²·seed, ... up to the first repetition.
std::vector<Term> orbit(const Permutation& kappa, const Term& seed) {
    const std::string start = ground_key(seed);
    std::vector<Term> out{seed};
    for (Term t = apply(kappa, seed);; t = apply(kappa, t)) {
        if (ground_key(t) == start) break;
        out.push_back(t);
    }
    return out;
}

}  // namespace

bool same_pseudo_cycle(const PseudoCycle& x, const PseudoCycle& y) {
    return x.cycle == y.cycle && x.length() == y.length() && element_set_key(x.elements) == element_set_key(y.elements);
}

std::string to_string(const PseudoCycle& pc) {
    std::string out = "(";
    for (std::size_t i = 0; i < pc.elements.size(); ++i) {
        if (i) out += " ";
        const bool wrap = pc.elements[i].is(Term::Kind::App);
        out += wrap ? "(" + to_string(pc.elements[i]) + ")" : to_string(pc.elements[i]);
    }
    return out + ")";
}

PseudoCycle trivial_pseudo_cycle(const Cycle& c) {
    PseudoCycle pc{c, {}, 0};
    for (const auto& a : c.atoms()) pc.elements.push_back(Term::atom(a));
    return pc;
}

std::vector<PseudoCycle> first_instance_pseudo_cycles(const PseudoCycle& pc, const FunctionSymbol& star) {
    if (!star.commutative()) throw std::invalid_argument("first instance needs a commutative symbol");
    const std::size_t k = pc.length();
    const Permutation kappa = pc.cycle.as_permutation();
    std::vector<PseudoCycle> out;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        const std::size_t len = 2 * d == k ? k / 2 : k;
        PseudoCycle next{pc.cycle, {}, pc.level + 1};
        for (std::size_t i = 0; i < len; ++i) {
            next.elements.push_back(Term::app(star, Term::pair(pc.elements[i], pc.elements[(i + d) % k])));
        }
        bool ok = true;
        std::unordered_set<std::string> keys;
        for (std::size_t i = 0; i < len && ok; ++i) {
            ok = keys.insert(ground_key(next.elements[i])).second &&
                 alpha_c_equiv({}, apply(kappa, next.elements[i]), next.elements[(i + 1) % len]);
        }
        if (ok) out.push_back(std::move(next));
    }
    return out;
}

namespace {

/// Level-by-level generator shared by the two enumerators.
class PseudoCycleGenerator {
public:
    PseudoCycleGenerator(const Cycle& c, std::vector<FunctionSymbol> signature)
        : kappa_(c.as_permutation()), signature_(std::move(signature)) {
        signature_.erase(std::remove_if(signature_.begin(), signature_.end(),
                                        [](const FunctionSymbol& f) { return !f.commutative(); }),
                         signature_.end());
        add(trivial_pseudo_cycle(c), {});
        frontier_end_ = nodes_.size();
    }

    const std::vector<PseudoCycle>& all() const { return pcs_; }

    /// Indices of the pseudo-cycles produced by the next level.
    std::pair<std::size_t, std::size_t> next_level() {
        const std::size_t begin = frontier_begin_;
        const std::size_t end = frontier_end_;
        for (std::size_t b = begin; b < end; ++b) {
            for (const auto& star : signature_) {
                std::vector<std::size_t> partners = nodes_[b].ancestors;
                partners.push_back(b);
                for (std::size_t c : partners) {
                    const std::size_t reach = c == b ? pcs_[c].length() / 2 : pcs_[c].length() - 1;
                    for (std::size_t s = 0; s <= reach; ++s) {
                        Term seed = Term::app(star, Term::pair(pcs_[b].elements[0], pcs_[c].elements[s]));
                        PseudoCycle pc{pcs_[b].cycle, orbit(kappa_, seed), pcs_[b].level + 1};
                        auto ancestors = nodes_[b].ancestors;
                        ancestors.push_back(b);
                        add(std::move(pc), std::move(ancestors));
                    }
                }
            }
        }
        frontier_begin_ = end;
        frontier_end_ = nodes_.size();
        return {frontier_begin_, frontier_end_};
    }

private:
    struct Node {
        std::vector<std::size_t> ancestors;
    };

    void add(PseudoCycle pc, std::vector<std::size_t> ancestors) {
        if (!seen_.insert(element_set_key(pc.elements)).second) return;
        pcs_.push_back(std::move(pc));
        nodes_.push_back(Node{std::move(ancestors)});
    }

    Permutation kappa_;
    std::vector<FunctionSymbol> signature_;
    std::vector<PseudoCycle> pcs_;
    std::vector<Node> nodes_;
    std::unordered_set<std::string> seen_;
    std::size_t frontier_begin_ = 0;
    std::size_t frontier_end_ = 0;
};

}  // namespace

std::vector<PseudoCycle> enumerate_pseudo_cycles(const Cycle& c, const std::vector<FunctionSymbol>& signature,
                                                 std::size_t max_depth) {
    PseudoCycleGenerator gen(c, signature);
    for (std::size_t level = 0; level < max_depth; ++level) gen.next_level();
    return gen.all();
}

std::vector<Term> enumerate_unitary_pseudo_cycles(const Cycle& c, const std::vector<FunctionSymbol>& signature,
                                                  const EnumerationBounds& bounds) {
    std::vector<Term> out;
    if (bounds.max_count == 0) return out;
    PseudoCycleGenerator gen(c, signature);
    auto collect = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end && out.size() < bounds.max_count; ++i) {
            if (gen.all()[i].unitary()) out.push_back(gen.all()[i].elements[0]);
        }
    };
    collect(0, gen.all().size());
    for (std::size_t level = 0; level < bounds.max_depth && out.size() < bounds.max_count; ++level) {
        auto [begin, end] = gen.next_level();
        if (begin == end) break;
        collect(begin, end);
    }
    return out;
}

std::vector<Solution> solve_fixpoint_equation(const FreshnessContext& ctx, const Permutation& p, const Variable& x,
                                              const std::vector<FunctionSymbol>& signature,
                                              const EnumerationBounds& bounds) {
    const AtomSet dom = p.domain();
    std::vector<Solution> out;
    Solution trivial{ctx, {}};
    for (const auto& a : dom) trivial.ctx.add(a, x);
    out.push_back(std::move(trivial));

    const AtomSet required = ctx.atoms_fresh_for(x);
    std::size_t emitted = 0;
    for (const auto& kappa : cycle_decompose(p)) {
        const bool admissible = std::none_of(kappa.atoms().begin(), kappa.atoms().end(),
                                             [&](const Atom& a) { return required.count(a) != 0; });
        if (!admissible) continue;
        FreshnessContext extended = ctx;
        for (const auto& a : dom) {
            if (!kappa.contains(a)) extended.add(a, x);
        }
        EnumerationBounds remaining = bounds;
        remaining.max_count = bounds.max_count - emitted;
        for (auto& t : enumerate_unitary_pseudo_cycles(kappa, signature, remaining)) {
            out.push_back(Solution{extended, Substitution::single(x, std::move(t))});
            ++emitted;
        }
        if (emitted >= bounds.max_count) break;
    }
    return out;
}

std::vector<Solution> combine_leaf_solutions(const Triple& leaf, const std::vector<FunctionSymbol>& signature,
                                             const EnumerationBounds& bounds) {
    if (!leaf.problem.only_fixpoint_equations()) {
        throw std::invalid_argument("combine_leaf_solutions: leaf has non-fixpoint constraints");
    }
    std::vector<Variable> order;
    std::map<Variable, std::vector<Permutation>> equations;
    for (const auto& c : leaf.problem.constraints()) {
        auto fp = as_fixpoint(c);
        if (!equations.count(fp->var)) order.push_back(fp->var);
        equations[fp->var].push_back(fp->perm);
    }

    struct Candidate {
        FreshnessContext ctx;
        std::optional<Term> image;
    };
    std::vector<std::vector<Candidate>> candidates;
    for (const auto& x : order) {
        const auto& perms = equations[x];
        std::vector<Candidate> list;
        Candidate trivial{leaf.ctx, std::nullopt};
        for (const auto& p : perms) {
            for (const auto& a : p.domain()) trivial.ctx.add(a, x);
        }
        list.push_back(std::move(trivial));
        std::unordered_set<std::string> seen;
        for (const auto& p : perms) {
            auto sols = solve_fixpoint_equation(leaf.ctx, p, x, signature, bounds);
            for (std::size_t i = 1; i < sols.size(); ++i) {
                const Term t = sols[i].subst.image_of(x);
                if (!seen.insert(ground_key(t)).second) continue;
                const bool fixes_all = std::all_of(perms.begin(), perms.end(), [&](const Permutation& q) {
                    return alpha_c_equiv(sols[i].ctx, apply(q, t), t);
                });
                if (!fixes_all) continue;
                const auto required = leaf.ctx.atoms_fresh_for(x);
                const bool fresh = std::all_of(required.begin(), required.end(),
                                               [&](const Atom& a) { return check_fresh(sols[i].ctx, a, t); });
                if (!fresh) continue;
                FreshnessContext ctx = sols[i].ctx;
                for (const auto& q : perms) {
                    for (const auto& a : q.domain()) {
                        if (!term_atoms(t).count(a)) ctx.add(a, x);
                    }
                }
                list.push_back(Candidate{std::move(ctx), t});
            }
        }
        candidates.push_back(std::move(list));
    }

    std::vector<Solution> out;
    std::vector<std::size_t> pick(order.size(), 0);
    for (;;) {
        Solution sol{leaf.ctx, {}};
        Substitution lambda;
        for (std::size_t v = 0; v < order.size(); ++v) {
            const auto& cand = candidates[v][pick[v]];
            sol.ctx.add_all(cand.ctx);
            if (cand.image) lambda.bind(order[v], *cand.image);
        }
        sol.subst = compose(leaf.subst, lambda);
        if (auto check = check_solution(leaf, sol); !check) {
            throw InvariantViolation("combined solution " + to_string(sol) + " rejected: " + check.failure);
        }
        out.push_back(std::move(sol));

        std::size_t v = 0;
        while (v < order.size() && ++pick[v] == candidates[v].size()) pick[v++] = 0;
        if (v == order.size()) break;
    }
    return out;
}

std::vector<FunctionSymbol> commutative_signature(const Problem& p) {
    std::vector<FunctionSymbol> out;
    for (const auto& f : p.symbols()) {
        if (f.commutative()) out.push_back(f);
    }
    if (out.empty()) out.push_back(FunctionSymbol{"*", Theory::Commutative});
    return out;
}

}  // namespace nomc
