#include "nomc/relations.hpp"

#include <stdexcept>
#include <vector>

namespace nomc {

FreshnessContext FreshnessContext::restrict_to(const Variable& x) const {
    FreshnessContext out;
    for (const auto& [a, y] : entries_) {
        if (y == x) out.add(a, y);
    }
    return out;
}

AtomSet FreshnessContext::atoms_fresh_for(const Variable& x) const {
    AtomSet out;
    for (const auto& [a, y] : entries_) {
        if (y == x) out.insert(a);
    }
    return out;
}

AtomSet FreshnessContext::domain() const {
    AtomSet out;
    for (const auto& [a, _] : entries_) out.insert(a);
    return out;
}

VariableSet FreshnessContext::variables() const {
    VariableSet out;
    for (const auto& [_, x] : entries_) out.insert(x);
    return out;
}

FreshnessContext operator|(FreshnessContext lhs, const FreshnessContext& rhs) {
    lhs.add_all(rhs);
    return lhs;
}

std::string to_string(const FreshnessContext& ctx) {
    std::string out = "{";
    bool first = true;
    for (const auto& [a, x] : ctx.entries()) {
        if (!first) out += ", ";
        first = false;
        out += a.name + "#" + x.name;
    }
    return out + "}";
}

bool check_fresh(const FreshnessContext& ctx, const Atom& a, const Term& t, const RuleTrace& trace) {
    auto note = [&](std::string_view rule) {
        if (trace) trace(rule);
    };
    switch (t.kind()) {
        case Term::Kind::Unit:
            note("#<>");
            return true;
        case Term::Kind::Atom:
            if (t.atom_name() == a) return false;
            note("#atom");
            return true;
        case Term::Kind::App:
            note("#app");
            return check_fresh(ctx, a, t.body(), trace);
        case Term::Kind::Abstraction:
            if (t.atom_name() == a) {
                note("#a[a]");
                return true;
            }
            note("#a[b]");
            return check_fresh(ctx, a, t.body(), trace);
        case Term::Kind::Suspension:
            note("#var");
            return ctx.contains(t.permutation().inverse().apply(a), t.variable());
        case Term::Kind::Pair:
            note("#pair");
            return check_fresh(ctx, a, t.first(), trace) && check_fresh(ctx, a, t.second(), trace);
    }
    return false;
}

namespace {

class EquivalenceChecker {
public:
    EquivalenceChecker(const FreshnessContext& ctx, bool modulo_c, const RuleTrace& trace)
        : ctx_(ctx), modulo_c_(modulo_c), trace_(trace) {}

    bool equiv(const Term& s, const Term& t) const {
        if (s.kind() != t.kind()) return false;
        switch (s.kind()) {
            case Term::Kind::Unit:
                note("=<>");
                return true;
            case Term::Kind::Atom:
                if (s.atom_name() != t.atom_name()) return false;
                note("=atom");
                return true;
            case Term::Kind::Pair:
                note("=pair");
                return equiv(s.first(), t.first()) && equiv(s.second(), t.second());
            case Term::Kind::Abstraction:
                if (s.atom_name() == t.atom_name()) {
                    note("=[aa]");
                    return equiv(s.body(), t.body());
                }
                note("=[ab]");
                return equiv(s.body(), apply(Permutation::swap(s.atom_name(), t.atom_name()), t.body())) &&
                       check_fresh(ctx_, s.atom_name(), t.body(), trace_);
            case Term::Kind::App:
                return equiv_app(s, t);
            case Term::Kind::Suspension: {
                if (s.variable() != t.variable()) return false;
                note("=var");
                for (const auto& a : difference_set(s.permutation(), t.permutation())) {
                    if (!ctx_.contains(a, s.variable())) return false;
                }
                return true;
            }
        }
        return false;
    }

private:
    bool equiv_app(const Term& s, const Term& t) const {
        if (s.symbol() != t.symbol()) return false;
        const Term& u = s.body();
        const Term& v = t.body();
        if (!modulo_c_ || !s.symbol().commutative()) {
            note("=app");
            return equiv(u, v);
        }
        const bool u_pair = u.is(Term::Kind::Pair);
        const bool v_pair = v.is(Term::Kind::Pair);
        if (u_pair && v_pair) {
            note("=C");
            return (equiv(u.first(), v.first()) && equiv(u.second(), v.second())) ||
                   (equiv(u.first(), v.second()) && equiv(u.second(), v.first()));
        }
        if (!u_pair && !v_pair) {
            note("=app");
            return equiv(u, v);
        }
        return false;
    }

    void note(std::string_view rule) const {
        if (trace_) trace_(rule);
    }

    const FreshnessContext& ctx_;
    bool modulo_c_;
    const RuleTrace& trace_;
};

}  // namespace

bool alpha_c_equiv(const FreshnessContext& ctx, const Term& s, const Term& t, const RuleTrace& trace) {
    return EquivalenceChecker(ctx, true, trace).equiv(s, t);
}

bool alpha_equiv(const FreshnessContext& ctx, const Term& s, const Term& t, const RuleTrace& trace) {
    return EquivalenceChecker(ctx, false, trace).equiv(s, t);
}

namespace {
void ground_key(const Term& t, std::vector<Atom>& binders, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Unit:
            out += "<>";
            return;
        case Term::Kind::Atom:
            for (std::size_t i = binders.size(); i-- > 0;) {
                if (binders[i] == t.atom_name()) {
                    out += "^" + std::to_string(binders.size() - 1 - i);
                    return;
                }
            }
            out += t.atom_name().name;
            return;
        case Term::Kind::Abstraction:
            binders.push_back(t.atom_name());
            out += "[";
            ground_key(t.body(), binders, out);
            out += "]";
            binders.pop_back();
            return;
        case Term::Kind::Pair:
            out += "(";
            ground_key(t.first(), binders, out);
            out += ",";
            ground_key(t.second(), binders, out);
            out += ")";
            return;
        case Term::Kind::App: {
            const Term& arg = t.body();
            out += t.symbol().name;
            if (t.symbol().commutative() && arg.is(Term::Kind::Pair)) {
                std::string l, r;
                ground_key(arg.first(), binders, l);
                ground_key(arg.second(), binders, r);
                if (r < l) std::swap(l, r);
                out += "{" + l + "," + r + "}";
            } else {
                out += "(";
                ground_key(arg, binders, out);
                out += ")";
            }
            return;
        }
        case Term::Kind::Suspension:
            throw std::invalid_argument("ground_key: term has variable " + t.variable().name);
    }
}
}  // namespace

std::string ground_key(const Term& t) {
    std::vector<Atom> binders;
    std::string out;
    ground_key(t, binders, out);
    return out;
}

}  // namespace nomc
