#include "nomc/core.hpp"

#include <algorithm>
#include <cassert>
#include <variant>

namespace nomc {

// ---------------------------------------------------------------------------
// Permutations

Swapping::Swapping(Atom first, Atom second) : first_(std::move(first)), second_(std::move(second)) {
    if (first_ == second_) {
        throw std::invalid_argument("swapping of an atom with itself: " + first_.name);
    }
}

Atom Swapping::apply(const Atom& a) const {
    if (a == first_) return second_;
    if (a == second_) return first_;
    return a;
}

bool operator==(const Swapping& x, const Swapping& y) {
    return (x.first_ == y.first_ && x.second_ == y.second_) ||
           (x.first_ == y.second_ && x.second_ == y.first_);
}

Permutation Permutation::swap(Atom a, Atom b) {
    return Permutation({Swapping(std::move(a), std::move(b))});
}

Atom Permutation::apply(const Atom& a) const {
    Atom image = a;
    for (const auto& s : swaps_) image = s.apply(image);
    return image;
}

Permutation Permutation::inverse() const {
    return Permutation(std::vector<Swapping>(swaps_.rbegin(), swaps_.rend()));
}

AtomSet Permutation::mentioned_atoms() const {
    AtomSet out;
    for (const auto& s : swaps_) {
        out.insert(s.first());
        out.insert(s.second());
    }
    return out;
}

AtomSet Permutation::domain() const {
    AtomSet out;
    for (const auto& a : mentioned_atoms()) {
        if (apply(a) != a) out.insert(a);
    }
    return out;
}

Permutation concat(const Permutation& first, const Permutation& second) {
    std::vector<Swapping> swaps = first.swaps();
    swaps.insert(swaps.end(), second.swaps().begin(), second.swaps().end());
    return Permutation(std::move(swaps));
}

AtomSet difference_set(const Permutation& p, const Permutation& q) {
    // Outside the mentioned atoms both act as the identity.
    AtomSet candidates = p.mentioned_atoms();
    candidates.merge(q.mentioned_atoms());
    AtomSet out;
    for (const auto& a : candidates) {
        if (p.apply(a) != q.apply(a)) out.insert(a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Terms

namespace {
struct AbstractionData {
    Atom binder;
    Term body;
};
struct PairData {
    Term first;
    Term second;
};
struct AppData {
    FunctionSymbol symbol;
    Term argument;
};
struct SuspensionData {
    Permutation perm;
    Variable var;
};
struct UnitData {};
}  // namespace

struct Term::Node {
    std::variant<UnitData, Atom, AbstractionData, PairData, AppData, SuspensionData> data;
};

Term Term::unit() {
    static const Term u(std::make_shared<const Node>(Node{UnitData{}}));
    return u;
}

Term Term::atom(Atom a) { return Term(std::make_shared<const Node>(Node{std::move(a)})); }

Term Term::abstraction(Atom binder, Term body) {
    return Term(std::make_shared<const Node>(Node{AbstractionData{std::move(binder), std::move(body)}}));
}

Term Term::pair(Term first, Term second) {
    return Term(std::make_shared<const Node>(Node{PairData{std::move(first), std::move(second)}}));
}

Term Term::app(FunctionSymbol symbol, Term argument) {
    return Term(std::make_shared<const Node>(Node{AppData{std::move(symbol), std::move(argument)}}));
}

Term Term::suspension(Permutation perm, Variable var) {
    return Term(std::make_shared<const Node>(Node{SuspensionData{std::move(perm), std::move(var)}}));
}

Term::Kind Term::kind() const { return static_cast<Kind>(node_->data.index()); }

const Atom& Term::atom_name() const {
    if (auto* a = std::get_if<Atom>(&node_->data)) return *a;
    return std::get<AbstractionData>(node_->data).binder;
}

const Term& Term::body() const {
    if (auto* abs = std::get_if<AbstractionData>(&node_->data)) return abs->body;
    return std::get<AppData>(node_->data).argument;
}

const Term& Term::first() const { return std::get<PairData>(node_->data).first; }
const Term& Term::second() const { return std::get<PairData>(node_->data).second; }
const FunctionSymbol& Term::symbol() const { return std::get<AppData>(node_->data).symbol; }
const Permutation& Term::permutation() const { return std::get<SuspensionData>(node_->data).perm; }
const Variable& Term::variable() const { return std::get<SuspensionData>(node_->data).var; }

bool operator==(const Term& s, const Term& t) {
    if (s.node_ == t.node_) return true;
    if (s.kind() != t.kind()) return false;
    switch (s.kind()) {
        case Term::Kind::Unit:
            return true;
        case Term::Kind::Atom:
            return s.atom_name() == t.atom_name();
        case Term::Kind::Abstraction:
            return s.atom_name() == t.atom_name() && s.body() == t.body();
        case Term::Kind::Pair:
            return s.first() == t.first() && s.second() == t.second();
        case Term::Kind::App:
            return s.symbol() == t.symbol() && s.body() == t.body();
        case Term::Kind::Suspension:
            return s.variable() == t.variable() && s.permutation() == t.permutation();
    }
    return false;
}

Term commutative_app(const std::string& symbol, Term left, Term right) {
    return Term::app(FunctionSymbol{symbol, Theory::Commutative}, Term::pair(std::move(left), std::move(right)));
}

Term apply(const Permutation& p, const Term& t) {
    if (p.is_nil()) return t;
    switch (t.kind()) {
        case Term::Kind::Unit:
            return t;
        case Term::Kind::Atom:
            return Term::atom(p.apply(t.atom_name()));
        case Term::Kind::Abstraction:
            return Term::abstraction(p.apply(t.atom_name()), apply(p, t.body()));
        case Term::Kind::Pair:
            return Term::pair(apply(p, t.first()), apply(p, t.second()));
        case Term::Kind::App:
            return Term::app(t.symbol(), apply(p, t.body()));
        case Term::Kind::Suspension:
            return Term::suspension(concat(t.permutation(), p), t.variable());
    }
    return t;
}

std::size_t term_size(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Abstraction:
        case Term::Kind::App:
            return 1 + term_size(t.body());
        case Term::Kind::Pair:
            return 1 + term_size(t.first()) + term_size(t.second());
        default:
            return 1;
    }
}

std::size_t term_depth(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Abstraction:
            return 1 + term_depth(t.body());
        case Term::Kind::App: {
            // f (s, t) counts as one binary node.
            const Term& arg = t.body();
            if (arg.is(Term::Kind::Pair)) return 1 + std::max(term_depth(arg.first()), term_depth(arg.second()));
            return 1 + term_depth(arg);
        }
        case Term::Kind::Pair:
            return 1 + std::max(term_depth(t.first()), term_depth(t.second()));
        default:
            return 1;
    }
}

void collect_vars(const Term& t, VariableSet& out) {
    switch (t.kind()) {
        case Term::Kind::Abstraction:
        case Term::Kind::App:
            collect_vars(t.body(), out);
            break;
        case Term::Kind::Pair:
            collect_vars(t.first(), out);
            collect_vars(t.second(), out);
            break;
        case Term::Kind::Suspension:
            out.insert(t.variable());
            break;
        default:
            break;
    }
}

VariableSet term_vars(const Term& t) {
    VariableSet out;
    collect_vars(t, out);
    return out;
}

void collect_atoms(const Term& t, AtomSet& out) {
    switch (t.kind()) {
        case Term::Kind::Atom:
            out.insert(t.atom_name());
            break;
        case Term::Kind::Abstraction:
            out.insert(t.atom_name());
            collect_atoms(t.body(), out);
            break;
        case Term::Kind::App:
            collect_atoms(t.body(), out);
            break;
        case Term::Kind::Pair:
            collect_atoms(t.first(), out);
            collect_atoms(t.second(), out);
            break;
        case Term::Kind::Suspension:
            out.merge(t.permutation().mentioned_atoms());
            break;
        case Term::Kind::Unit:
            break;
    }
}

AtomSet term_atoms(const Term& t) {
    AtomSet out;
    collect_atoms(t, out);
    return out;
}

namespace {
void collect_symbols(const Term& t, std::set<FunctionSymbol>& out) {
    switch (t.kind()) {
        case Term::Kind::App:
            out.insert(t.symbol());
            [[fallthrough]];
        case Term::Kind::Abstraction:
            collect_symbols(t.body(), out);
            break;
        case Term::Kind::Pair:
            collect_symbols(t.first(), out);
            collect_symbols(t.second(), out);
            break;
        default:
            break;
    }
}

const Term* find_ill_formed(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::App:
            if (t.symbol().commutative() && !t.body().is(Term::Kind::Pair)) return &t;
            return find_ill_formed(t.body());
        case Term::Kind::Abstraction:
            return find_ill_formed(t.body());
        case Term::Kind::Pair:
            if (auto* bad = find_ill_formed(t.first())) return bad;
            return find_ill_formed(t.second());
        default:
            return nullptr;
    }
}
}  // namespace

std::set<FunctionSymbol> term_symbols(const Term& t) {
    std::set<FunctionSymbol> out;
    collect_symbols(t, out);
    return out;
}

bool is_ground(const Term& t) { return term_vars(t).empty(); }

bool is_well_formed(const Term& t) { return find_ill_formed(t) == nullptr; }

void require_well_formed(const Term& t) {
    if (const Term* bad = find_ill_formed(t)) {
        throw WellFormednessError("commutative symbol '" + bad->symbol().name +
                                  "' applied to a non-pair in " + to_string(*bad));
    }
}

// ---------------------------------------------------------------------------
// Substitutions

Substitution Substitution::single(Variable x, Term t) {
    Substitution s;
    s.bind(x, std::move(t));
    return s;
}

void Substitution::bind(const Variable& x, Term t) {
    if (t.is(Term::Kind::Suspension) && t.variable() == x && t.permutation().is_nil()) {
        bindings_.erase(x);
        return;
    }
    bindings_.insert_or_assign(x, std::move(t));
}

Term Substitution::image_of(const Variable& x) const {
    auto it = bindings_.find(x);
    return it == bindings_.end() ? Term::var(x) : it->second;
}

VariableSet Substitution::domain() const {
    VariableSet out;
    for (const auto& [x, _] : bindings_) out.insert(x);
    return out;
}

VariableSet Substitution::image_vars() const {
    VariableSet out;
    for (const auto& [_, t] : bindings_) collect_vars(t, out);
    return out;
}

Term Substitution::apply(const Term& t) const {
    if (bindings_.empty()) return t;
    switch (t.kind()) {
        case Term::Kind::Unit:
        case Term::Kind::Atom:
            return t;
        case Term::Kind::Abstraction:
            return Term::abstraction(t.atom_name(), apply(t.body()));
        case Term::Kind::Pair:
            return Term::pair(apply(t.first()), apply(t.second()));
        case Term::Kind::App:
            return Term::app(t.symbol(), apply(t.body()));
        case Term::Kind::Suspension: {
            auto it = bindings_.find(t.variable());
            if (it == bindings_.end()) return t;
            return nomc::apply(t.permutation(), it->second);
        }
    }
    return t;
}

Substitution compose(const Substitution& first, const Substitution& second) {
    Substitution out;
    for (const auto& [x, t] : first.bindings()) out.bind(x, second.apply(t));
    for (const auto& [x, t] : second.bindings()) {
        if (!first.binds(x)) out.bind(x, t);
    }
    return out;
}

bool is_idempotent(const Substitution& s) {
    for (const auto& [x, t] : s.bindings()) {
        if (!(s.apply(t) == t)) return false;
    }
    return true;
}

}  // namespace nomc
