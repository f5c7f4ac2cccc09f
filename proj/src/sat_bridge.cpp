#include "nomc/sat_bridge.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nomc/fixpoint.hpp"
#include "nomc/unifier.hpp"

namespace nomc {

std::vector<std::string> OneInThreeInstance::variables() const {
    std::vector<std::string> out;
    for (const auto& c : clauses) {
        for (const auto* name : {&c.p, &c.q, &c.r}) {
            if (std::find(out.begin(), out.end(), *name) == out.end()) out.push_back(*name);
        }
    }
    return out;
}

namespace {
bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}
}  // namespace

OneInThreeInstance parse_instance(std::string_view text) {
    OneInThreeInstance inst;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> names;
        for (std::string w; words >> w;) names.push_back(w);
        if (names.empty()) continue;
        if (names.size() != 3) throw SatFormatError(number, "expected 3 variables, found " + std::to_string(names.size()));
        for (const auto& n : names) {
            if (!is_identifier(n)) throw SatFormatError(number, "bad variable name '" + n + "'");
        }
        inst.clauses.push_back(Clause{names[0], names[1], names[2]});
    }
    return inst;
}

FunctionSymbol sat_symbol() { return FunctionSymbol{"+", Theory::Commutative}; }
Variable sat_variable(const std::string& p) { return Variable{"X_" + p}; }
Variable padding_variable(std::size_t clause_index) { return Variable{"Y_" + std::to_string(clause_index + 1)}; }

Problem encode(const OneInThreeInstance& inst) {
    const FunctionSymbol plus = sat_symbol();
    auto op = [&](Term l, Term r) { return Term::app(plus, Term::pair(std::move(l), std::move(r))); };
    const Term a = atom_term("a");
    const Term b = atom_term("b");
    const Term target = op(op(op(b, b), a), op(op(b, a), b));
    Problem p;
    for (std::size_t i = 0; i < inst.clauses.size(); ++i) {
        const auto& c = inst.clauses[i];
        Term lhs = op(op(op(Term::var(sat_variable(c.p)), Term::var(sat_variable(c.q))), Term::var(sat_variable(c.r))),
                      Term::var(padding_variable(i)));
        p.add(Constraint::equation(std::move(lhs), target));
    }
    return p;
}

Valuation decode(const Solution& sol, const OneInThreeInstance& inst) {
    Valuation v;
    const Term a = atom_term("a");
    const Term b = atom_term("b");
    for (const auto& p : inst.variables()) {
        const Term image = sol.subst.image_of(sat_variable(p));
        if (image == a) {
            v[p] = true;
        } else if (image == b) {
            v[p] = false;
        } else {
            throw NonGroundAssignment(sat_variable(p).name + " is bound to " + to_string(image));
        }
    }
    return v;
}

bool exactly_one_per_clause(const OneInThreeInstance& inst, const Valuation& v) {
    return std::all_of(inst.clauses.begin(), inst.clauses.end(), [&](const Clause& c) {
        return v.at(c.p) + v.at(c.q) + v.at(c.r) == 1;
    });
}

std::optional<Valuation> brute_force_one_in_three(const OneInThreeInstance& inst) {
    const auto vars = inst.variables();
    for (unsigned long mask = 0; mask < (1ul << vars.size()); ++mask) {
        Valuation v;
        for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = (mask >> i) & 1u;
        if (exactly_one_per_clause(inst, v)) return v;
    }
    return std::nullopt;
}

SatOutcome solve_one_in_three(const OneInThreeInstance& inst) {
    const Problem p = encode(inst);
    const DerivationTree tree = build_derivation_tree({}, p);
    SatOutcome out;
    out.tree_nodes = tree.nodes().size();
    const std::vector<FunctionSymbol> signature{sat_symbol()};
    for (const auto* leaf : tree.successful_leaves()) {
        const auto solutions = combine_leaf_solutions(leaf->triple, signature, EnumerationBounds{0, 0});
        out.decoded.push_back(decode(solutions.front(), inst));
    }
    if (!out.decoded.empty()) out.valuation = out.decoded.front();
    return out;
}

}  // namespace nomc
