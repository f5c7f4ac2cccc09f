#include "nomc/core.hpp"

#include <string_view>

namespace nomc {

bool is_operator_name(const std::string& name) {
    if (name.empty()) return false;
    for (unsigned char c : name) {
        if (c >= 0x80) continue;
        if (std::string_view("*+&%@$!~").find(static_cast<char>(c)) == std::string_view::npos) return false;
    }
    return true;
}

std::string to_string(const Atom& a) { return a.name; }
std::string to_string(const Variable& x) { return x.name; }

std::string to_string(const Permutation& p) {
    std::string out;
    for (const auto& s : p.swaps()) out += "(" + s.first().name + " " + s.second().name + ")";
    return out;
}

namespace {

bool is_infix(const Term& t) {
    return t.is(Term::Kind::App) && is_operator_name(t.symbol().name) && t.body().is(Term::Kind::Pair);
}

void print(const Term& t, std::string& out);

// Operand of an infix operator or argument of a prefix application.
void print_operand(const Term& t, std::string& out) {
    if (is_infix(t) || t.is(Term::Kind::Abstraction)) {
        out += '(';
        print(t, out);
        out += ')';
    } else {
        print(t, out);
    }
}

void print(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Unit:
            out += "<>";
            return;
        case Term::Kind::Atom:
            out += t.atom_name().name;
            return;
        case Term::Kind::Abstraction:
            out += "[" + t.atom_name().name + "]";
            print(t.body(), out);
            return;
        case Term::Kind::Pair:
            out += '(';
            print(t.first(), out);
            out += ", ";
            print(t.second(), out);
            out += ')';
            return;
        case Term::Kind::App: {
            const auto& f = t.symbol();
            if (is_infix(t)) {
                print_operand(t.body().first(), out);
                out += " " + f.name + " ";
                print_operand(t.body().second(), out);
                return;
            }
            out += f.name;
            if (f.commutative() && !is_operator_name(f.name)) out += "^C";
            out += ' ';
            print_operand(t.body(), out);
            return;
        }
        case Term::Kind::Suspension:
            out += to_string(t.permutation());
            if (!t.permutation().is_nil()) out += '.';
            out += t.variable().name;
            return;
    }
}

}  // namespace

std::string to_string(const Term& t) {
    std::string out;
    print(t, out);
    return out;
}

std::string to_string(const Substitution& s) {
    if (s.empty()) return "id";
    std::string out = "{";
    bool first = true;
    for (const auto& [x, t] : s.bindings()) {
        if (!first) out += ", ";
        first = false;
        out += x.name + "/" + to_string(t);
    }
    return out + "}";
}

}  // namespace nomc
