#include "nomc/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <set>

namespace nomc {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_op_char(char c) {
    return static_cast<unsigned char>(c) >= 0x80 || std::string_view("*+&%@$!~").find(c) != std::string_view::npos;
}
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool is_variable_name(const std::string& s) { return std::isupper(static_cast<unsigned char>(s[0])); }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    // Newlines only matter after the preamble.
    void skip_space(bool stop_at_newline = false) {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n' && stop_at_newline) return;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (text_.substr(pos_, 2) == "//") {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                return;
            }
        }
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool looking_at(std::string_view s) {
        skip_space();
        return text_.substr(pos_, s.size()) == s;
    }

    bool accept(std::string_view s) {
        if (!looking_at(s)) return false;
        pos_ += s.size();
        return true;
    }

    void expect(std::string_view s) {
        if (!accept(s)) fail("expected '" + std::string(s) + "'");
    }

    [[noreturn]] void fail(const std::string& message) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, message);
    }

    std::string identifier() {
        skip_space();
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected identifier");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Atom atom() {
        const std::size_t start = (skip_space(), pos_);
        std::string name = identifier();
        if (is_variable_name(name) || name == "id") {
            pos_ = start;
            fail("expected an atom, found '" + name + "'");
        }
        return Atom{name};
    }

    Variable variable() {
        const std::size_t start = (skip_space(), pos_);
        std::string name = identifier();
        if (!is_variable_name(name)) {
            pos_ = start;
            fail("expected a variable, found '" + name + "'");
        }
        return Variable{name};
    }

    /// Operator token, with an optional trailing 'C' commutativity marker.
    std::string operator_name() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_op_char(text_[pos_])) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (pos_ < text_.size() && text_[pos_] == 'C' && (pos_ + 1 >= text_.size() || !is_ident_char(text_[pos_ + 1]))) {
            ++pos_;
        }
        return name;
    }

    bool at_operator() {
        skip_space();
        return pos_ < text_.size() && is_op_char(text_[pos_]);
    }

    /// Characters that can begin an application argument.
    bool at_operand_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        if (c == '<') return text_.substr(pos_, 2) == "<>";
        return c == '(' || c == '[' || is_ident_start(c);
    }

    Term term() {
        Term left = prefix();
        while (at_operator()) {
            const std::string op = operator_name();
            Term right = prefix();
            left = Term::app(FunctionSymbol{op, Theory::Commutative}, Term::pair(std::move(left), std::move(right)));
        }
        return left;
    }

    Term prefix() {
        if (accept("[")) {
            Atom a = atom();
            expect("]");
            return Term::abstraction(std::move(a), term());
        }
        if (at_operator()) {
            const std::string op = operator_name();
            return Term::app(FunctionSymbol{op, Theory::Commutative}, prefix());
        }
        if (is_ident_start(peek())) {
            std::string name = identifier();
            if (name == "id") {
                expect(".");
                return Term::var(variable());
            }
            if (is_variable_name(name)) return Term::var(Variable{name});
            Theory theory = Theory::Plain;
            if (text_.substr(pos_, 2) == "^C") {
                pos_ += 2;
                theory = Theory::Commutative;
            }
            if (theory == Theory::Commutative || at_operand_start()) {
                if (!at_operand_start()) fail("expected an argument for '" + name + "'");
                return Term::app(FunctionSymbol{name, theory}, prefix());
            }
            return Term::atom(Atom{name});
        }
        return primary();
    }

    Term primary() {
        if (accept("<>")) return Term::unit();
        if (!looking_at("(")) fail("expected a term");
        if (auto s = suspension()) return *s;
        expect("(");
        Term first = term();
        if (accept(",")) {
            Term second = term();
            expect(")");
            return Term::pair(std::move(first), std::move(second));
        }
        expect(")");
        return first;
    }

    /// (a b)(c d).X, or nothing with the position restored.
    std::optional<Term> suspension() {
        const std::size_t start = pos_;
        std::vector<Swapping> swaps;
        try {
            while (looking_at("(")) {
                expect("(");
                Atom a = atom();
                Atom b = atom();
                expect(")");
                if (a == b) fail("swapping of an atom with itself");
                swaps.emplace_back(std::move(a), std::move(b));
            }
            if (swaps.empty() || !accept(".")) {
                pos_ = start;
                return std::nullopt;
            }
        } catch (const ParseError&) {
            pos_ = start;
            return std::nullopt;
        }
        return Term::suspension(Permutation(std::move(swaps)), variable());
    }

    FreshnessContext context() {
        FreshnessContext ctx;
        expect("{");
        if (accept("}")) return ctx;
        do {
            Atom a = atom();
            expect("#");
            ctx.add(a, variable());
        } while (accept(","));
        expect("}");
        return ctx;
    }

    Constraint constraint() {
        const std::size_t start = (skip_space(), pos_);
        if (is_ident_start(peek())) {
            std::string name = identifier();
            if (!is_variable_name(name) && name != "id" && accept("#?")) return Constraint::freshness(Atom{name}, term());
            pos_ = start;
        }
        Term lhs = term();
        expect("=?");
        return Constraint::equation(std::move(lhs), term());
    }

    std::vector<std::string> preamble() {
        std::vector<std::string> names;
        if (!accept("commutative:")) return names;
        for (;;) {
            skip_space(true);
            if (pos_ < text_.size() && is_op_char(text_[pos_])) {
                names.push_back(operator_name());
            } else {
                names.push_back(identifier());
            }
            skip_space(true);
            if (pos_ >= text_.size() || text_[pos_] != ',') break;
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] != '\n') fail("expected end of line after signature");
        return names;
    }

    Substitution substitution() {
        Substitution s;
        if (accept("id")) return s;
        expect("{");
        if (accept("}")) return s;
        do {
            Variable x = variable();
            expect("/");
            s.bind(x, term());
        } while (accept(","));
        expect("}");
        return s;
    }

    void finish() {
        if (!at_end()) fail("unexpected trailing input");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

/// Gives every occurrence of a symbol named in `commutative` that theory.
Term fix_theories(const Term& t, const std::set<std::string>& commutative) {
    switch (t.kind()) {
        case Term::Kind::Abstraction:
            return Term::abstraction(t.atom_name(), fix_theories(t.body(), commutative));
        case Term::Kind::Pair:
            return Term::pair(fix_theories(t.first(), commutative), fix_theories(t.second(), commutative));
        case Term::Kind::App: {
            FunctionSymbol f = t.symbol();
            if (commutative.count(f.name)) f.theory = Theory::Commutative;
            return Term::app(std::move(f), fix_theories(t.body(), commutative));
        }
        default:
            return t;
    }
}

void collect_commutative(const Term& t, std::set<std::string>& out) {
    for (const auto& f : term_symbols(t)) {
        if (f.commutative()) out.insert(f.name);
    }
}

template <typename F>
void for_each_term(const Problem& p, F f) {
    for (const auto& c : p.constraints()) {
        if (c.is_equation()) {
            f(c.as_equation().lhs);
            f(c.as_equation().rhs);
        } else {
            f(c.as_freshness().term);
        }
    }
}

}  // namespace

ParsedProblem parse_problem(std::string_view text, bool allow_malformed) {
    Parser in(text);
    ParsedProblem out;
    const auto declared = in.preamble();
    out.ctx = in.context();
    in.expect("|-");
    Problem raw;
    if (!in.at_end()) {
        do {
            if (in.at_end()) break;
            raw.add(in.constraint());
        } while (in.accept(";"));
    }
    in.finish();

    std::set<std::string> commutative(declared.begin(), declared.end());
    for_each_term(raw, [&](const Term& t) { collect_commutative(t, commutative); });
    for (const auto& c : raw.constraints()) {
        if (c.is_equation()) {
            out.problem.add(Constraint::equation(fix_theories(c.as_equation().lhs, commutative),
                                                 fix_theories(c.as_equation().rhs, commutative)));
        } else {
            out.problem.add(Constraint::freshness(c.as_freshness().atom, fix_theories(c.as_freshness().term, commutative)));
        }
    }
    for (const auto& name : commutative) out.commutative.push_back(FunctionSymbol{name, Theory::Commutative});
    if (!allow_malformed) for_each_term(out.problem, [](const Term& t) { require_well_formed(t); });
    return out;
}

Term parse_term(std::string_view text) {
    Parser in(text);
    Term t = in.term();
    in.finish();
    std::set<std::string> commutative;
    collect_commutative(t, commutative);
    return fix_theories(t, commutative);
}

FreshnessContext parse_context(std::string_view text) {
    Parser in(text);
    FreshnessContext ctx = in.context();
    in.finish();
    return ctx;
}

Solution parse_solution(std::string_view text) {
    Parser in(text);
    in.expect("<");
    Solution sol;
    sol.ctx = in.context();
    in.expect(",");
    sol.subst = in.substitution();
    in.expect(">");
    in.finish();
    return sol;
}

std::string problem_text(const FreshnessContext& ctx, const Problem& p, const std::vector<FunctionSymbol>& commutative) {
    std::string out;
    const auto used = p.symbols();
    const bool need_preamble = std::any_of(commutative.begin(), commutative.end(), [&](const FunctionSymbol& f) {
        return !used.count(f);
    });
    if (need_preamble) {
        out += "commutative: ";
        for (std::size_t i = 0; i < commutative.size(); ++i) {
            if (i) out += ", ";
            out += commutative[i].name;
        }
        out += "\n";
    }
    out += to_string(ctx) + " |- ";
    bool first = true;
    for (const auto& c : p.constraints()) {
        if (!first) out += "; ";
        first = false;
        out += to_string(c);
    }
    return out;
}

}  // namespace nomc
