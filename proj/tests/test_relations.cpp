#include <string>
#include <vector>

#include "doctest.h"
#include "nomc/relations.hpp"
#include "nomc/syntax.hpp"
#include "support/generators.hpp"

using namespace nomc;

namespace {
Atom A(const char* n) { return Atom{n}; }
Variable V(const char* n) { return Variable{n}; }
}  // namespace

TEST_SUITE("relations") {
    TEST_CASE("freshness") {
        CHECK(check_fresh({}, A("a"), Term::unit()));
        CHECK_FALSE(check_fresh({}, A("a"), atom_term("a")));
        CHECK(check_fresh({}, A("a"), atom_term("b")));
        CHECK(check_fresh({{A("c"), V("X")}}, A("a"), parse_term("(a c).X")));
        CHECK_FALSE(check_fresh({{A("a"), V("X")}}, A("a"), parse_term("(a c).X")));
        CHECK(check_fresh({}, A("a"), parse_term("[a]a")));
        CHECK_FALSE(check_fresh({}, A("a"), parse_term("[b]a")));
    }

    TEST_CASE("trace names the rules") {
        std::vector<std::string> rules;
        check_fresh({{A("a"), V("X")}}, A("a"), parse_term("f (<>, X)"),
                    [&](std::string_view r) { rules.emplace_back(r); });
        CHECK(rules == std::vector<std::string>{"#app", "#pair", "#<>", "#var"});
    }

    TEST_CASE("alpha-C equivalence") {
        CHECK(alpha_c_equiv({}, parse_term("f^C (a, b)"), parse_term("f^C (b, a)")));
        CHECK(alpha_c_equiv({{A("a"), V("X")}, {A("b"), V("X")}}, parse_term("(a b).X"), var_term("X")));
        CHECK_FALSE(alpha_c_equiv({{A("a"), V("X")}}, parse_term("(a b).X"), var_term("X")));

        // ⟨(a b).X, f e⟩σ ≈ ⟨X, f e⟩σ with σ = {X/[a]a}
        const auto s = Substitution::single(V("X"), parse_term("[a]a"));
        CHECK(alpha_c_equiv({}, s.apply(parse_term("((a b).X, f e)")), s.apply(parse_term("(X, f e)"))));
    }

    TEST_CASE("alpha equivalence ignores commutativity") {
        CHECK(alpha_equiv({}, parse_term("[a]a"), parse_term("[b]b")));
        CHECK_FALSE(alpha_equiv({}, parse_term("f^C (a, b)"), parse_term("f^C (b, a)")));
        CHECK_FALSE(alpha_c_equiv({}, parse_term("[a]b"), parse_term("[b]a")));
    }

    TEST_CASE("ground keys decide equivalence of ground terms") {
        testing::Generator gen(21);
        for (int i = 0; i < 500; ++i) {
            const Term s = gen.ground_term(4);
            const Term t = gen.coin() ? gen.perturb(s) : gen.ground_term(4);
            CHECK((ground_key(s) == ground_key(t)) == alpha_c_equiv({}, s, t));
        }
        CHECK_THROWS_AS(ground_key(var_term("X")), std::invalid_argument);
    }

    TEST_CASE("property: equivalence laws") {
        testing::Generator gen(22);
        for (int i = 0; i < 400; ++i) {
            const FreshnessContext ctx = gen.context(4);
            const Term s = gen.term();
            const Term t = gen.perturb(s);
            const Term u = gen.perturb(t);
            CHECK(alpha_c_equiv(ctx, s, s));
            CHECK(alpha_equiv(ctx, s, s));
            const bool st = alpha_c_equiv(ctx, s, t);
            CHECK(st == alpha_c_equiv(ctx, t, s));
            if (st && alpha_c_equiv(ctx, t, u)) CHECK(alpha_c_equiv(ctx, s, u));
            if (alpha_equiv(ctx, s, t)) CHECK(st);
        }
    }

    TEST_CASE("property: equivariance and freshness preservation") {
        testing::Generator gen(23);
        for (int i = 0; i < 400; ++i) {
            const FreshnessContext ctx = gen.context(4);
            const Term s = gen.term();
            const Term t = gen.perturb(s);
            const Permutation p = gen.permutation(3);
            if (alpha_c_equiv(ctx, s, t)) {
                CHECK(alpha_c_equiv(ctx, apply(p, s), apply(p, t)));
                const Atom& a = gen.atom();
                if (check_fresh(ctx, a, s)) CHECK(check_fresh(ctx, a, t));
            }
        }
    }

    TEST_CASE("property: abstraction rule is invertible") {
        testing::Generator gen(24);
        for (int i = 0; i < 400; ++i) {
            const FreshnessContext ctx = gen.context(4);
            const Term s = gen.perturb(gen.term());
            const Term t = gen.perturb(s);
            const Term as = Term::abstraction(A("a"), s);
            const Term bt = Term::abstraction(A("b"), apply(Permutation::swap(A("a"), A("b")), t));
            if (alpha_c_equiv(ctx, as, bt)) {
                CHECK(alpha_c_equiv(ctx, s, apply(Permutation::swap(A("a"), A("b")), bt.body())));
                CHECK(check_fresh(ctx, A("a"), bt.body()));
            }
        }
    }
}
