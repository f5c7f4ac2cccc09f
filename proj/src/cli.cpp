#include "nomc/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "nomc/report.hpp"
#include "nomc/sat_bridge.hpp"
#include "nomc/solution.hpp"
#include "nomc/syntax.hpp"

namespace nomc {

std::optional<Mode> parse_mode(const std::string& name) {
    if (name == "simplify") return Mode::Simplify;
    if (name == "solve") return Mode::Solve;
    if (name == "check") return Mode::Check;
    if (name == "sat") return Mode::Sat;
    if (name == "oracle-compare") return Mode::OracleCompare;
    return std::nullopt;
}

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::Simplify: return "simplify";
        case Mode::Solve: return "solve";
        case Mode::Check: return "check";
        case Mode::Sat: return "sat";
        case Mode::OracleCompare: return "oracle-compare";
    }
    return "?";
}

std::vector<Solution> emitted_solutions(const DerivationTree& tree, const std::vector<FunctionSymbol>& signature,
                                        const EnumerationBounds& bounds) {
    std::vector<Solution> out;
    for (const auto* leaf : tree.successful_leaves()) {
        auto sols = combine_leaf_solutions(leaf->triple, signature, bounds);
        out.insert(out.end(), std::make_move_iterator(sols.begin()), std::make_move_iterator(sols.end()));
    }
    return out;
}

namespace {

std::vector<FunctionSymbol> merge_signature(std::vector<FunctionSymbol> base, const std::vector<FunctionSymbol>& more) {
    for (const auto& f : more) {
        if (f.commutative() && std::find(base.begin(), base.end(), f) == base.end()) base.push_back(f);
    }
    return base;
}

}  // namespace

OracleComparison compare_with_oracle(const FreshnessContext& ctx, const Problem& p, const TermSpace& space,
                                     const EnumerationBounds& bounds) {
    OracleComparison out;
    const DerivationTree tree = build_derivation_tree(ctx, p);
    out.engine_success = tree.has_successful_leaf();
    const auto signature = merge_signature(commutative_signature(p), space.signature);
    const auto emitted = emitted_solutions(tree, signature, bounds);
    out.emitted = emitted.size();

    VariableSet vars = p.vars();
    vars.merge(ctx.variables());
    out.oracle_solutions = for_each_ground_solution(ctx, p, space, [&](const Substitution& s) {
        const Solution ground{{}, s};
        const bool covered = std::any_of(emitted.begin(), emitted.end(),
                                         [&](const Solution& e) { return solution_leq(e, ground, vars); });
        if (!covered) {
            ++out.unsubsumed;
            if (out.unsubsumed_examples.size() < 5) out.unsubsumed_examples.push_back(ground);
        }
        return true;
    });
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Loaded {
    ParsedProblem parsed;
    std::optional<Substitution> split;
};

Loaded load_problem(const RunConfig& config) {
    std::string text;
    if (config.problem_text) {
        text = *config.problem_text;
    } else if (!config.input_path.empty()) {
        text = read_file(config.input_path);
    } else {
        throw std::runtime_error("no problem given");
    }
    Loaded out{parse_problem(text, config.translate), std::nullopt};
    if (config.translate) {
        auto tr = translate_commutative_suspensions(out.parsed.ctx, out.parsed.problem);
        out.parsed.ctx = tr.ctx;
        out.parsed.problem = tr.problem;
        if (!tr.split.empty()) out.split = tr.split;
        for (const auto& c : out.parsed.problem.constraints()) {
            if (c.is_equation()) {
                require_well_formed(c.as_equation().lhs);
                require_well_formed(c.as_equation().rhs);
            } else {
                require_well_formed(c.as_freshness().term);
            }
        }
    }
    return out;
}

nlohmann::json header(const RunConfig& config) {
    return {{"schema", 1},
            {"mode", mode_name(config.mode)},
            {"max_depth", config.max_depth},
            {"max_count", config.max_count},
            {"translate", config.translate}};
}

int run_tree_modes(const RunConfig& config, std::ostream& out) {
    const Loaded loaded = load_problem(config);
    const auto& [ctx, problem, commutative] = loaded.parsed;
    const DerivationTree tree = build_derivation_tree(ctx, problem);
    const bool solve = config.mode == Mode::Solve;
    const auto signature = merge_signature(commutative_signature(problem), commutative);
    const EnumerationBounds bounds{config.max_depth, config.max_count};

    std::vector<std::pair<std::size_t, std::vector<Solution>>> per_leaf;
    if (solve) {
        for (const auto* leaf : tree.successful_leaves()) {
            per_leaf.emplace_back(leaf->id, combine_leaf_solutions(leaf->triple, signature, bounds));
        }
    }

    if (config.json) {
        auto doc = header(config);
        doc["problem"] = problem_text(ctx, problem);
        if (loaded.split) doc["split"] = to_json(*loaded.split);
        doc["tree"] = to_json(tree);
        auto edges = nlohmann::json::array();
        for (const auto& n : tree.nodes()) {
            if (n.parent) edges.push_back({{"from", *n.parent}, {"to", n.id}, {"rule", rule_name(*n.rule)}});
        }
        doc["edges"] = std::move(edges);
        auto leaves = nlohmann::json::array();
        for (const auto* n : tree.leaves()) {
            leaves.push_back({{"id", n->id}, {"status", status_name(n->status)}, {"triple", to_json(n->triple)}});
        }
        doc["leaves"] = std::move(leaves);
        if (solve) {
            auto sols = nlohmann::json::array();
            for (const auto& [id, list] : per_leaf) {
                for (const auto& s : list) sols.push_back({{"leaf", id}, {"solution", to_json(s)}});
            }
            doc["solutions"] = std::move(sols);
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "problem: " << problem_text(ctx, problem) << "\n";
        if (loaded.split) out << "split: " << to_string(*loaded.split) << "\n";
        out << tree_report(tree);
        out << "successful triples:\n";
        for (const auto* n : tree.successful_leaves()) out << "  n" << n->id << " " << to_string(n->triple) << "\n";
        if (solve) {
            out << "solutions:\n";
            for (const auto& [id, list] : per_leaf) {
                out << "  n" << id << ":\n";
                for (const auto& s : list) out << "    " << to_string(s) << "\n";
            }
        }
    }
    return tree.has_successful_leaf() ? exit_code::ok : exit_code::no_solution;
}

int run_check(const RunConfig& config, std::ostream& out) {
    if (config.solution_path.empty()) throw std::runtime_error("check mode needs --check-solution <file>");
    const Loaded loaded = load_problem(config);
    const Solution sol = parse_solution(read_file(config.solution_path));
    const SolutionCheck check = check_solution(loaded.parsed.ctx, loaded.parsed.problem, sol);
    if (config.json) {
        auto doc = header(config);
        doc["solution"] = to_json(sol);
        doc["conditions"] = {{"context", check.context},
                             {"freshness", check.freshness},
                             {"equations", check.equations},
                             {"instance", check.instance}};
        doc["valid"] = check.ok();
        if (!check.ok()) doc["failure"] = check.failure;
        out << doc.dump(2) << "\n";
    } else {
        out << "solution: " << to_string(sol) << "\n";
        out << (check.ok() ? "valid" : "invalid: " + check.failure) << "\n";
    }
    return check.ok() ? exit_code::ok : exit_code::no_solution;
}

int run_sat(const RunConfig& config, std::ostream& out) {
    const std::string path = config.sat_path.empty() ? config.input_path : config.sat_path;
    if (path.empty()) throw std::runtime_error("sat mode needs --sat <clause-file>");
    const OneInThreeInstance inst = parse_instance(read_file(path));
    const Problem encoded = encode(inst);
    const SatOutcome outcome = solve_one_in_three(inst);
    if (config.json) {
        auto doc = header(config);
        doc["encoding"] = problem_text({}, encoded);
        doc["satisfiable"] = outcome.valuation.has_value();
        if (outcome.valuation) doc["valuation"] = *outcome.valuation;
        doc["tree_nodes"] = outcome.tree_nodes;
        out << doc.dump(2) << "\n";
    } else {
        out << "encoding: " << problem_text({}, encoded) << "\n";
        if (outcome.valuation) {
            out << "SAT\n";
            for (const auto& [name, value] : *outcome.valuation) out << "  " << name << " = " << (value ? "true" : "false") << "\n";
        } else {
            out << "UNSAT\n";
        }
    }
    return outcome.valuation ? exit_code::ok : exit_code::no_solution;
}

int run_oracle_compare(const RunConfig& config, std::ostream& out) {
    const Loaded loaded = load_problem(config);
    const auto& [ctx, problem, commutative] = loaded.parsed;
    TermSpace space;
    const AtomSet atoms = problem.atoms();
    space.atoms.assign(atoms.begin(), atoms.end());
    for (const auto& f : problem.symbols()) space.signature.push_back(f);
    for (const auto& f : commutative) {
        if (std::find(space.signature.begin(), space.signature.end(), f) == space.signature.end()) {
            space.signature.push_back(f);
        }
    }
    space.max_depth = config.max_depth;
    const OracleComparison cmp = compare_with_oracle(ctx, problem, space, {config.max_depth, config.max_count});
    if (config.json) {
        auto doc = header(config);
        doc["oracle_solutions"] = cmp.oracle_solutions;
        doc["engine_success"] = cmp.engine_success;
        doc["emitted"] = cmp.emitted;
        doc["unsubsumed"] = cmp.unsubsumed;
        auto ex = nlohmann::json::array();
        for (const auto& s : cmp.unsubsumed_examples) ex.push_back(to_json(s));
        doc["unsubsumed_examples"] = std::move(ex);
        doc["agree"] = cmp.agrees();
        out << doc.dump(2) << "\n";
    } else {
        out << "oracle solutions: " << cmp.oracle_solutions << "\n";
        out << "engine successful leaf: " << (cmp.engine_success ? "yes" : "no") << "\n";
        out << "emitted solutions: " << cmp.emitted << "\n";
        out << "unsubsumed oracle solutions: " << cmp.unsubsumed << "\n";
        for (const auto& s : cmp.unsubsumed_examples) out << "  " << to_string(s) << "\n";
        out << (cmp.agrees() ? "agree" : "MISMATCH") << "\n";
    }
    return cmp.agrees() ? exit_code::ok : exit_code::no_solution;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.max_depth == 0 || config.max_count == 0) throw std::runtime_error("bounds must be positive");
        switch (config.mode) {
            case Mode::Simplify:
            case Mode::Solve: return run_tree_modes(config, out);
            case Mode::Check: return run_check(config, out);
            case Mode::Sat: return run_sat(config, out);
            case Mode::OracleCompare: return run_oracle_compare(config, out);
        }
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return exit_code::invariant_violation;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const SatFormatError& e) {
        err << "clause file: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const WellFormednessError& e) {
        err << "ill-formed problem: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    }
    return exit_code::input_error;
}

}  // namespace nomc
