#include <iostream>

#include "CLI11.hpp"
#include "nomc/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Nominal C-unification: simplify problems and enumerate fixpoint solutions"};
    nomc::RunConfig config;
    std::string mode = "solve";
    std::string inline_problem;

    app.add_option("input", config.input_path, "Problem file ('-' for stdin)");
    app.add_option("--mode", mode, "simplify | solve | check | sat | oracle-compare")
        ->check(CLI::IsMember({"simplify", "solve", "check", "sat", "oracle-compare"}));
    app.add_option("--problem", inline_problem, "Problem text given inline");
    app.add_option("--max-depth", config.max_depth, "Pseudo-cycle nesting and oracle term depth")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-count", config.max_count, "Combinatory solutions per equation")->check(CLI::PositiveNumber);
    app.add_flag("--translate", config.translate, "Split variables under commutative symbols into pairs");
    app.add_flag("--json", config.json, "Structured output");
    app.add_option("--check-solution", config.solution_path, "Solution file for check mode");
    app.add_option("--sat", config.sat_path, "Clause file; implies sat mode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : nomc::exit_code::input_error;
    }
    config.mode = *nomc::parse_mode(mode);
    if (!config.sat_path.empty()) config.mode = nomc::Mode::Sat;
    if (!config.solution_path.empty() && mode == "solve" && app.count("--mode") == 0) config.mode = nomc::Mode::Check;
    if (!inline_problem.empty()) config.problem_text = inline_problem;
    return nomc::run(config, std::cout, std::cerr);
}
