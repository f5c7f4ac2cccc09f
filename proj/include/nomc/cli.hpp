#pragma once

// The nomc command-line pipeline, callable as a library.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nomc/fixpoint.hpp"
#include "nomc/oracle.hpp"
#include "nomc/unifier.hpp"

namespace nomc {

enum class Mode { Simplify, Solve, Check, Sat, OracleCompare };

std::optional<Mode> parse_mode(const std::string& name);
std::string_view mode_name(Mode m);

struct RunConfig {
    Mode mode = Mode::Solve;
    /// Path of the problem file, "-" for standard input.
    std::string input_path;
    /// Problem text given inline; takes precedence over input_path.
    std::optional<std::string> problem_text;
    std::size_t max_depth = 3;
    std::size_t max_count = 64;
    bool translate = false;
    bool json = false;
    std::string solution_path;
    std::string sat_path;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int no_solution = 1;
inline constexpr int input_error = 2;
inline constexpr int invariant_violation = 3;
}  // namespace exit_code

/// Runs one invocation, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// All solutions emitted for the successful leaves of `tree`, in leaf order.
std::vector<Solution> emitted_solutions(const DerivationTree& tree, const std::vector<FunctionSymbol>& signature,
                                        const EnumerationBounds& bounds);

struct OracleComparison {
    std::size_t oracle_solutions = 0;
    bool engine_success = false;
    std::size_t emitted = 0;
    /// Oracle solutions that no emitted solution is more general than.
    std::size_t unsubsumed = 0;
    std::vector<Solution> unsubsumed_examples;

    bool oracle_nonempty() const { return oracle_solutions > 0; }
    bool agrees() const { return oracle_nonempty() == engine_success && unsubsumed == 0; }
};

/// Runs the engine and the ground brute force on the same problem and checks
/// that they agree on solvability and that every ground solution is an
/// instance of an emitted one.
OracleComparison compare_with_oracle(const FreshnessContext& ctx, const Problem& p, const TermSpace& space,
                                     const EnumerationBounds& bounds = {});

}  // namespace nomc
