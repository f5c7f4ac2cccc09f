#pragma once

// Text and JSON renderings of derivation trees and solutions.

#include <string>
#include <vector>

#include "json.hpp"
#include "nomc/unifier.hpp"

namespace nomc {

/// Nodes with their triples, one `nI --rule--> nJ` line per edge, then the
/// leaves with their classification.
std::string tree_report(const DerivationTree& tree);

std::string_view status_name(NodeStatus s);

nlohmann::json to_json(const FreshnessContext& ctx);
nlohmann::json to_json(const Substitution& s);
nlohmann::json to_json(const Problem& p);
nlohmann::json to_json(const Triple& t);
nlohmann::json to_json(const Solution& s);
/// Nested record: each node holds its rule, status, triple and children.
nlohmann::json to_json(const DerivationTree& tree);

}  // namespace nomc
