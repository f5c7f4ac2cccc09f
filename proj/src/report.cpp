#include "nomc/report.hpp"

namespace nomc {

std::string_view status_name(NodeStatus s) {
    switch (s) {
        case NodeStatus::Internal: return "internal";
        case NodeStatus::SuccessfulLeaf: return "success";
        case NodeStatus::FailLeaf: return "fail";
    }
    return "?";
}

std::string tree_report(const DerivationTree& tree) {
    std::string out = "nodes:\n";
    for (const auto& n : tree.nodes()) out += "  n" + std::to_string(n.id) + " " + to_string(n.triple) + "\n";
    out += "edges:\n";
    for (const auto& n : tree.nodes()) {
        if (!n.parent) continue;
        out += "  n" + std::to_string(*n.parent) + " --" + std::string(rule_name(*n.rule)) + "--> n" +
               std::to_string(n.id) + "\n";
    }
    out += "leaves:\n";
    for (const auto* n : tree.leaves()) {
        out += "  n" + std::to_string(n->id) + " " + std::string(status_name(n->status)) + " " + to_string(n->triple) +
               "\n";
    }
    return out;
}

nlohmann::json to_json(const FreshnessContext& ctx) {
    auto out = nlohmann::json::array();
    for (const auto& [a, x] : ctx.entries()) out.push_back({{"atom", a.name}, {"var", x.name}});
    return out;
}

nlohmann::json to_json(const Substitution& s) {
    auto out = nlohmann::json::object();
    for (const auto& [x, t] : s.bindings()) out[x.name] = to_string(t);
    return out;
}

nlohmann::json to_json(const Problem& p) {
    auto out = nlohmann::json::array();
    for (const auto& c : p.constraints()) {
        if (c.is_equation()) {
            out.push_back({{"kind", c.is_fixpoint() ? "fixpoint" : "equation"},
                           {"lhs", to_string(c.as_equation().lhs)},
                           {"rhs", to_string(c.as_equation().rhs)}});
        } else {
            out.push_back(
                {{"kind", "freshness"}, {"atom", c.as_freshness().atom.name}, {"term", to_string(c.as_freshness().term)}});
        }
    }
    return out;
}

nlohmann::json to_json(const Triple& t) {
    return {{"context", to_json(t.ctx)}, {"substitution", to_json(t.subst)}, {"problem", to_json(t.problem)},
            {"text", to_string(t)}};
}

nlohmann::json to_json(const Solution& s) {
    return {{"context", to_json(s.ctx)}, {"substitution", to_json(s.subst)}, {"text", to_string(s)}};
}

namespace {
nlohmann::json node_json(const DerivationTree& tree, std::size_t id) {
    const auto& n = tree.node(id);
    nlohmann::json out{{"id", n.id}, {"status", status_name(n.status)}, {"triple", to_json(n.triple)}};
    out["rule"] = n.rule ? nlohmann::json(std::string(rule_name(*n.rule))) : nlohmann::json(nullptr);
    auto children = nlohmann::json::array();
    for (auto c : n.children) children.push_back(node_json(tree, c));
    out["children"] = std::move(children);
    return out;
}
}  // namespace

nlohmann::json to_json(const DerivationTree& tree) { return node_json(tree, 0); }

}  // namespace nomc
