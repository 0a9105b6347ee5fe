#include "grace/report.hpp"

#include "grace/io.hpp"

namespace grace {

using nlohmann::json;

json monomial_report(int n, const MonomialClassification& mc) {
    return json{{"n", n},
                {"rawMonomials", mc.raw_count},
                {"spanningTrees", mc.spanning_trees.size()},
                {"cyclicSubgraphs", mc.cyclic_subgraphs.size()},
                {"degenerate", mc.degenerate_count}};
}

json catalog_report(const GracefulCatalog& cat,
                    const std::map<std::string, std::uint32_t>& class_counts) {
    json classes = json::object();
    for (const auto& [code, count] : class_counts) classes[code] = count;
    return json{{"n", cat.n},
                {"factorialCount", cat.factorial_count},
                {"rawSelections", cat.raw_selections},
                {"properChoiceVectors", cat.choice_vectors},
                {"distinctTrees", cat.trees.size()},
                {"distinctNonTrees", cat.non_trees.size()},
                {"boundTheorem", cat.bound_theorem},
                {"boundRemark", cat.bound_remark},
                {"classCounts", std::move(classes)}};
}

json stock_report(const Stock& stock) {
    json members = json::array();
    for (const auto& [code, t] : stock.members)
        members.push_back(json{{"code", code}, {"edges", edge_list_string(t.edges)}});
    return json{{"n", stock.n}, {"classes", stock.size()}, {"members", std::move(members)}};
}

json special_graceful_json(const SpecialGracefulReport& rep) {
    json classes = json::object();
    for (const auto& [code, rows] : rep.by_class) {
        json list = json::array();
        for (const auto& row : rows)
            list.push_back(json{{"specialVertex", row.special_vertex},
                                {"edges", edge_list_string(row.tree.edges)},
                                {"viaFallback", row.via_fallback}});
        classes[code] = std::move(list);
    }
    return json{{"n", rep.n},
                {"classes", rep.by_class.size()},
                {"byClass", std::move(classes)},
                {"fallbackClasses", rep.fallback_classes},
                {"uncoveredClasses", rep.uncovered_classes},
                {"unreachableSpecialVertices", rep.unreachable_special_vertices}};
}

json coverage_json(const CoverageReport& rep) {
    json witnesses = json::object();
    for (const auto& [code, path] : rep.witnesses) witnesses[code] = path_to_string(path);
    return json{{"n", rep.n},
                {"treePaths", rep.tree_paths},
                {"classes", rep.classes},
                {"covered", rep.covered},
                {"selfMirrorPaths", rep.self_mirror_paths},
                {"missing", rep.missing},
                {"witnesses", std::move(witnesses)}};
}

const char* outcome_name(SearchOutcome outcome) {
    switch (outcome) {
        case SearchOutcome::Found: return "found";
        case SearchOutcome::InfeasibleEmptyRow: return "infeasible-empty-row";
        case SearchOutcome::Exhausted: return "exhausted";
    }
    return "unknown";
}

json constrained_json(SearchOutcome outcome, const SearchStats& stats, int max_degree,
                      const LatticePath* found) {
    json out{{"outcome", outcome_name(outcome)},
             {"maxDegree", max_degree},
             {"nodes", stats.nodes}};
    if (found) {
        out["path"] = path_to_string(*found);
        out["edges"] = edge_list_string(found->points);
    }
    return out;
}

}  // namespace grace
