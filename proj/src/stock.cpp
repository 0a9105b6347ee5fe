#include "grace/stock.hpp"

#include <algorithm>

#include "grace/canonical.hpp"
#include "grace/graceful.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace grace {

namespace {

LabeledTree one_vertex_tree() { return LabeledTree(1, {}); }

void check_stock_n(int n, const StockOptions& opts) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (n > opts.guard_n) throw guard_error("n over stock guard");
}

// grows one level: every member of `level` extended at the given points
using PointChooser = std::vector<int> (*)(const LabeledTree&, const StockOptions&);

std::vector<int> block_representatives(const LabeledTree& t, const StockOptions&) {
    std::vector<int> reps;
    for (const auto& block : equivalent_partition(t).blocks) reps.push_back(block.front());
    return reps;
}

std::vector<int> special_representatives(const LabeledTree& t, const StockOptions& opts) {
    return special_points(t, opts.two_path).special;
}

Stock grow_stock(int n, const StockOptions& opts, PointChooser points_of) {
    check_stock_n(n, opts);
    Stock level;
    level.n = 1;
    level.members.emplace(canonical_code(one_vertex_tree()), one_vertex_tree());
    while (level.n < n) {
        std::vector<const LabeledTree*> members;
        members.reserve(level.size());
        for (const auto& [code, t] : level.members) members.push_back(&t);

        // each member's extensions, gathered per member so that the merge
        // order (and therefore the chosen representatives) match the serial run
        std::vector<std::vector<std::pair<std::string, LabeledTree>>> grown(members.size());
        const int count = static_cast<int>(members.size());
#if defined(_OPENMP)
#pragma omp parallel for num_threads(opts.jobs > 1 ? opts.jobs : 1) schedule(dynamic) \
    if (opts.jobs > 1)
#endif
        for (int p = 0; p < count; ++p) {
            for (int v : points_of(*members[p], opts)) {
                LabeledTree ext = extend_at(*members[p], v);
                grown[p].emplace_back(canonical_code(ext), std::move(ext));
            }
        }

        Stock next;
        next.n = level.n + 1;
        for (auto& batch : grown)
            for (auto& [code, t] : batch) next.members.try_emplace(code, std::move(t));
        level = std::move(next);
    }
    return level;
}

}  // namespace

LabeledTree extend_at(const LabeledTree& t, int v) {
    if (v < 1 || v > t.n) throw std::invalid_argument("extension vertex out of range");
    std::vector<Edge> edges(t.edges);
    edges.push_back(make_edge(v, t.n + 1));
    return LabeledTree(t.n + 1, std::move(edges));
}

EquivalentPartition equivalent_partition(const LabeledTree& t) {
    std::map<std::string, std::vector<int>> by_code;
    for (int v = 1; v <= t.n; ++v) by_code[canonical_code(extend_at(t, v))].push_back(v);
    EquivalentPartition out;
    for (auto& [code, block] : by_code) out.blocks.push_back(std::move(block));
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::set<std::string> complete_extension(const LabeledTree& t) {
    std::set<std::string> codes;
    for (int v = 1; v <= t.n; ++v) codes.insert(canonical_code(extend_at(t, v)));
    return codes;
}

Stock build_stock(int n, const StockOptions& opts) {
    return grow_stock(n, opts, block_representatives);
}

Stock stock_via_special_points(int n, const StockOptions& opts) {
    return grow_stock(n, opts, special_representatives);
}

SpecialPointReport special_points(const LabeledTree& t, TwoPathRule rule) {
    SpecialPointReport r;
    if (t.n == 1) {
        // lone vertex: treated as special so extension can start here
        r.special = {1};
        return r;
    }

    std::vector<std::vector<int>> adj(t.n + 1);
    for (const auto& [i, j] : t.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    auto pendant = [&](int v) { return adj[v].size() == 1; };

    std::vector<char> in_spr(t.n + 1, 0), in_dpr(t.n + 1, 0);
    for (int v = 1; v <= t.n; ++v) {
        int pendant_nbrs = 0;
        int two_path_mids = 0;
        for (int x : adj[v]) {
            if (pendant(x)) {
                ++pendant_nbrs;
                continue;
            }
            // a 2-path v-x-y hanging off v ends at a pendant y
            if (rule == TwoPathRule::MidpointDegreeTwo) {
                if (adj[x].size() == 2) {
                    const int y = adj[x][0] == v ? adj[x][1] : adj[x][0];
                    if (pendant(y)) ++two_path_mids;
                }
            } else {
                bool has_pendant_leg = false;
                for (int y : adj[x])
                    if (y != v && pendant(y)) has_pendant_leg = true;
                if (has_pendant_leg) ++two_path_mids;
            }
        }
        const int deg = static_cast<int>(adj[v].size());
        if (pendant_nbrs >= 1 && deg - pendant_nbrs <= 1) in_spr[v] = 1;
        if (pendant_nbrs + two_path_mids >= 1 && deg - pendant_nbrs - two_path_mids <= 1)
            in_dpr[v] = 1;
    }

    std::vector<char> is_special(t.n + 1, 0);
    for (int v = 1; v <= t.n; ++v) {
        if (in_spr[v]) r.spr.push_back(v);
        if (in_dpr[v]) r.dpr.push_back(v);
        const bool p_spr = pendant(v) && in_spr[adj[v][0]];
        const bool p_dpr = pendant(v) && in_dpr[adj[v][0]];
        if (p_spr) r.pspr.push_back(v);
        if (p_dpr) r.pdpr.push_back(v);
        if (in_spr[v] || in_dpr[v] || p_spr || p_dpr) is_special[v] = 1;
    }
    for (int v = 1; v <= t.n; ++v)
        if (is_special[v]) r.special.push_back(v);
    return r;
}

ExtensionOrigins extension_origins(int n, const StockOptions& opts) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    ExtensionOrigins out;
    out.n = n;
    const Stock lower = build_stock(n - 1, opts);
    for (const auto& [lower_code, t] : lower.members) {
        std::set<std::string> seen_orbits;
        for (int v : special_points(t, opts.two_path).special) {
            if (!seen_orbits.insert(rooted_code(t, v)).second) continue;  // same orbit
            out.producers[canonical_code(extend_at(t, v))].emplace_back(lower_code, v);
        }
    }
    for (const auto& [upper, from] : out.producers)
        if (from.size() == 1) out.essential.emplace(upper, from.front());
    return out;
}

SpecialGracefulReport graceful_via_special_points(int n, const StockOptions& opts) {
    check_stock_n(n, opts);
    if (n > 10) throw guard_error("n over guard for graceful labeling search");

    struct Entry {
        LabeledTree tree;
        bool via_fallback = false;
    };
    // class code -> (orbit code of the label-1 vertex -> labeling)
    std::map<std::string, std::map<std::string, Entry>> state;
    state[canonical_code(one_vertex_tree())].emplace(rooted_code(one_vertex_tree(), 1),
                                                     Entry{one_vertex_tree(), false});

    SpecialGracefulReport report;
    report.n = n;

    for (int level = 1; level < n; ++level) {
        const Stock current = build_stock(level, opts);

        // orbits of special points, per class at this level
        std::map<std::string, std::set<std::string>> special_orbits;
        for (const auto& [code, rep] : current.members) {
            auto& orbits = special_orbits[code];
            for (int v : special_points(rep, opts.two_path).special)
                orbits.insert(rooted_code(rep, v));
        }

        // recursive step: extend stored labelings seated on special points
        std::map<std::string, std::map<std::string, Entry>> next;
        for (const auto& [cls, orbits] : state) {
            const auto& allowed = special_orbits[cls];
            for (const auto& [orbit, entry] : orbits) {
                if (!allowed.count(orbit)) continue;
                std::vector<Edge> edges(entry.tree.edges);
                edges.push_back(make_edge(1, level + 1));
                LabeledTree grown(level + 1, std::move(edges));
                for (const LabeledTree& cand : {grown, complement_relabel(grown)})
                    next[canonical_code(cand)].try_emplace(rooted_code(cand, 1),
                                                           Entry{cand, false});
            }
        }

        // fill missing special orbits from the exhaustive catalog, and record
        // what the recursion alone could not reach at the top level
        const Stock upper = build_stock(level + 1, opts);
        std::map<std::string, std::vector<LabeledTree>> catalog_by_class;
        bool catalog_built = false;
        auto ensure_catalog = [&]() {
            if (catalog_built) return;
            catalog_built = true;
            GracefulOptions gopts;
            gopts.jobs = opts.jobs;
            for (const auto& es : build_graceful_catalog(level + 1, gopts).trees) {
                LabeledTree t(level + 1, es);
                catalog_by_class[canonical_code(t)].push_back(std::move(t));
            }
        };

        for (const auto& [code, rep] : upper.members) {
            std::map<std::string, int> orbit_vertex;  // orbit -> smallest special vertex
            for (int v : special_points(rep, opts.two_path).special)
                orbit_vertex.try_emplace(rooted_code(rep, v), v);

            auto& stored = next[code];
            bool recursion_hit = false;
            std::set<std::string> missing;
            for (const auto& [orbit, v] : orbit_vertex) {
                if (stored.count(orbit))
                    recursion_hit = true;
                else
                    missing.insert(orbit);
            }
            if (!missing.empty()) {
                ensure_catalog();
                for (const auto& t : catalog_by_class[code]) {
                    const std::string orbit = rooted_code(t, 1);
                    if (missing.count(orbit)) {
                        stored.emplace(orbit, Entry{t, true});
                        missing.erase(orbit);
                        if (missing.empty()) break;
                    }
                }
            }
            if (level + 1 == n) {
                bool any_special = false;
                for (const auto& [orbit, v] : orbit_vertex)
                    if (stored.count(orbit)) any_special = true;
                if (!recursion_hit) {
                    if (any_special)
                        report.fallback_classes.push_back(code);
                    else
                        report.uncovered_classes.push_back(code);
                }
                for (const std::string& orbit : missing)
                    report.unreachable_special_vertices[code].push_back(orbit_vertex[orbit]);
            }
        }
        state = std::move(next);
    }

    // final shape: per class, one entry per covered special orbit, reported
    // against the representative's special vertices
    const Stock top = build_stock(n, opts);
    for (const auto& [code, rep] : top.members) {
        std::map<std::string, int> orbit_vertex;
        for (int v : special_points(rep, opts.two_path).special)
            orbit_vertex.try_emplace(rooted_code(rep, v), v);
        auto it = state.find(code);
        if (it == state.end()) continue;
        std::vector<GracefulLabelingEntry> rows;
        for (const auto& [orbit, entry] : it->second) {
            auto ov = orbit_vertex.find(orbit);
            if (ov == orbit_vertex.end()) continue;  // label 1 not on a special point
            rows.push_back({ov->second, entry.tree, entry.via_fallback});
        }
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            return a.special_vertex < b.special_vertex;
        });
        if (!rows.empty()) report.by_class.emplace(code, std::move(rows));
    }
    return report;
}

}  // namespace grace
