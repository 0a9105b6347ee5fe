#include "grace/constrained.hpp"

#include "grace/dsu.hpp"

namespace grace {

namespace {

struct GracefulSearch {
    const ModifiedDeltaLattice& lat;
    int max_degree;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    UndoableDsu dsu;
    std::vector<int> degree;
    std::vector<Edge> chosen;
    const std::function<void(const LatticePath&)>* emit = nullptr;
    std::uint64_t hits = 0;
    bool stop_on_first = false;
    bool done = false;

    GracefulSearch(const ModifiedDeltaLattice& l, const ConstrainedOptions& o)
        : lat(l), max_degree(o.max_degree), max_nodes(o.max_nodes), dsu(l.n + 1),
          degree(l.n + 1, 0) {
        chosen.reserve(l.n - 1);
    }

    bool degree_ok(int v) const { return max_degree == 0 || degree[v] < max_degree; }

    void run(int row) {
        if (done) return;
        if (row == 0) {
            ++hits;
            if (emit) {
                LatticePath p;
                p.n = lat.n;
                p.points = chosen;
                (*emit)(p);
            }
            if (stop_on_first) done = true;
            return;
        }
        for (const auto& [i, j] : lat.rows[row]) {
            if (++nodes > max_nodes) throw guard_error("search node budget exceeded");
            if (!degree_ok(i) || !degree_ok(j)) continue;
            const std::size_t mark = dsu.trail.size();
            if (!dsu.unite(i, j)) continue;
            ++degree[i];
            ++degree[j];
            chosen.push_back(make_edge(i, j));
            run(row - 1);
            chosen.pop_back();
            --degree[i];
            --degree[j];
            dsu.undo(mark);
            if (done) return;
        }
    }
};

}  // namespace

ModifiedDeltaLattice build_modified_lattice(const Graph& host) {
    if (host.n < 2) throw std::invalid_argument("host needs at least two vertices");
    ModifiedDeltaLattice lat;
    lat.n = host.n;
    lat.rows.resize(host.n);
    for (const auto& [i, j] : host.edges) lat.rows[j - i].push_back(make_edge(i, j));
    return lat;
}

SearchOutcome find_constrained_graceful_tree(const Graph& host, const ConstrainedOptions& opts,
                                             LatticePath& out, SearchStats* stats) {
    const ModifiedDeltaLattice lat = build_modified_lattice(host);
    for (int d = 1; d < lat.n; ++d)
        if (lat.rows[d].empty()) return SearchOutcome::InfeasibleEmptyRow;

    GracefulSearch search(lat, opts);
    search.stop_on_first = true;
    LatticePath found;
    std::function<void(const LatticePath&)> take = [&](const LatticePath& p) { found = p; };
    search.emit = &take;
    search.run(lat.n - 1);
    if (stats) stats->nodes = search.nodes;
    if (search.hits == 0) return SearchOutcome::Exhausted;
    out = std::move(found);
    return SearchOutcome::Found;
}

std::uint64_t enumerate_constrained_graceful_trees(
    const Graph& host, const ConstrainedOptions& opts,
    const std::function<void(const LatticePath&)>& emit, SearchStats* stats) {
    const ModifiedDeltaLattice lat = build_modified_lattice(host);
    for (int d = 1; d < lat.n; ++d)
        if (lat.rows[d].empty()) return 0;

    GracefulSearch search(lat, opts);
    search.emit = &emit;
    search.run(lat.n - 1);
    if (stats) stats->nodes = search.nodes;
    return search.hits;
}

SearchOutcome find_constrained_spanning_tree(const Graph& host, const ConstrainedOptions& opts,
                                             std::vector<Edge>& out, SearchStats* stats) {
    const int n = host.n;
    const int need = n - 1;
    std::uint64_t nodes = 0;
    UndoableDsu dsu(n + 1);
    std::vector<int> degree(n + 1, 0);
    std::vector<Edge> chosen;
    chosen.reserve(need);
    bool found = false;

    auto degree_ok = [&](int v) { return opts.max_degree == 0 || degree[v] < opts.max_degree; };

    // picks edges in index order; `from` keeps subsets canonical
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (found) return;
        if (static_cast<int>(chosen.size()) == need) {
            found = true;
            return;
        }
        const int still_needed = need - static_cast<int>(chosen.size());
        for (std::size_t e = from; e + still_needed <= host.edges.size(); ++e) {
            const auto [i, j] = host.edges[e];
            if (++nodes > opts.max_nodes) throw guard_error("search node budget exceeded");
            if (!degree_ok(i) || !degree_ok(j)) continue;
            const std::size_t mark = dsu.trail.size();
            if (!dsu.unite(i, j)) continue;
            ++degree[i];
            ++degree[j];
            chosen.push_back(host.edges[e]);
            rec(e + 1);
            if (found) return;
            chosen.pop_back();
            --degree[i];
            --degree[j];
            dsu.undo(mark);
        }
    };
    if (need == 0) found = true;
    if (!found) rec(0);
    if (stats) stats->nodes = nodes;
    if (!found) return SearchOutcome::Exhausted;
    out = chosen;
    return SearchOutcome::Found;
}

}  // namespace grace
