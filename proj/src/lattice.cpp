#include "grace/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "grace/canonical.hpp"
#include "grace/dsu.hpp"
#include "grace/stock.hpp"

namespace grace {

namespace {

void check_lattice_n(int n, const LatticeOptions& opts) {
    if (n < 2) throw std::invalid_argument("lattice needs at least two labels");
    if (n > opts.guard_n) throw guard_error("n over lattice guard");
}

// walks rows first_row..1 serially, extending `chosen`; dsu is nullptr when
// cycles are allowed
template <typename Leaf>
void walk_rows(int n, int row, std::vector<Edge>& chosen, UndoableDsu* dsu, Leaf&& leaf) {
    if (row == 0) {
        leaf(chosen);
        return;
    }
    for (int i = 1; i + row <= n; ++i) {
        std::size_t mark = 0;
        if (dsu) {
            mark = dsu->trail.size();
            if (!dsu->unite(i, i + row)) continue;
        }
        chosen.push_back(make_edge(i, i + row));
        walk_rows(n, row - 1, chosen, dsu, leaf);
        chosen.pop_back();
        if (dsu) dsu->undo(mark);
    }
}

bool acyclic_prefix(int n, const std::vector<Edge>& pts) {
    Dsu dsu(n + 1);
    for (const auto& [i, j] : pts)
        if (!dsu.unite(i, j)) return false;
    return true;
}

// prefixes over the top `depth` rows, in the serial enumeration order; cyclic
// prefixes are dropped when trees are required
std::vector<std::vector<Edge>> row_prefixes(int n, int depth, bool require_tree) {
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> chosen;
    std::function<void(int)> rec = [&](int row) {
        if (row == n - 1 - depth) {
            if (!require_tree || acyclic_prefix(n, chosen)) out.push_back(chosen);
            return;
        }
        for (int i = 1; i + row <= n; ++i) {
            chosen.push_back(make_edge(i, i + row));
            rec(row - 1);
            chosen.pop_back();
        }
    };
    rec(n - 1);
    return out;
}

}  // namespace

DeltaLattice build_delta_lattice(int n) {
    if (n < 2) throw std::invalid_argument("lattice needs at least two labels");
    DeltaLattice lat;
    lat.n = n;
    lat.rows.resize(n);
    for (int d = 1; d < n; ++d)
        for (int i = 1; i + d <= n; ++i) lat.rows[d].push_back(make_edge(i, i + d));
    return lat;
}

LatticePath make_lattice_path(int n, std::vector<Edge> points) {
    if (n < 2) throw std::invalid_argument("lattice needs at least two labels");
    if (points.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("path needs one pair per difference");
    for (auto& [i, j] : points) {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n || i == j) throw std::invalid_argument("pair out of range");
    }
    std::sort(points.begin(), points.end(),
              [](const Edge& a, const Edge& b) { return a.second - a.first > b.second - b.first; });
    for (int m = 0; m < n - 1; ++m)
        if (points[m].second - points[m].first != n - 1 - m)
            throw std::invalid_argument("differences must cover 1..n-1 exactly once");
    LatticePath p;
    p.n = n;
    p.points = std::move(points);
    return p;
}

bool path_is_tree(const LatticePath& p) { return is_tree(p.n, p.points); }

LabeledTree path_tree(const LatticePath& p) { return LabeledTree(p.n, p.points); }

LatticePath mirror_path(const LatticePath& p) {
    LatticePath out;
    out.n = p.n;
    out.points.reserve(p.points.size());
    for (const auto& [i, j] : p.points) out.points.push_back(make_edge(p.n - j + 1, p.n - i + 1));
    return out;
}

LatticePath star_path(int n) {
    std::vector<Edge> pts;
    for (int j = n; j >= 2; --j) pts.push_back(make_edge(1, j));
    return make_lattice_path(n, std::move(pts));
}

LatticePath path_tree_path(int n) {
    std::vector<Edge> pts;
    for (int m = 0; m <= n - 2; ++m) {
        const int i = m / 2 + 1;
        pts.push_back(make_edge(i, i + (n - 1 - m)));
    }
    return make_lattice_path(n, std::move(pts));
}

LatticePath broom_path(int n, int pendants) {
    if (pendants < 1 || pendants > n - 1)
        throw std::invalid_argument("pendant count must be in 1..n-1");
    std::vector<Edge> pts;
    for (int t = 0; t < pendants; ++t) pts.push_back(make_edge(1, n - t));
    const int m = n - pendants + 1;  // smallest label used by the straight run
    for (int t = 1; t <= m - 2; ++t) {
        const int i = (t - 1) / 2 + 2;
        pts.push_back(make_edge(i, i + (m - 1 - t)));
    }
    return make_lattice_path(n, std::move(pts));
}

std::string path_to_string(const LatticePath& p) {
    std::ostringstream os;
    for (std::size_t m = 0; m < p.points.size(); ++m) {
        if (m) os << "->";
        os << '(' << p.points[m].first << ',' << p.points[m].second << ')';
    }
    return os.str();
}

void enumerate_lattice_paths(int n, bool require_tree,
                             const std::function<void(const LatticePath&)>& emit,
                             const LatticeOptions& opts) {
    check_lattice_n(n, opts);
    std::vector<Edge> chosen;
    chosen.reserve(n - 1);
    LatticePath p;
    p.n = n;
    auto leaf = [&](const std::vector<Edge>& pts) {
        p.points = pts;
        emit(p);
    };
    if (require_tree) {
        UndoableDsu dsu(n + 1);
        walk_rows(n, n - 1, chosen, &dsu, leaf);
    } else {
        walk_rows(n, n - 1, chosen, nullptr, leaf);
    }
}

std::uint64_t count_lattice_paths(int n, bool require_tree, const LatticeOptions& opts) {
    check_lattice_n(n, opts);
    if (opts.jobs <= 1) {
        std::uint64_t count = 0;
        enumerate_lattice_paths(
            n, require_tree, [&](const LatticePath&) { ++count; }, opts);
        return count;
    }
    const int depth = std::min(3, n - 1);
    const auto prefixes = row_prefixes(n, depth, require_tree);
    std::vector<std::uint64_t> partial(prefixes.size(), 0);
    const int tasks = static_cast<int>(prefixes.size());
#if defined(_OPENMP)
#pragma omp parallel for num_threads(opts.jobs) schedule(dynamic)
#endif
    for (int t = 0; t < tasks; ++t) {
        std::vector<Edge> chosen = prefixes[t];
        std::uint64_t local = 0;
        auto leaf = [&](const std::vector<Edge>&) { ++local; };
        if (require_tree) {
            UndoableDsu dsu(n + 1);
            for (const auto& [i, j] : chosen) dsu.unite(i, j);
            walk_rows(n, n - 1 - depth, chosen, &dsu, leaf);
        } else {
            walk_rows(n, n - 1 - depth, chosen, nullptr, leaf);
        }
        partial[t] = local;
    }
    std::uint64_t total = 0;
    for (auto c : partial) total += c;
    return total;
}

CoverageReport verify_class_coverage(int n, const LatticeOptions& opts) {
    check_lattice_n(n, opts);
    CoverageReport rep;
    rep.n = n;

    struct Local {
        std::uint64_t tree_paths = 0;
        std::uint64_t self_mirror = 0;
        std::map<std::string, LatticePath> witnesses;
    };

    const int depth = opts.jobs > 1 ? std::min(3, n - 1) : 0;
    const auto prefixes = row_prefixes(n, depth, true);
    std::vector<Local> locals(prefixes.size());
    const int tasks = static_cast<int>(prefixes.size());
#if defined(_OPENMP)
#pragma omp parallel for num_threads(opts.jobs > 1 ? opts.jobs : 1) schedule(dynamic) \
    if (opts.jobs > 1)
#endif
    for (int t = 0; t < tasks; ++t) {
        Local& loc = locals[t];
        std::vector<Edge> chosen = prefixes[t];
        UndoableDsu dsu(n + 1);
        for (const auto& [i, j] : chosen) dsu.unite(i, j);
        LatticePath p;
        p.n = n;
        walk_rows(n, n - 1 - depth, chosen, &dsu, [&](const std::vector<Edge>& pts) {
            ++loc.tree_paths;
            p.points = pts;
            if (mirror_path(p) == p) ++loc.self_mirror;
            loc.witnesses.try_emplace(canonical_code(LabeledTree(n, pts)), p);
        });
    }
    for (auto& loc : locals) {
        rep.tree_paths += loc.tree_paths;
        rep.self_mirror_paths += loc.self_mirror;
        for (auto& [code, path] : loc.witnesses) rep.witnesses.try_emplace(code, path);
    }

    StockOptions sopts;
    for (const auto& [code, t] : build_stock(n, sopts).members) {
        ++rep.classes;
        if (rep.witnesses.count(code))
            ++rep.covered;
        else
            rep.missing.push_back(code);
    }
    return rep;
}

namespace {

std::string render_rows(int n, const std::vector<Edge>* marked) {
    auto cell = [&](int i, int j) {
        const bool hit =
            marked && std::find(marked->begin(), marked->end(), make_edge(i, j)) != marked->end();
        std::ostringstream os;
        os << (hit ? '[' : '(') << i << ',' << j << (hit ? ']' : ')');
        return os.str();
    };
    std::size_t width = 0;
    for (int d = 1; d < n; ++d)
        for (int i = 1; i + d <= n; ++i) width = std::max(width, cell(i, i + d).size() + 1);
    if (width % 2) ++width;

    std::ostringstream os;
    for (int d = n - 1; d >= 1; --d) {
        std::string line((d - 1) * width / 2, ' ');
        for (int i = 1; i + d <= n; ++i) {
            std::string c = cell(i, i + d);
            c.resize(width, ' ');
            line += c;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

}  // namespace

std::string render_lattice(int n) {
    if (n < 2) throw std::invalid_argument("lattice needs at least two labels");
    return render_rows(n, nullptr);
}

std::string render_path(const LatticePath& p) { return render_rows(p.n, &p.points); }

}  // namespace grace
