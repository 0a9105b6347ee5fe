#include "grace/canonical.hpp"

#include <algorithm>
#include <functional>

namespace grace {

namespace {

std::vector<std::vector<int>> adjacency(const LabeledTree& t) {
    std::vector<std::vector<int>> adj(t.n + 1);
    for (const auto& [i, j] : t.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

// subtree code of v with parent p, children ordered by code
std::string subtree_code(const std::vector<std::vector<int>>& adj, int v, int p) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != p) kids.push_back(subtree_code(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    for (const auto& k : kids) code += k;
    code += ")";
    return code;
}

}  // namespace

std::vector<int> tree_centers(const LabeledTree& t) {
    if (t.n == 1) return {1};
    auto adj = adjacency(t);
    std::vector<int> deg(t.n + 1);
    std::vector<int> layer, next;
    for (int v = 1; v <= t.n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = t.n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        next.clear();
        for (int v : layer)
            for (int w : adj[v])
                if (--deg[w] == 1) next.push_back(w);
        std::swap(layer, next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_code(const LabeledTree& t, int root) {
    if (root < 1 || root > t.n) throw std::invalid_argument("root out of range");
    return subtree_code(adjacency(t), root, 0);
}

std::string canonical_code(const LabeledTree& t) {
    std::string best;
    for (int c : tree_centers(t)) {
        std::string code = rooted_code(t, c);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::vector<int> isomorphism_map(const LabeledTree& t, const LabeledTree& u) {
    if (t.n != u.n) return {};
    const std::string code = canonical_code(t);
    if (code != canonical_code(u)) return {};

    auto adj_t = adjacency(t);
    auto adj_u = adjacency(u);

    // pair vertices by walking both trees in canonical child order; children
    // with equal subtree codes are interchangeable, so in-order pairing works
    std::vector<int> image(t.n + 1, 0);
    std::function<void(int, int, int, int)> pair_up = [&](int v, int pv, int w, int pw) {
        image[v] = w;
        auto ordered = [](const std::vector<std::vector<int>>& adj, int x, int px) {
            std::vector<std::pair<std::string, int>> kids;
            for (int y : adj[x])
                if (y != px) kids.emplace_back(subtree_code(adj, y, x), y);
            std::sort(kids.begin(), kids.end());
            return kids;
        };
        auto kt = ordered(adj_t, v, pv);
        auto ku = ordered(adj_u, w, pw);
        for (size_t k = 0; k < kt.size(); ++k) pair_up(kt[k].second, v, ku[k].second, w);
    };

    for (int ct : tree_centers(t)) {
        if (rooted_code(t, ct) != code) continue;
        for (int cu : tree_centers(u)) {
            if (rooted_code(u, cu) != code) continue;
            pair_up(ct, 0, cu, 0);
            return image;
        }
    }
    return {};
}

}  // namespace grace
