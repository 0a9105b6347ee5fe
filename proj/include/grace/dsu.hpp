#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace grace {

// Plain union-find over 0..n-1 with path compression.
struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];  // compress path
            x = parent[x];
        }
        return x;
    }

    // returns false if x and y were already in the same set
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

// Union-find with an undo stack, for backtracking searches.
// No path compression so that undo is a plain pop; union by size keeps
// find at O(log n), which is plenty at the sizes used here.
struct UndoableDsu {
    std::vector<int> parent;
    std::vector<int> size;
    std::vector<int> trail;  // roots that were attached, in order

    explicit UndoableDsu(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    bool same(int x, int y) const { return find(x) == find(y); }

    // returns false (and records nothing) if already joined
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (size[rx] > size[ry]) std::swap(rx, ry);
        parent[rx] = ry;
        size[ry] += size[rx];
        trail.push_back(rx);
        return true;
    }

    // rolls back to an earlier trail size captured before some unites
    void undo(std::size_t mark) {
        while (trail.size() > mark) {
            int rx = trail.back();
            trail.pop_back();
            size[parent[rx]] -= size[rx];
            parent[rx] = rx;
        }
    }
};

}  // namespace grace
