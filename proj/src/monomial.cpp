#include "grace/monomial.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace grace {

namespace {

// columns incident to each of the rows 1..n-1, in column order
std::vector<std::vector<int>> row_columns(const Graph& g) {
    std::vector<std::vector<int>> rows(g.n - 1);
    for (int c = 0; c < g.q(); ++c) {
        const auto& [i, j] = g.edges[c];
        if (i <= g.n - 1) rows[i - 1].push_back(c);
        if (j <= g.n - 1) rows[j - 1].push_back(c);
    }
    return rows;
}

void check_guards(const Graph& g, const MonomialOptions& opts) {
    if (g.n < 2) throw std::invalid_argument("need at least two vertices");
    if (g.n - 1 > opts.max_rows) throw guard_error("matrix has too many rows");
    if (raw_monomial_count(g) > opts.max_raw) throw guard_error("raw monomial count over limit");
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("isolated vertex has an empty row");
}

// key = chosen columns sorted, two bytes per column
std::string column_key(const int* cols, int m) {
    std::string key(static_cast<size_t>(m) * 2, '\0');
    for (int k = 0; k < m; ++k) {
        key[2 * k] = static_cast<char>(cols[k] & 0xff);
        key[2 * k + 1] = static_cast<char>((cols[k] >> 8) & 0xff);
    }
    return key;
}

ColumnVector key_to_vector(const std::string& key) {
    ColumnVector v(key.size() / 2);
    for (size_t k = 0; k < v.size(); ++k)
        v[k] = static_cast<uint8_t>(key[2 * k]) | (static_cast<uint8_t>(key[2 * k + 1]) << 8);
    return v;
}

struct Tally {
    uint64_t raw = 0;
    uint64_t degenerate = 0;
    std::unordered_map<std::string, uint32_t> counts;  // repeat-free vectors only
};

// enumerate rows[first..], with choice[0..first) already fixed
void tally_from(const std::vector<std::vector<int>>& rows, int first, std::vector<int>& choice,
                Tally& t) {
    const int m = static_cast<int>(rows.size());
    if (first == m) {
        ++t.raw;
        std::vector<int> sorted(choice);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            ++t.degenerate;
        } else {
            ++t.counts[column_key(sorted.data(), m)];
        }
        return;
    }
    for (int c : rows[first]) {
        choice[first] = c;
        tally_from(rows, first + 1, choice, t);
    }
}

void merge_into(Tally& into, Tally& from) {
    into.raw += from.raw;
    into.degenerate += from.degenerate;
    for (auto& [key, cnt] : from.counts) into.counts[key] += cnt;
    from.counts.clear();
}

}  // namespace

uint64_t raw_monomial_count(const Graph& g) {
    uint64_t total = 1;
    for (int v = 1; v < g.n; ++v) {
        const uint64_t d = static_cast<uint64_t>(g.degree(v));
        if (d != 0 && total > UINT64_MAX / d) return UINT64_MAX;
        total *= d;
    }
    return total;
}

void enumerate_monomials(const Graph& g, const std::function<void(const ColumnVector&)>& emit,
                         const MonomialOptions& opts) {
    check_guards(g, opts);
    auto rows = row_columns(g);
    const int m = static_cast<int>(rows.size());
    std::vector<int> choice(m);
    std::vector<int> sorted(m);
    std::function<void(int)> rec = [&](int r) {
        if (r == m) {
            sorted = choice;
            std::sort(sorted.begin(), sorted.end());
            emit(sorted);
            return;
        }
        for (int c : rows[r]) {
            choice[r] = c;
            rec(r + 1);
        }
    };
    rec(0);
}

MonomialClassification classify_monomials(const Graph& g, const MonomialOptions& opts) {
    check_guards(g, opts);
    auto rows = row_columns(g);
    const int m = static_cast<int>(rows.size());

    Tally total;
    if (opts.jobs <= 1 || m < 2) {
        // serial reference path
        std::vector<int> choice(m);
        tally_from(rows, 0, choice, total);
    } else {
#if defined(_OPENMP)
        const auto& first_row = rows[0];
        const int parts = static_cast<int>(first_row.size());
        std::vector<Tally> local(parts);
#pragma omp parallel for num_threads(opts.jobs) schedule(dynamic)
        for (int p = 0; p < parts; ++p) {
            std::vector<int> choice(m);
            choice[0] = first_row[p];
            tally_from(rows, 1, choice, local[p]);
        }
        for (auto& part : local) merge_into(total, part);
#else
        std::vector<int> choice(m);
        tally_from(rows, 0, choice, total);
#endif
    }

    MonomialClassification out;
    out.raw_count = total.raw;
    out.degenerate_count = total.degenerate;
    for (const auto& [key, cnt] : total.counts) {
        if (cnt == 1)
            out.spanning_trees.push_back(key_to_vector(key));
        else
            out.cyclic_subgraphs.emplace_back(key_to_vector(key), cnt);
    }
    std::sort(out.spanning_trees.begin(), out.spanning_trees.end());
    std::sort(out.cyclic_subgraphs.begin(), out.cyclic_subgraphs.end());
    return out;
}

ColumnSetDiagnosis diagnose_column_set(const Graph& g, const std::vector<int>& columns) {
    const int m = g.n - 1;
    if (static_cast<int>(columns.size()) != m)
        throw std::invalid_argument("need exactly n-1 columns");
    if (m > 25) throw guard_error("matrix has too many rows");
    {
        std::vector<int> check(columns);
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end())
            throw std::invalid_argument("repeated column index");
        if (check.front() < 0 || check.back() >= g.q())
            throw std::invalid_argument("column index out of range");
    }

    // m x m 0/1 submatrix: rows are vertices 1..n-1, columns as given
    std::vector<uint32_t> bits(m, 0);   // row bitmasks for GF(2) elimination
    std::vector<uint32_t> incid(m, 0);  // per row: which chosen columns touch it
    for (int k = 0; k < m; ++k) {
        const auto& [i, j] = g.edges[columns[k]];
        if (i <= m) {
            bits[i - 1] |= 1u << k;
            incid[i - 1] |= 1u << k;
        }
        if (j <= m) {
            bits[j - 1] |= 1u << k;
            incid[j - 1] |= 1u << k;
        }
    }

    ColumnSetDiagnosis out;

    // count row-by-row selections of distinct columns (the permanent)
    std::function<void(int, uint32_t)> count_sdr = [&](int r, uint32_t used) {
        if (r == m) {
            ++out.monomial_count;
            return;
        }
        uint32_t avail = incid[r] & ~used;
        while (avail) {
            const uint32_t bit = avail & (~avail + 1);
            avail ^= bit;
            count_sdr(r + 1, used | bit);
        }
    };
    count_sdr(0, 0);

    // GF(2) elimination
    {
        auto rowsets = bits;
        int rank = 0;
        for (int col = 0; col < m; ++col) {
            int pivot = -1;
            for (int r = rank; r < m; ++r)
                if (rowsets[r] & (1u << col)) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(rowsets[rank], rowsets[pivot]);
            for (int r = 0; r < m; ++r)
                if (r != rank && (rowsets[r] & (1u << col))) rowsets[r] ^= rowsets[rank];
            ++rank;
        }
        out.singular = rank < m;
    }

    // integer determinant, fraction-free (Bareiss)
    {
        std::vector<long long> a(static_cast<size_t>(m) * m, 0);
        for (int r = 0; r < m; ++r)
            for (int k = 0; k < m; ++k)
                a[static_cast<size_t>(r) * m + k] = (bits[r] >> k) & 1;
        long long sign = 1, prev = 1;
        bool zero = false;
        for (int p = 0; p < m - 1 && !zero; ++p) {
            if (a[static_cast<size_t>(p) * m + p] == 0) {
                int swap_row = -1;
                for (int r = p + 1; r < m; ++r)
                    if (a[static_cast<size_t>(r) * m + p] != 0) {
                        swap_row = r;
                        break;
                    }
                if (swap_row < 0) {
                    zero = true;
                    break;
                }
                for (int k = 0; k < m; ++k)
                    std::swap(a[static_cast<size_t>(p) * m + k],
                              a[static_cast<size_t>(swap_row) * m + k]);
                sign = -sign;
            }
            for (int r = p + 1; r < m; ++r) {
                for (int k = p + 1; k < m; ++k)
                    a[static_cast<size_t>(r) * m + k] =
                        (a[static_cast<size_t>(r) * m + k] * a[static_cast<size_t>(p) * m + p] -
                         a[static_cast<size_t>(r) * m + p] * a[static_cast<size_t>(p) * m + k]) /
                        prev;
                a[static_cast<size_t>(r) * m + p] = 0;
            }
            prev = a[static_cast<size_t>(p) * m + p];
        }
        out.det_integer = zero ? 0 : sign * a[static_cast<size_t>(m - 1) * m + (m - 1)];
    }

    return out;
}

}  // namespace grace
