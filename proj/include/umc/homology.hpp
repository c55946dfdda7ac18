#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "umc/chain_complex.hpp"
#include "umc/smith.hpp"

namespace umc {

struct HomologyGroup {
    long long betti = 0;
    std::vector<Int> torsion;  // each >= 2, in divisibility order

    bool operator==(const HomologyGroup& o) const {
        return betti == o.betti && torsion == o.torsion;
    }
    bool operator!=(const HomologyGroup& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s;
        if (betti > 0) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
        for (const Int& t : torsion) {
            if (!s.empty()) s += "+";
            s += "Z/" + t.str();
        }
        return s.empty() ? "0" : s;
    }
};

namespace detail {

// One degree of the complex during unit-pivot reduction: columns keep sorted
// (row, value) entries, rows keep an approximate column membership list.
struct WorkMatrix {
    std::vector<std::vector<std::pair<int, Int>>> col;
    std::vector<std::vector<int>> rowcols;  // lazily cleaned
    std::vector<char> col_alive, row_alive;

    void init(const SparseIntMatrix& m) {
        col.resize(m.cols());
        rowcols.assign(m.rows(), {});
        col_alive.assign(m.cols(), 1);
        row_alive.assign(m.rows(), 1);
        for (int c = 0; c < m.cols(); ++c) {
            col[c] = m.column(c);
            for (const auto& [r, v] : col[c]) rowcols[r].push_back(c);
        }
    }

    const Int* entry(int r, int c) const {
        for (const auto& [rr, v] : col[c])
            if (rr == r) return &v;
        return nullptr;
    }

    int row_nnz(int r) {
        auto& rc = rowcols[r];
        rc.erase(std::remove_if(rc.begin(), rc.end(),
                                [&](int c) { return !col_alive[c] || entry(r, c) == nullptr; }),
                 rc.end());
        std::sort(rc.begin(), rc.end());
        rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
        return (int)rc.size();
    }
};

// Cancel (row y, col x) with unit pivot in d_n; Schur-update d_n, drop row x
// of d_{n+1} and column y of d_{n-1}. Chain homotopy equivalence, so homology
// is untouched (Gaussian elimination lemma).
class ComplexReducer {
public:
    explicit ComplexReducer(const ChainComplex& C) : top_(C.top_degree) {
        mats_.resize(top_ + 1);
        for (int n = 1; n <= top_; ++n) mats_[n].init(C.boundary[n]);
        alive_.resize(top_ + 1);
        for (int n = 0; n <= top_; ++n) alive_[n].assign(C.rank[n], 1);
        // degree-0 cells have no matrix of their own when top == 0
    }

    void reduce() {
        for (int n = 1; n <= top_; ++n) reduce_degree(n);
        // unit pivots in one degree can create new ones next door
        bool progress = true;
        int guard = 0;
        while (progress && guard++ < 8) {
            progress = false;
            for (int n = 1; n <= top_; ++n)
                if (reduce_degree(n)) progress = true;
        }
    }

    // remaining live cells per degree
    std::vector<int> live_counts() const {
        std::vector<int> out(top_ + 1);
        for (int n = 0; n <= top_; ++n)
            out[n] = (int)std::count(alive_[n].begin(), alive_[n].end(), 1);
        return out;
    }

    Matrix dense_boundary(int n) const {
        std::vector<int> rmap(alive_[n - 1].size(), -1), cmap(alive_[n].size(), -1);
        int R = 0, Cc = 0;
        for (size_t i = 0; i < alive_[n - 1].size(); ++i)
            if (alive_[n - 1][i]) rmap[i] = R++;
        for (size_t i = 0; i < alive_[n].size(); ++i)
            if (alive_[n][i]) cmap[i] = Cc++;
        Matrix D(R, Cc);
        const WorkMatrix& m = mats_[n];
        for (size_t c = 0; c < m.col.size(); ++c) {
            if (!alive_[n][c]) continue;
            for (const auto& [r, v] : m.col[c])
                if (alive_[n - 1][r] && v != 0) D.at(rmap[r], cmap[c]) = v;
        }
        return D;
    }

private:
    bool reduce_degree(int n) {
        WorkMatrix& M = mats_[n];
        bool any = false;
        // queue of candidate pivot columns keyed by (cost); lazily validated
        std::vector<int> order;
        for (size_t c = 0; c < M.col.size(); ++c)
            if (alive_[n][c]) order.push_back((int)c);
        bool progress = true;
        while (progress) {
            progress = false;
            for (int c : order) {
                if (!alive_[n][c]) continue;
                int best_r = -1;
                long long best_cost = -1;
                compact(M, n, c);
                for (const auto& [r, v] : M.col[c]) {
                    if (!alive_[n - 1][r]) continue;
                    if (v != 1 && v != -1) continue;
                    long long cost =
                        (long long)(M.col[c].size() - 1) * (M.row_nnz(r) - 1);
                    if (best_r < 0 || cost < best_cost) {
                        best_r = r;
                        best_cost = cost;
                    }
                }
                if (best_r < 0) continue;
                cancel(n, best_r, c);
                any = true;
                progress = true;
            }
        }
        return any;
    }

    void compact(WorkMatrix& M, int n, int c) {
        auto& col = M.col[c];
        col.erase(std::remove_if(col.begin(), col.end(),
                                 [&](const std::pair<int, Int>& e) {
                                     return !alive_[n - 1][e.first] || e.second == 0;
                                 }),
                  col.end());
    }

    void cancel(int n, int y, int x) {
        WorkMatrix& M = mats_[n];
        Int alpha;
        for (const auto& [r, v] : M.col[x])
            if (r == y) alpha = v;
        // columns hit by row y, other than x
        M.row_nnz(y);
        std::vector<int> cols = M.rowcols[y];
        std::vector<std::pair<int, Int>> pivcol;
        for (const auto& [r, v] : M.col[x])
            if (alive_[n - 1][r] && v != 0) pivcol.emplace_back(r, v);

        for (int c : cols) {
            if (c == x || !alive_[n][c]) continue;
            const Int* beta = M.entry(y, c);
            if (!beta || *beta == 0) continue;
            Int q = *beta / alpha;  // alpha = +-1
            // col_c -= q * col_x
            merge_sub(M, n, c, pivcol, q);
        }
        // drop row x from d_{n+1}
        if (n + 1 <= top_) {
            WorkMatrix& Up = mats_[n + 1];
            if (x < (int)Up.rowcols.size()) {
                for (int c : Up.rowcols[x]) {
                    auto& col = Up.col[c];
                    col.erase(std::remove_if(col.begin(), col.end(),
                                             [&](const std::pair<int, Int>& e) {
                                                 return e.first == x;
                                             }),
                              col.end());
                }
                Up.rowcols[x].clear();
            }
        }
        alive_[n][x] = 0;
        alive_[n - 1][y] = 0;
        // column y of d_{n-1} is dropped implicitly by alive_[n-1][y] = 0
    }

    void merge_sub(WorkMatrix& M, int n, int c, const std::vector<std::pair<int, Int>>& piv,
                   const Int& q) {
        auto& col = M.col[c];
        std::vector<std::pair<int, Int>> out;
        out.reserve(col.size() + piv.size());
        size_t i = 0, j = 0;
        while (i < col.size() || j < piv.size()) {
            if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
                if (alive_[n - 1][col[i].first] && col[i].second != 0) out.push_back(col[i]);
                ++i;
            } else if (i == col.size() || piv[j].first < col[i].first) {
                Int v = -q * piv[j].second;
                if (v != 0 && alive_[n - 1][piv[j].first]) {
                    out.emplace_back(piv[j].first, std::move(v));
                    M.rowcols[piv[j].first].push_back(c);
                }
                ++j;
            } else {
                Int v = col[i].second - q * piv[j].second;
                if (v != 0 && alive_[n - 1][col[i].first])
                    out.emplace_back(col[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        col = std::move(out);
    }

    int top_;
    std::vector<WorkMatrix> mats_;
    std::vector<std::vector<char>> alive_;
};

}  // namespace detail

// H_n for all n <= dmax. Unit-pivot reduction first, Smith normal form on the
// small remainder: betti from ranks, torsion from the invariant factors of
// the incoming boundary.
inline std::vector<HomologyGroup> homology_range(const ChainComplex& C, int dmax) {
    if (dmax + 1 > C.top_degree)
        throw DegreeOutOfRange("homology in degree " + std::to_string(dmax) +
                               " needs top_degree >= " + std::to_string(dmax + 1));
    detail::ComplexReducer red(C);
    red.reduce();
    std::vector<int> live = red.live_counts();
    std::vector<Matrix> dense(C.top_degree + 1);
    std::vector<SmithResult> snf(C.top_degree + 1);
    for (int n = 1; n <= C.top_degree; ++n) {
        dense[n] = red.dense_boundary(n);
        snf[n] = smith_normal_form(dense[n]);
    }
    std::vector<HomologyGroup> out(dmax + 1);
    for (int n = 0; n <= dmax; ++n) {
        int rank_in = n + 1 <= C.top_degree ? snf[n + 1].rank : 0;
        int rank_out = n >= 1 ? snf[n].rank : 0;
        HomologyGroup g;
        g.betti = live[n] - rank_out - rank_in;
        if (n + 1 <= C.top_degree)
            for (const Int& f : snf[n + 1].factors)
                if (f > 1) g.torsion.push_back(f);
        out[n] = g;
    }
    return out;
}

inline HomologyGroup homology(const ChainComplex& C, int n) {
    return homology_range(C, n).at(n);
}

// Reduced homology; degree 0 loses one Z per the augmentation.
inline std::vector<HomologyGroup> reduced_homology_range(const ChainComplex& C, int dmax) {
    ChainComplex A = augmented_shift(C);
    detail::ComplexReducer red(A);
    red.reduce();
    std::vector<int> live = red.live_counts();
    std::vector<SmithResult> snf(A.top_degree + 1);
    for (int n = 1; n <= A.top_degree; ++n) snf[n] = smith_normal_form(red.dense_boundary(n));
    std::vector<HomologyGroup> out(dmax + 1);
    for (int n = 0; n <= dmax; ++n) {
        int deg = n + 1;  // shifted
        int rank_in = deg + 1 <= A.top_degree ? snf[deg + 1].rank : 0;
        int rank_out = snf[deg].rank;
        HomologyGroup g;
        g.betti = live[deg] - rank_out - rank_in;
        if (deg + 1 <= A.top_degree)
            for (const Int& f : snf[deg + 1].factors)
                if (f > 1) g.torsion.push_back(f);
        out[n] = g;
    }
    return out;
}

}  // namespace umc
