#pragma once

#include <vector>

#include "umc/errors.hpp"
#include "umc/matrix.hpp"
#include "umc/sset.hpp"

namespace umc {

// Integer chain complex: rank[n] free generators per degree, boundary[n] of
// shape rank[n-1] x rank[n]. boundary[0] is kept empty.
struct ChainComplex {
    int top_degree = 0;
    std::vector<int> rank;              // size top_degree+1
    std::vector<SparseIntMatrix> boundary;  // size top_degree+1; [0] unused

    int rank_at(int n) const { return n >= 0 && n <= top_degree ? rank[n] : 0; }

    void validate_dd0() const {
        for (int n = 1; n + 1 <= top_degree; ++n)
            if (!boundary[n].compose_is_zero(boundary[n + 1]))
                throw Error("dd != 0 at degree " + std::to_string(n + 1));
    }
};

// Normalized chains: free on nondegenerate simplices, boundary = alternating
// faces with degenerate faces contributing zero.
inline ChainComplex normalized_chains(const SSetFT& X, int d) {
    if (d + 1 > X.trunc())
        throw TruncationTooLow("normalized_chains: need trunc >= d+1 for degree-d homology");
    ChainComplex C;
    C.top_degree = d + 1;
    C.rank.resize(C.top_degree + 1);
    C.boundary.resize(C.top_degree + 1);
    for (int n = 0; n <= C.top_degree; ++n) C.rank[n] = X.nondeg_count(n);
    for (int n = 1; n <= C.top_degree; ++n) {
        SparseIntMatrix B(C.rank[n - 1], C.rank[n]);
        for (int id = 0; id < C.rank[n]; ++id)
            for (int i = 0; i <= n; ++i) {
                const DegSimplex& f = X.stored_face(n, id, i);
                if (!f.nondegenerate()) continue;
                B.add(f.base_id, id, (i % 2 == 0) ? 1 : -1);
            }
        B.finalize();
        C.boundary[n] = std::move(B);
    }
    return C;
}

// Chains of X relative to a subcomplex: free on nondegenerate simplices of X
// not in A; equals the reduced normalized chains of the quotient X/A.
inline ChainComplex relative_chains(const SSetFT& X, const SubComplex& A, int d) {
    if (!is_subcomplex(X, A)) throw NotASubcomplex("relative_chains: not a subcomplex");
    if (d + 1 > X.trunc()) throw TruncationTooLow("relative_chains: trunc too low");
    ChainComplex C;
    C.top_degree = d + 1;
    C.rank.resize(C.top_degree + 1);
    C.boundary.resize(C.top_degree + 1);
    std::vector<std::vector<int>> remap(C.top_degree + 1);
    for (int n = 0; n <= C.top_degree; ++n) {
        remap[n].assign(X.nondeg_count(n), -1);
        int r = 0;
        for (int id = 0; id < X.nondeg_count(n); ++id)
            if (!A[n].count(id)) remap[n][id] = r++;
        C.rank[n] = r;
    }
    for (int n = 1; n <= C.top_degree; ++n) {
        SparseIntMatrix B(C.rank[n - 1], C.rank[n]);
        for (int id = 0; id < X.nondeg_count(n); ++id) {
            if (remap[n][id] < 0) continue;
            for (int i = 0; i <= n; ++i) {
                const DegSimplex& f = X.stored_face(n, id, i);
                if (!f.nondegenerate()) continue;
                int r = remap[n - 1][f.base_id];
                if (r < 0) continue;  // face collapsed into A
                B.add(r, remap[n][id], (i % 2 == 0) ? 1 : -1);
            }
        }
        B.finalize();
        C.boundary[n] = std::move(B);
    }
    return C;
}

// Shift degrees by one and insert the augmentation row; homology of the
// result at n+1 is reduced homology of C at n.
inline ChainComplex augmented_shift(const ChainComplex& C) {
    ChainComplex A;
    A.top_degree = C.top_degree + 1;
    A.rank.resize(A.top_degree + 1);
    A.boundary.resize(A.top_degree + 1);
    A.rank[0] = 1;
    for (int n = 0; n <= C.top_degree; ++n) A.rank[n + 1] = C.rank[n];
    SparseIntMatrix aug(1, C.rank[0]);
    for (int j = 0; j < C.rank[0]; ++j) aug.add(0, j, 1);
    aug.finalize();
    A.boundary[1] = std::move(aug);
    for (int n = 1; n <= C.top_degree; ++n) A.boundary[n + 1] = C.boundary[n];
    return A;
}

}  // namespace umc
