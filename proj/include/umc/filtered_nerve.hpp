#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "umc/action.hpp"
#include "umc/chain_complex.hpp"
#include "umc/homology.hpp"

namespace umc {

struct FilteredNerveJob {
    const FilteredMonoidFamily* family = nullptr;
    int length_cutoff = 1;
    int degree_cutoff = 0;
    long long budget = 1000000;

    void check() const {
        if (!family) throw Error("FilteredNerveJob: no family");
        if (length_cutoff < 1) throw Error("FilteredNerveJob: cutoff must be >= 1");
        if (degree_cutoff + 1 > family->trunc)
            throw TruncationTooLow("FilteredNerveJob: degree cutoff needs trunc >= d+1");
    }
};

namespace detail {

using Tuple = std::vector<Word>;

struct TupleHash {
    size_t operator()(const Tuple& t) const {
        size_t h = 14695981039346656037ull;
        WordHash wh;
        for (const Word& w : t) {
            h ^= wh(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline long long total_length(const Tuple& t) {
    long long L = 0;
    for (const Word& w : t) L += (long long)w.size();
    return L;
}

// d_i on a diagonal p-simplex: nerve face on the tuple, then the level-i face
// map letterwise, normalized in level p-1.
inline Tuple diag_face(const FilteredMonoidFamily& F, const Tuple& t, int p, int i) {
    Tuple u;
    u.reserve(p - 1);
    if (p == 1) return u;
    if (i == 0) {
        u.assign(t.begin() + 1, t.end());
    } else if (i == p) {
        u.assign(t.begin(), t.end() - 1);
    } else {
        u.assign(t.begin(), t.end());
        u[i - 1] = u[i - 1] * u[i];
        u.erase(u.begin() + i);
    }
    for (Word& w : u) w = F.map_word(w, F.face_map[p][i], F.levels[p - 1]);
    return u;
}

// s_i on a diagonal (p-1)-simplex.
inline Tuple diag_degen(const FilteredMonoidFamily& F, const Tuple& t, int p, int i) {
    Tuple u;
    u.reserve(p);
    for (const Word& w : t) u.push_back(F.map_word(w, F.degen_map[p - 1][i], F.levels[p]));
    u.insert(u.begin() + i, Word::one());
    return u;
}

// z degenerate iff s_i(d_i z) == z for some i; only directions with an empty
// entry at slot i can qualify.
inline bool diag_degenerate(const FilteredMonoidFamily& F, const Tuple& t, int p) {
    for (int i = 0; i < p; ++i) {
        if (!t[i].empty()) continue;
        if (diag_degen(F, diag_face(F, t, p, i), p, i) == t) return true;
    }
    return false;
}

}  // namespace detail

// Normalized chains of diag N(family) restricted to total normal-form length
// <= cutoff. Length never increases under faces, so this is a subcomplex.
struct FilteredChains {
    ChainComplex complex;
    std::vector<std::vector<detail::Tuple>> basis;  // per degree
    long long cells = 0;
};

inline FilteredChains filtered_bm_chains(const FilteredNerveJob& job) {
    job.check();
    const FilteredMonoidFamily& F = *job.family;
    const int D = job.degree_cutoff + 1;
    const int K = job.length_cutoff;

    FilteredChains out;
    out.basis.resize(D + 1);
    std::vector<std::unordered_map<detail::Tuple, int, detail::TupleHash>> index(D + 1);

    out.basis[0].push_back({});
    index[0].emplace(detail::Tuple{}, 0);
    out.cells = 1;

    for (int p = 1; p <= D; ++p) {
        // bucket the level-p ball by length
        std::vector<Word> words = ball(F.levels[p], K);
        std::vector<std::vector<Word>> by_len(K + 1);
        for (Word& w : words)
            if ((int)w.size() <= K) by_len[w.size()].push_back(std::move(w));
        detail::Tuple cur(p);
        std::function<void(int, int)> rec = [&](int slot, int remaining) {
            if (slot == p) {
                if (!detail::diag_degenerate(F, cur, p)) {
                    index[p].emplace(cur, (int)out.basis[p].size());
                    out.basis[p].push_back(cur);
                    if (++out.cells > job.budget)
                        throw CutoffOverflow(out.cells, K);
                }
                return;
            }
            for (int l = 0; l <= remaining; ++l)
                for (const Word& w : by_len[l]) {
                    cur[slot] = w;
                    rec(slot + 1, remaining - l);
                }
        };
        rec(0, K);
    }

    ChainComplex& C = out.complex;
    C.top_degree = D;
    C.rank.resize(D + 1);
    C.boundary.resize(D + 1);
    for (int p = 0; p <= D; ++p) C.rank[p] = (int)out.basis[p].size();
    for (int p = 1; p <= D; ++p) {
        SparseIntMatrix B(C.rank[p - 1], C.rank[p]);
        for (int id = 0; id < C.rank[p]; ++id) {
            for (int i = 0; i <= p; ++i) {
                detail::Tuple f = detail::diag_face(F, out.basis[p][id], p, i);
                if (detail::diag_degenerate(F, f, p - 1)) continue;
                auto it = index[p - 1].find(f);
                if (it == index[p - 1].end())
                    throw Error("filtered_bm_chains: face escaped the cutoff subcomplex");
                B.add(it->second, id, i % 2 == 0 ? 1 : -1);
            }
        }
        B.finalize();
        C.boundary[p] = std::move(B);
    }
    return out;
}

struct StabilizeResult {
    std::vector<HomologyGroup> groups;  // degrees 0..d
    int cutoff = 0;                     // confirming cutoff (groups equal at cutoff-1 too)
    long long cells = 0;                // cells at the confirming cutoff
};

// Empirical colimit: raise the cutoff until homology in all degrees <= d is
// identical for two consecutive cutoffs.
inline StabilizeResult stabilize(const FilteredMonoidFamily& family, int d, int k0,
                                 long long budget, int kmax = 32) {
    std::vector<HomologyGroup> prev;
    long long prev_cells = 0;
    for (int k = k0; k <= kmax; ++k) {
        FilteredNerveJob job;
        job.family = &family;
        job.length_cutoff = k;
        job.degree_cutoff = d;
        job.budget = budget;
        FilteredChains fc = filtered_bm_chains(job);
        std::vector<HomologyGroup> cur = homology_range(fc.complex, d);
        if (!prev.empty() && cur == prev) return StabilizeResult{cur, k, fc.cells};
        prev = std::move(cur);
        prev_cells = fc.cells;
    }
    throw CutoffOverflow(prev_cells, kmax);
}

}  // namespace umc
