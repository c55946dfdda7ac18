#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umc/category.hpp"
#include "umc/errors.hpp"
#include "umc/sset.hpp"

namespace umc {

// Simplicial object in Cat: levelwise finite categories with functorial
// structure maps.
struct SFinCat {
    struct Functor {
        std::vector<int> obj;  // object map
        std::vector<int> mor;  // morphism map
    };
    int trunc = 0;
    std::vector<FinCat> levels;                  // size trunc+1
    std::vector<std::vector<Functor>> face;      // face[q][i]: q -> q-1, q >= 1
    std::vector<std::vector<Functor>> degen;     // degen[q][i]: q -> q+1, q < trunc

    void validate() const {
        auto check_functor = [](const FinCat& A, const FinCat& B, const Functor& F,
                                const char* what) {
            if ((int)F.obj.size() != A.n_objects || (int)F.mor.size() != A.mor_count())
                throw Error(std::string("SFinCat: functor arity: ") + what);
            for (int f = 0; f < A.mor_count(); ++f) {
                if (B.morphisms[F.mor[f]].src != F.obj[A.morphisms[f].src] ||
                    B.morphisms[F.mor[f]].tgt != F.obj[A.morphisms[f].tgt])
                    throw Error(std::string("SFinCat: functor src/tgt: ") + what);
            }
            for (int x = 0; x < A.n_objects; ++x)
                if (F.mor[A.identity[x]] != B.identity[F.obj[x]])
                    throw Error(std::string("SFinCat: functor identity: ") + what);
            for (int f = 0; f < A.mor_count(); ++f)
                for (int g = 0; g < A.mor_count(); ++g) {
                    if (A.then(f, g) < 0) continue;
                    if (B.then(F.mor[f], F.mor[g]) != F.mor[A.then(f, g)])
                        throw Error(std::string("SFinCat: functor composition: ") + what);
                }
        };
        for (int q = 1; q <= trunc; ++q)
            for (int i = 0; i <= q; ++i)
                check_functor(levels[q], levels[q - 1], face[q][i], "face");
        for (int q = 0; q < trunc; ++q)
            for (int i = 0; i <= q; ++i)
                check_functor(levels[q], levels[q + 1], degen[q][i], "degeneracy");
    }
};

// Bidegreewise finite bisimplicial set with explicit elements and maps.
struct BisimplicialFT {
    int trunc = 0;
    std::vector<std::vector<int>> count;  // count[p][q]
    // maps indexed [p][q][i] -> element table
    std::vector<std::vector<std::vector<std::vector<int>>>> h_face, h_degen, v_face, v_degen;
    std::vector<std::vector<std::vector<std::string>>> display;

    int hface(int p, int q, int i, int e) const { return h_face[p][q][i][e]; }
    int hdegen(int p, int q, int i, int e) const { return h_degen[p][q][i][e]; }
    int vface(int p, int q, int i, int e) const { return v_face[p][q][i][e]; }
    int vdegen(int p, int q, int i, int e) const { return v_degen[p][q][i][e]; }

    void validate() const {
        auto in_range = [&](int p, int q, int e) {
            return p >= 0 && p <= trunc && q >= 0 && q <= trunc && e >= 0 && e < count[p][q];
        };
        for (int p = 0; p <= trunc; ++p)
            for (int q = 0; q <= trunc; ++q)
                for (int e = 0; e < count[p][q]; ++e) {
                    // horizontal simplicial identities
                    if (p >= 2)
                        for (int j = 1; j <= p; ++j)
                            for (int i = 0; i < j; ++i)
                                if (hface(p - 1, q, i, hface(p, q, j, e)) !=
                                    hface(p - 1, q, j - 1, hface(p, q, i, e)))
                                    throw Error("bisimplicial: horizontal d_i d_j");
                    if (q >= 2)
                        for (int j = 1; j <= q; ++j)
                            for (int i = 0; i < j; ++i)
                                if (vface(p, q - 1, i, vface(p, q, j, e)) !=
                                    vface(p, q - 1, j - 1, vface(p, q, i, e)))
                                    throw Error("bisimplicial: vertical d_i d_j");
                    // commutation of horizontal and vertical maps
                    if (p >= 1 && q >= 1)
                        for (int i = 0; i <= p; ++i)
                            for (int j = 0; j <= q; ++j)
                                if (vface(p - 1, q, j, hface(p, q, i, e)) !=
                                    hface(p, q - 1, i, vface(p, q, j, e)))
                                    throw Error("bisimplicial: h/v faces do not commute");
                    if (p >= 1 && q < trunc)
                        for (int i = 0; i <= p; ++i)
                            for (int j = 0; j <= q; ++j)
                                if (vdegen(p - 1, q, j, hface(p, q, i, e)) !=
                                    hface(p, q + 1, i, vdegen(p, q, j, e)))
                                    throw Error("bisimplicial: h face / v degen");
                    (void)in_range;
                }
    }
};

// Levelwise nerve of a simplicial category. Elements at (p,q) are p-chains of
// composable morphisms in levels[q] (identity entries allowed); at p = 0 the
// objects themselves.
struct NerveScat {
    BisimplicialFT grid;
    // chains[p][q][e]: entries; for p = 0 one entry = object id
    std::vector<std::vector<std::vector<std::vector<int>>>> chains;
    std::vector<std::vector<std::map<std::vector<int>, int>>> index;
    std::vector<std::vector<std::vector<int>>> start_obj;  // src object per element

    int find(int p, int q, const std::vector<int>& chain) const {
        return index[p][q].at(chain);
    }
};

inline NerveScat nerve_scat(const SFinCat& SC, int d) {
    if (d > SC.trunc) throw TruncationTooLow("nerve_scat beyond category truncation");
    NerveScat out;
    BisimplicialFT& B = out.grid;
    B.trunc = d;
    B.count.assign(d + 1, std::vector<int>(d + 1, 0));
    auto resize4 = [&](auto& v) {
        v.assign(d + 1, std::vector<std::vector<std::vector<int>>>(d + 1));
    };
    resize4(B.h_face);
    resize4(B.h_degen);
    resize4(B.v_face);
    resize4(B.v_degen);
    B.display.assign(d + 1, std::vector<std::vector<std::string>>(d + 1));
    out.chains.assign(d + 1, std::vector<std::vector<std::vector<int>>>(d + 1));
    out.index.assign(d + 1, std::vector<std::map<std::vector<int>, int>>(d + 1));
    out.start_obj.assign(d + 1, std::vector<std::vector<int>>(d + 1));

    // enumerate chains
    for (int q = 0; q <= d; ++q) {
        const FinCat& C = SC.levels[q];
        // p = 0: objects
        for (int x = 0; x < C.n_objects; ++x) {
            out.index[0][q][{x}] = x;
            out.chains[0][q].push_back({x});
            out.start_obj[0][q].push_back(x);
            B.display[0][q].push_back(C.obj_display[x]);
        }
        B.count[0][q] = C.n_objects;
        for (int p = 1; p <= d; ++p) {
            std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& pre) {
                if ((int)pre.size() == p) {
                    int e = (int)out.chains[p][q].size();
                    out.index[p][q][pre] = e;
                    out.chains[p][q].push_back(pre);
                    out.start_obj[p][q].push_back(C.morphisms[pre[0]].src);
                    std::string disp;
                    for (size_t t = 0; t < pre.size(); ++t) {
                        if (t) disp += "|";
                        disp += C.morphisms[pre[t]].display;
                    }
                    B.display[p][q].push_back(disp);
                    return;
                }
                int from = pre.empty() ? -1 : C.morphisms[pre.back()].tgt;
                for (int g = 0; g < C.mor_count(); ++g) {
                    if (from >= 0 && C.morphisms[g].src != from) continue;
                    pre.push_back(g);
                    rec(pre);
                    pre.pop_back();
                }
            };
            std::vector<int> pre;
            rec(pre);
            B.count[p][q] = (int)out.chains[p][q].size();
        }
    }

    // horizontal maps: nerve faces/degeneracies within level q
    for (int q = 0; q <= d; ++q) {
        const FinCat& C = SC.levels[q];
        for (int p = 1; p <= d; ++p) {
            B.h_face[p][q].assign(p + 1, std::vector<int>(B.count[p][q]));
            for (int e = 0; e < B.count[p][q]; ++e) {
                const std::vector<int>& ch = out.chains[p][q][e];
                for (int i = 0; i <= p; ++i) {
                    if (p == 1) {
                        int obj = i == 0 ? C.morphisms[ch[0]].tgt : C.morphisms[ch[0]].src;
                        B.h_face[1][q][i][e] = out.find(0, q, {obj});
                        continue;
                    }
                    std::vector<int> nc;
                    if (i == 0)
                        nc.assign(ch.begin() + 1, ch.end());
                    else if (i == p)
                        nc.assign(ch.begin(), ch.end() - 1);
                    else {
                        nc = ch;
                        nc[i - 1] = C.then(nc[i - 1], nc[i]);
                        nc.erase(nc.begin() + i);
                    }
                    B.h_face[p][q][i][e] = out.find(p - 1, q, nc);
                }
            }
        }
        for (int p = 0; p < d; ++p) {
            B.h_degen[p][q].assign(p + 1, std::vector<int>(B.count[p][q]));
            for (int e = 0; e < B.count[p][q]; ++e) {
                for (int i = 0; i <= p; ++i) {
                    if (p == 0) {
                        int x = out.chains[0][q][e][0];
                        B.h_degen[0][q][0][e] = out.find(1, q, {C.identity[x]});
                        continue;
                    }
                    std::vector<int> nc = out.chains[p][q][e];
                    // object at position i along the chain
                    int obj = i == 0 ? C.morphisms[nc[0]].src
                                     : C.morphisms[nc[i - 1]].tgt;
                    nc.insert(nc.begin() + i, C.identity[obj]);
                    B.h_degen[p][q][i][e] = out.find(p + 1, q, nc);
                }
            }
        }
    }

    // vertical maps: structure functors applied entrywise
    for (int q = 1; q <= d; ++q) {
        for (int p = 0; p <= d; ++p) {
            B.v_face[p][q].assign(q + 1, std::vector<int>(B.count[p][q]));
            for (int i = 0; i <= q; ++i) {
                const SFinCat::Functor& F = SC.face[q][i];
                for (int e = 0; e < B.count[p][q]; ++e) {
                    std::vector<int> nc = out.chains[p][q][e];
                    if (p == 0)
                        nc[0] = F.obj[nc[0]];
                    else
                        for (int& f : nc) f = F.mor[f];
                    B.v_face[p][q][i][e] = out.find(p, q - 1, nc);
                }
            }
        }
    }
    for (int q = 0; q < d; ++q) {
        for (int p = 0; p <= d; ++p) {
            B.v_degen[p][q].assign(q + 1, std::vector<int>(B.count[p][q]));
            for (int i = 0; i <= q; ++i) {
                const SFinCat::Functor& F = SC.degen[q][i];
                for (int e = 0; e < B.count[p][q]; ++e) {
                    std::vector<int> nc = out.chains[p][q][e];
                    if (p == 0)
                        nc[0] = F.obj[nc[0]];
                    else
                        for (int& f : nc) f = F.mor[f];
                    B.v_degen[p][q][i][e] = out.find(p, q + 1, nc);
                }
            }
        }
    }
    return out;
}

// A vertically constant grid built from one category.
inline SFinCat constant_scat(const FinCat& C, int trunc) {
    SFinCat sc;
    sc.trunc = trunc;
    sc.levels.assign(trunc + 1, C);
    SFinCat::Functor idf;
    idf.obj.resize(C.n_objects);
    idf.mor.resize(C.mor_count());
    std::iota(idf.obj.begin(), idf.obj.end(), 0);
    std::iota(idf.mor.begin(), idf.mor.end(), 0);
    sc.face.assign(trunc + 1, {});
    sc.degen.assign(trunc + 1, {});
    for (int q = 1; q <= trunc; ++q) sc.face[q].assign(q + 1, idf);
    for (int q = 0; q < trunc; ++q) sc.degen[q].assign(q + 1, idf);
    return sc;
}

// Diagonal of a bisimplicial grid, with bookkeeping between grid elements and
// nondegenerate simplices of the output.
struct DiagResult {
    SSetFT space;
    std::vector<std::vector<int>> elem_of_nondeg;  // [dim][nondeg id] -> element
    std::vector<std::vector<DegSimplex>> nf_of_elem;  // [dim][element] -> normal form
};

inline DiagResult diagonal(const BisimplicialFT& B, std::optional<int> basepoint_elem = {}) {
    const int T = B.trunc;
    DiagResult out;
    out.space = SSetFT(T);
    out.elem_of_nondeg.resize(T + 1);
    out.nf_of_elem.resize(T + 1);

    auto dface = [&](int n, int i, int e) {
        return B.vface(n - 1, n, i, B.hface(n, n, i, e));
    };
    auto ddegen = [&](int n, int i, int e) {
        return B.vdegen(n, n - 1, i, B.hdegen(n - 1, n - 1, i, e));
    };

    std::vector<std::vector<int>> nondeg_of_elem(T + 1);
    for (int n = 0; n <= T; ++n) {
        nondeg_of_elem[n].assign(B.count[n][n], -1);
        out.nf_of_elem[n].resize(B.count[n][n]);
        for (int e = 0; e < B.count[n][n]; ++e) {
            // largest i with s_i d_i e == e gives the top degeneracy
            int top = -1;
            if (n >= 1)
                for (int i = n - 1; i >= 0; --i)
                    if (ddegen(n, i, dface(n, i, e)) == e) {
                        top = i;
                        break;
                    }
            if (top < 0) {
                std::vector<DegSimplex> faces;
                if (n >= 1)
                    for (int i = 0; i <= n; ++i) {
                        int fe = dface(n, i, e);
                        faces.push_back(out.nf_of_elem[n - 1][fe]);
                    }
                int id = out.space.add_simplex(n, std::move(faces), B.display[n][n][e]);
                nondeg_of_elem[n][e] = id;
                out.elem_of_nondeg[n].push_back(e);
                out.nf_of_elem[n][e] = DegSimplex{n, id, {}};
            } else {
                DegSimplex inner = out.nf_of_elem[n - 1][dface(n, top, e)];
                std::vector<int> f = degs_to_surj(inner.base_dim, inner.degs);
                f.insert(f.begin() + top, f[top]);
                out.nf_of_elem[n][e] = DegSimplex{inner.base_dim, inner.base_id,
                                                  surj_to_degs(f)};
            }
        }
    }
    if (basepoint_elem) {
        int id = nondeg_of_elem[0][*basepoint_elem];
        out.space.set_basepoint(id);
    }
    return out;
}

}  // namespace umc
