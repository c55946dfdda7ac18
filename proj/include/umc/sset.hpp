#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "umc/errors.hpp"
#include "umc/matrix.hpp"
#include "umc/simplex.hpp"

namespace umc {

// Finite-type truncated simplicial set: nondegenerate simplices plus
// degeneracy-encoded faces. Faces of degenerate simplices are computed
// symbolically through the simplicial identities.
class SSetFT {
public:
    struct Simplex {
        std::vector<DegSimplex> faces;  // size dim+1 for dim >= 1
        std::string display;
    };

    SSetFT() = default;
    explicit SSetFT(int trunc) : trunc_(trunc), nondeg_(trunc + 1) {}

    int trunc() const { return trunc_; }
    int nondeg_count(int dim) const {
        return dim >= 0 && dim <= trunc_ ? (int)nondeg_[dim].size() : 0;
    }
    const Simplex& simplex(int dim, int id) const { return nondeg_[dim][id]; }
    std::optional<int> basepoint() const { return basepoint_; }
    void set_basepoint(int id0) { basepoint_ = id0; }

    int add_simplex(int dim, std::vector<DegSimplex> faces, std::string display = "") {
        if (dim < 0 || dim > trunc_) throw TruncationTooLow("simplex above truncation");
        if (dim >= 1 && (int)faces.size() != dim + 1)
            throw Error("simplex of dim " + std::to_string(dim) + " needs " +
                        std::to_string(dim + 1) + " faces");
        for (const DegSimplex& f : faces) {
            if (f.dim() != dim - 1) throw Error("face has wrong dimension");
            if (f.base_dim >= dim) throw Error("face base must have strictly lower dimension");
            if (f.base_id < 0 || f.base_id >= nondeg_count(f.base_dim))
                throw Error("face references unknown simplex");
        }
        nondeg_[dim].push_back(Simplex{std::move(faces), std::move(display)});
        return (int)nondeg_[dim].size() - 1;
    }

    const DegSimplex& stored_face(int dim, int id, int i) const {
        return nondeg_[dim][id].faces[i];
    }

    // d_i of an arbitrary simplex in normal form.
    DegSimplex face(const DegSimplex& z, int i) const {
        if (z.nondegenerate()) return stored_face(z.base_dim, z.base_id, i);
        std::vector<int> f = degs_to_surj(z.base_dim, z.degs);
        const int val = f[i];
        const bool lost = (i == 0 || f[i - 1] != val) &&
                          (i + 1 == (int)f.size() || f[i + 1] != val);
        f.erase(f.begin() + i);
        if (!lost) return DegSimplex{z.base_dim, z.base_id, surj_to_degs(f)};
        // composite factors through the val-th face of the base
        for (int& v : f)
            if (v > val) --v;
        const DegSimplex& b = stored_face(z.base_dim, z.base_id, val);
        std::vector<int> fb = degs_to_surj(b.base_dim, b.degs);
        std::vector<int> g(f.size());
        for (size_t p = 0; p < f.size(); ++p) g[p] = fb[f[p]];
        return DegSimplex{b.base_dim, b.base_id, surj_to_degs(g)};
    }

    DegSimplex degenerate(const DegSimplex& z, int i) const {
        std::vector<int> f = degs_to_surj(z.base_dim, z.degs);
        f.insert(f.begin() + i, f[i]);
        return DegSimplex{z.base_dim, z.base_id, surj_to_degs(f)};
    }

    // All simplices (degenerate included) of a dimension.
    std::vector<DegSimplex> all_simplices(int dim) const {
        std::vector<DegSimplex> out;
        for (int m = 0; m <= dim; ++m) {
            for (int id = 0; id < nondeg_count(m); ++id) {
                // choose dim-m strictly decreasing degeneracy indices < dim
                std::vector<int> pick;
                enumerate_degs(dim - m, dim - 1, pick, [&](const std::vector<int>& degs) {
                    out.push_back(DegSimplex{m, id, degs});
                });
            }
        }
        return out;
    }

    void validate() const {
        if (basepoint_ && (*basepoint_ < 0 || *basepoint_ >= nondeg_count(0)))
            throw Error("basepoint out of range");
        for (int n = 2; n <= trunc_; ++n)
            for (int id = 0; id < nondeg_count(n); ++id) {
                DegSimplex z{n, id, {}};
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (face(face(z, j), i) != face(face(z, i), j - 1))
                            throw Error("simplicial identity d_i d_j fails at dim " +
                                        std::to_string(n));
            }
    }

private:
    template <typename F>
    static void enumerate_degs(int need, int maxv, std::vector<int>& pick, F&& emit) {
        if (need == 0) {
            std::vector<int> degs = pick;  // already strictly decreasing
            emit(degs);
            return;
        }
        int hi = pick.empty() ? maxv : pick.back() - 1;
        for (int v = hi; v >= need - 1; --v) {
            pick.push_back(v);
            enumerate_degs(need - 1, maxv, pick, emit);
            pick.pop_back();
        }
    }

    int trunc_ = 0;
    std::vector<std::vector<Simplex>> nondeg_{1};
    std::optional<int> basepoint_;
};

inline DegSimplex degenerate_point(int dim0_id, int dim) {
    std::vector<int> degs(dim);
    for (int i = 0; i < dim; ++i) degs[i] = dim - 1 - i;
    return DegSimplex{0, dim0_id, degs};
}

// --- standard spaces -------------------------------------------------------

inline SSetFT standard_simplex(int n, int trunc) {
    if (trunc < n) throw TruncationTooLow("standard_simplex needs trunc >= n");
    SSetFT X(trunc);
    // nondegenerate simplices = nonempty subsets of {0..n}; identify a subset
    // with its sorted vertex list
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<std::vector<int>>> by_dim(n + 1);
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v <= n; ++v)
            if (mask & (1 << v)) vs.push_back(v);
        by_dim[(int)vs.size() - 1].push_back(vs);
    }
    for (int d = 0; d <= n; ++d) {
        std::sort(by_dim[d].begin(), by_dim[d].end());
        for (const auto& vs : by_dim[d]) {
            std::vector<DegSimplex> faces;
            if (d >= 1)
                for (int i = 0; i <= d; ++i) {
                    std::vector<int> fs = vs;
                    fs.erase(fs.begin() + i);
                    faces.push_back(DegSimplex{d - 1, ids.at(fs), {}});
                }
            std::string disp;
            for (int v : vs) disp += std::to_string(v);
            int id = X.add_simplex(d, std::move(faces), disp);
            ids[vs] = id;
        }
    }
    X.set_basepoint(0);
    return X;
}

// Delta[n]/boundary: one nondegenerate simplex in dimensions 0 and n.
inline SSetFT simplicial_sphere(int n, int trunc) {
    if (trunc < n) throw TruncationTooLow("sphere needs trunc >= n");
    SSetFT X(trunc);
    int pt = X.add_simplex(0, {}, "*");
    X.set_basepoint(pt);
    if (n == 0) {
        X.add_simplex(0, {}, "a");
    } else {
        std::vector<DegSimplex> faces(n + 1, degenerate_point(pt, n - 1));
        X.add_simplex(n, std::move(faces), "cell");
    }
    return X;
}

inline SSetFT simplicial_circle(int trunc) { return simplicial_sphere(1, trunc); }

// --- subcomplexes, quotients, sums, products -------------------------------

using SubComplex = std::vector<std::set<int>>;  // nondegenerate ids per dim

inline bool is_subcomplex(const SSetFT& X, const SubComplex& A) {
    if ((int)A.size() != X.trunc() + 1) return false;
    for (int n = 0; n <= X.trunc(); ++n)
        for (int id : A[n]) {
            if (id < 0 || id >= X.nondeg_count(n)) return false;
            if (n == 0) continue;
            for (int i = 0; i <= n; ++i) {
                const DegSimplex& f = X.stored_face(n, id, i);
                if (!A[f.base_dim].count(f.base_id)) return false;
            }
        }
    return true;
}

// Collapse a nonempty subcomplex to the basepoint.
inline SSetFT quotient(const SSetFT& X, const SubComplex& A) {
    if (!is_subcomplex(X, A)) throw NotASubcomplex("quotient: A is not a subcomplex");
    if (A[0].empty()) throw NotASubcomplex("quotient: A must contain a vertex");
    SSetFT Q(X.trunc());
    std::vector<std::vector<int>> remap(X.trunc() + 1);
    int bp = Q.add_simplex(0, {}, "*");
    Q.set_basepoint(bp);
    for (int n = 0; n <= X.trunc(); ++n) {
        remap[n].assign(X.nondeg_count(n), -1);
        for (int id = 0; id < X.nondeg_count(n); ++id) {
            if (A[n].count(id)) continue;
            std::vector<DegSimplex> faces;
            if (n >= 1)
                for (int i = 0; i <= n; ++i) {
                    DegSimplex f = X.stored_face(n, id, i);
                    if (A[f.base_dim].count(f.base_id)) {
                        faces.push_back(degenerate_point(bp, n - 1));
                    } else {
                        f.base_id = remap[f.base_dim][f.base_id];
                        faces.push_back(f);
                    }
                }
            remap[n][id] = Q.add_simplex(n, std::move(faces), X.simplex(n, id).display);
        }
    }
    return Q;
}

inline SSetFT disjoint_union(const std::vector<const SSetFT*>& parts, int trunc) {
    SSetFT U(trunc);
    for (const SSetFT* Xp : parts)
        if (Xp->trunc() < trunc) throw TruncationTooLow("disjoint_union part too shallow");
    std::vector<std::vector<std::vector<int>>> remap(parts.size());
    for (int n = 0; n <= trunc; ++n) {
        for (size_t k = 0; k < parts.size(); ++k) {
            const SSetFT& X = *parts[k];
            if (n == 0) remap[k].assign(trunc + 1, {});
            remap[k][n].assign(X.nondeg_count(n), -1);
            for (int id = 0; id < X.nondeg_count(n); ++id) {
                std::vector<DegSimplex> faces;
                if (n >= 1)
                    for (int i = 0; i <= n; ++i) {
                        DegSimplex f = X.stored_face(n, id, i);
                        f.base_id = remap[k][f.base_dim][f.base_id];
                        faces.push_back(f);
                    }
                remap[k][n][id] = U.add_simplex(
                    n, std::move(faces),
                    X.simplex(n, id).display + "#" + std::to_string(k));
            }
        }
    }
    return U;
}

// Coproduct of pointed simplicial sets: basepoints identified.
inline SSetFT wedge(const std::vector<const SSetFT*>& parts, int trunc) {
    for (const SSetFT* Xp : parts)
        if (!Xp->basepoint()) throw NoBasepoint("wedge needs pointed factors");
    SSetFT W(trunc);
    int bp = W.add_simplex(0, {}, "*");
    W.set_basepoint(bp);
    std::vector<std::vector<std::vector<int>>> remap(parts.size());
    for (int n = 0; n <= trunc; ++n) {
        for (size_t k = 0; k < parts.size(); ++k) {
            const SSetFT& X = *parts[k];
            if (X.trunc() < trunc) throw TruncationTooLow("wedge part too shallow");
            if (n == 0) remap[k].assign(trunc + 1, {});
            remap[k][n].assign(X.nondeg_count(n), -1);
            for (int id = 0; id < X.nondeg_count(n); ++id) {
                if (n == 0 && id == *X.basepoint()) {
                    remap[k][0][id] = bp;
                    continue;
                }
                std::vector<DegSimplex> faces;
                if (n >= 1)
                    for (int i = 0; i <= n; ++i) {
                        DegSimplex f = X.stored_face(n, id, i);
                        f.base_id = remap[k][f.base_dim][f.base_id];
                        faces.push_back(f);
                    }
                remap[k][n][id] = W.add_simplex(
                    n, std::move(faces),
                    X.simplex(n, id).display + (parts.size() > 1 ? "#" + std::to_string(k) : ""));
            }
        }
    }
    return W;
}

// Categorical product: n-simplices are pairs of n-simplices; a pair is
// nondegenerate iff its coordinates share no degeneracy position.
class ProductSSet {
public:
    ProductSSet(const SSetFT& X, const SSetFT& Y, int trunc) : trunc_(trunc) {
        if (X.trunc() < trunc || Y.trunc() < trunc)
            throw TruncationTooLow("product factors too shallow");
        space_ = SSetFT(trunc);
        ids_.resize(trunc + 1);
        for (int n = 0; n <= trunc; ++n) {
            std::vector<DegSimplex> xs = X.all_simplices(n);
            std::vector<DegSimplex> ys = Y.all_simplices(n);
            for (const DegSimplex& a : xs)
                for (const DegSimplex& b : ys) {
                    if (shares_dup(a, b)) continue;
                    std::vector<DegSimplex> faces;
                    if (n >= 1)
                        for (int i = 0; i <= n; ++i)
                            faces.push_back(encode(X.face(a, i), Y.face(b, i), n - 1));
                    std::string disp = "(" + X.simplex(a.base_dim, a.base_id).display +
                                       "," + Y.simplex(b.base_dim, b.base_id).display + ")";
                    int id = space_.add_simplex(n, std::move(faces), disp);
                    ids_[n].emplace(key(a, b), id);
                    pairs_.resize(std::max(pairs_.size(), (size_t)n + 1));
                    pairs_[n].emplace_back(a, b);
                }
        }
        if (X.basepoint() && Y.basepoint()) {
            DegSimplex bx{0, *X.basepoint(), {}}, by{0, *Y.basepoint(), {}};
            space_.set_basepoint(ids_[0].at(key(bx, by)));
        }
    }

    const SSetFT& space() const { return space_; }

    // nondegenerate pair id for a (possibly jointly degenerate) coordinate pair
    DegSimplex encode(const DegSimplex& a, const DegSimplex& b, int n) const {
        std::vector<int> fa = degs_to_surj(a.base_dim, a.degs);
        std::vector<int> fb = degs_to_surj(b.base_dim, b.degs);
        std::vector<int> common;  // positions where both coordinates duplicate
        for (int p = 0; p + 1 <= n; ++p)
            if (fa[p] == fa[p + 1] && fb[p] == fb[p + 1]) common.push_back(p);
        std::set<int> skip;
        for (int p : common) skip.insert(p + 1);
        std::vector<int> fa0, fb0;
        for (int p = 0; p <= n; ++p) {
            if (skip.count(p)) continue;
            fa0.push_back(fa[p]);
            fb0.push_back(fb[p]);
        }
        DegSimplex a0{a.base_dim, a.base_id, surj_to_degs(fa0)};
        DegSimplex b0{b.base_dim, b.base_id, surj_to_degs(fb0)};
        std::vector<int> degs(common.rbegin(), common.rend());
        int base = ids_.at(n - (int)common.size()).at(key(a0, b0));
        return DegSimplex{n - (int)common.size(), base, degs};
    }

    const std::pair<DegSimplex, DegSimplex>& coords(int dim, int id) const {
        return pairs_[dim][id];
    }

private:
    static std::pair<DegSimplex, DegSimplex> key(const DegSimplex& a, const DegSimplex& b) {
        return {a, b};
    }
    static bool shares_dup(const DegSimplex& a, const DegSimplex& b) {
        std::vector<int> fa = degs_to_surj(a.base_dim, a.degs);
        std::vector<int> fb = degs_to_surj(b.base_dim, b.degs);
        for (size_t p = 0; p + 1 < fa.size(); ++p)
            if (fa[p] == fa[p + 1] && fb[p] == fb[p + 1]) return true;
        return false;
    }

    int trunc_;
    SSetFT space_;
    std::vector<std::map<std::pair<DegSimplex, DegSimplex>, int>> ids_;
    std::vector<std::vector<std::pair<DegSimplex, DegSimplex>>> pairs_;
};

inline SSetFT product(const SSetFT& X, const SSetFT& Y, int trunc) {
    return ProductSSet(X, Y, trunc).space();
}

// (X x Y) / (X v Y), both factors pointed.
inline SSetFT smash(const SSetFT& X, const SSetFT& Y, int trunc) {
    if (!X.basepoint() || !Y.basepoint()) throw NoBasepoint("smash needs pointed factors");
    ProductSSet P(X, Y, trunc);
    SubComplex A(trunc + 1);
    for (int n = 0; n <= trunc; ++n)
        for (int id = 0; id < P.space().nondeg_count(n); ++id) {
            const auto& [a, b] = P.coords(n, id);
            if ((a.base_dim == 0 && a.base_id == *X.basepoint()) ||
                (b.base_dim == 0 && b.base_id == *Y.basepoint()))
                A[n].insert(id);
        }
    return quotient(P.space(), A);
}

// --- chains and isomorphism ------------------------------------------------

struct ChainComplex;  // forward declaration; defined in chain_complex.hpp

// Exhaustive matching of finite simplicial sets; feasible at desk scale only.
inline bool sset_isomorphic(const SSetFT& X, const SSetFT& Y) {
    if (X.trunc() != Y.trunc()) return false;
    const int T = X.trunc();
    for (int n = 0; n <= T; ++n)
        if (X.nondeg_count(n) != Y.nondeg_count(n)) return false;
    if ((bool)X.basepoint() != (bool)Y.basepoint()) return false;

    // map[n][id] = image id in Y
    std::vector<std::vector<int>> map(T + 1);
    for (int n = 0; n <= T; ++n) map[n].assign(X.nondeg_count(n), -1);

    auto face_consistent = [&](int n, int id, int img) {
        if (n == 0) return true;
        for (int i = 0; i <= n; ++i) {
            DegSimplex fx = X.stored_face(n, id, i);
            DegSimplex fy = Y.stored_face(n, img, i);
            if (fx.base_dim != fy.base_dim || fx.degs != fy.degs) return false;
            if (map[fx.base_dim][fx.base_id] != fy.base_id) return false;
        }
        return true;
    };

    std::function<bool(int, int)> assign = [&](int n, int id) -> bool {
        if (n > T) return true;
        if (id == X.nondeg_count(n)) return assign(n + 1, 0);
        std::vector<char> used(Y.nondeg_count(n), 0);
        for (int j = 0; j < X.nondeg_count(n); ++j)
            if (j != id && map[n].size() && map[n][j] >= 0) used[map[n][j]] = 1;
        for (int img = 0; img < Y.nondeg_count(n); ++img) {
            if (used[img]) continue;
            if (n == 0 && X.basepoint() && *X.basepoint() == id && *Y.basepoint() != img)
                continue;
            if (n == 0 && X.basepoint() && *X.basepoint() != id && *Y.basepoint() == img)
                continue;
            if (!face_consistent(n, id, img)) continue;
            map[n][id] = img;
            if (assign(n, id + 1)) return true;
            map[n][id] = -1;
        }
        return false;
    };
    return assign(0, 0);
}

}  // namespace umc
