#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "umc/bisimplicial.hpp"
#include "umc/category.hpp"
#include "umc/errors.hpp"
#include "umc/fin_monoid.hpp"
#include "umc/presentation.hpp"
#include "umc/sset.hpp"

namespace umc {

// Pointed right M-set via an action table.
struct MAction {
    FinMonoid M;
    int xsize = 1;
    int basepoint = 0;
    std::vector<std::vector<int>> act;  // act[x][m]
    std::vector<std::string> xdisplay;

    int apply(int x, int m) const { return act[x][m]; }

    void validate() const {
        M.validate();
        if ((int)act.size() != xsize) throw Error("MAction: table rows");
        for (const auto& row : act) {
            if ((int)row.size() != M.size) throw Error("MAction: table cols");
            for (int v : row)
                if (v < 0 || v >= xsize) throw Error("MAction: value out of range");
        }
        for (int x = 0; x < xsize; ++x)
            if (apply(x, M.identity) != x) throw Error("MAction: unit law");
        for (int x = 0; x < xsize; ++x)
            for (int a = 0; a < M.size; ++a)
                for (int b = 0; b < M.size; ++b)
                    if (apply(apply(x, a), b) != apply(x, M.mul(a, b)))
                        throw Error("MAction: associativity");
        if (basepoint < 0 || basepoint >= xsize) throw Error("MAction: basepoint");
        for (int m = 0; m < M.size; ++m)
            if (apply(basepoint, m) != basepoint) throw Error("MAction: basepoint not fixed");
    }

    static MAction trivial(FinMonoid m, int xsize, int basepoint) {
        MAction a;
        a.M = std::move(m);
        a.xsize = xsize;
        a.basepoint = basepoint;
        a.act.assign(xsize, std::vector<int>(a.M.size));
        for (int x = 0; x < xsize; ++x)
            for (int k = 0; k < a.M.size; ++k) a.act[x][k] = x;
        for (int x = 0; x < xsize; ++x) a.xdisplay.push_back("x" + std::to_string(x));
        return a;
    }
};

// Objects are elements of X, a morphism x -> xm is the pair (x, m),
// composition multiplies the monoid coordinates.
inline FinCat action_category(const MAction& A) {
    FinCat C;
    C.n_objects = A.xsize;
    for (int x = 0; x < A.xsize; ++x)
        C.obj_display.push_back(x < (int)A.xdisplay.size() ? A.xdisplay[x]
                                                           : "x" + std::to_string(x));
    auto midx = [&](int x, int m) { return x * A.M.size + m; };
    for (int x = 0; x < A.xsize; ++x)
        for (int m = 0; m < A.M.size; ++m)
            C.morphisms.push_back(FinCat::Mor{x, A.apply(x, m),
                                              "(" + C.obj_display[x] + "," + A.M.display[m] + ")"});
    C.identity.resize(A.xsize);
    for (int x = 0; x < A.xsize; ++x) C.identity[x] = midx(x, A.M.identity);
    C.compose_then.assign(C.mor_count(), std::vector<int>(C.mor_count(), -1));
    for (int x = 0; x < A.xsize; ++x)
        for (int m = 0; m < A.M.size; ++m)
            for (int k = 0; k < A.M.size; ++k)
                C.compose_then[midx(x, m)][midx(A.apply(x, m), k)] = midx(x, A.M.mul(m, k));
    C.basepoint = A.basepoint;
    return C;
}

inline bool iso_criterion_holds(const MAction& A, int x, int m) {
    FinCat C = action_category(A);
    return is_isomorphism(C, x * A.M.size + m);
}

// Theorem hypothesis: every (x, m) admits an invertible witness k with xm = xk.
inline bool theorem_hypothesis(const MAction& A) {
    std::vector<int> inv = invertible_elements(A.M);
    for (int x = 0; x < A.xsize; ++x)
        for (int m = 0; m < A.M.size; ++m) {
            bool ok = false;
            for (int k : inv)
                if (A.apply(x, m) == A.apply(x, k)) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
    return true;
}

inline std::optional<std::pair<int, int>> hypothesis_counterexample(const MAction& A) {
    std::vector<int> inv = invertible_elements(A.M);
    for (int x = 0; x < A.xsize; ++x)
        for (int m = 0; m < A.M.size; ++m) {
            bool ok = false;
            for (int k : inv)
                if (A.apply(x, m) == A.apply(x, k)) {
                    ok = true;
                    break;
                }
            if (!ok) return std::make_pair(x, m);
        }
    return std::nullopt;
}

// Asserts the two sides of the equivalence agree; a mismatch is a bug.
inline bool hypothesis_equiv_check(const MAction& A) {
    bool hyp = theorem_hypothesis(A);
    bool etd = equivalent_to_totally_disconnected(action_category(A));
    if (hyp != etd)
        throw EquivalenceViolated("hypothesis and totally-disconnected check disagree");
    return hyp;
}

// --- simplicial structures ---------------------------------------------------

// Levelwise element sets of a truncated simplicial set, with face/degeneracy
// maps as index tables. Element 0 of each level is the degenerate basepoint
// when the space is pointed.
struct SimplicialFinSet {
    int trunc = 0;
    std::vector<std::vector<DegSimplex>> elems;
    std::vector<std::unordered_map<DegSimplex, int, DegSimplexHash>> index;
    std::vector<std::vector<std::vector<int>>> face_map;   // [n][i][e], n >= 1
    std::vector<std::vector<std::vector<int>>> degen_map;  // [n][i][e], n < trunc
    std::vector<int> basepoint;  // per level, -1 if unpointed
    std::vector<std::vector<std::string>> display;

    static SimplicialFinSet from_sset(const SSetFT& X, int trunc) {
        if (X.trunc() < trunc) throw TruncationTooLow("SimplicialFinSet: trunc too deep");
        SimplicialFinSet S;
        S.trunc = trunc;
        S.elems.resize(trunc + 1);
        S.index.resize(trunc + 1);
        S.face_map.resize(trunc + 1);
        S.degen_map.resize(trunc + 1);
        S.basepoint.assign(trunc + 1, -1);
        S.display.resize(trunc + 1);
        for (int n = 0; n <= trunc; ++n) {
            std::vector<DegSimplex> all = X.all_simplices(n);
            // put the degenerate basepoint first for stable ids
            if (X.basepoint()) {
                DegSimplex bp = degenerate_point(*X.basepoint(), n);
                std::stable_partition(all.begin(), all.end(),
                                      [&](const DegSimplex& z) { return z == bp; });
            }
            for (const DegSimplex& z : all) {
                S.index[n][z] = (int)S.elems[n].size();
                std::string d = X.simplex(z.base_dim, z.base_id).display;
                for (int dg : z.degs) d = "s" + std::to_string(dg) + d;
                S.display[n].push_back(d);
                S.elems[n].push_back(z);
            }
            if (X.basepoint()) S.basepoint[n] = S.index[n].at(degenerate_point(*X.basepoint(), n));
        }
        for (int n = 1; n <= trunc; ++n) {
            S.face_map[n].assign(n + 1, std::vector<int>(S.elems[n].size()));
            for (int i = 0; i <= n; ++i)
                for (size_t e = 0; e < S.elems[n].size(); ++e)
                    S.face_map[n][i][e] = S.index[n - 1].at(X.face(S.elems[n][e], i));
        }
        for (int n = 0; n < trunc; ++n) {
            S.degen_map[n].assign(n + 1, std::vector<int>(S.elems[n].size()));
            for (int i = 0; i <= n; ++i)
                for (size_t e = 0; e < S.elems[n].size(); ++e)
                    S.degen_map[n][i][e] = S.index[n + 1].at(X.degenerate(S.elems[n][e], i));
        }
        return S;
    }

    int size(int n) const { return (int)elems[n].size(); }
    int face(int n, int i, int e) const { return face_map[n][i][e]; }
    int degen(int n, int i, int e) const { return degen_map[n][i][e]; }
};

// Levelwise finite monoids with monoid-map structure maps.
struct SimplicialMonoid {
    int trunc = 0;
    std::vector<FinMonoid> levels;
    std::vector<std::vector<std::vector<int>>> face_map;   // [n][i][m]
    std::vector<std::vector<std::vector<int>>> degen_map;  // [n][i][m]

    static SimplicialMonoid constant(const FinMonoid& M, int trunc) {
        SimplicialMonoid S;
        S.trunc = trunc;
        S.levels.assign(trunc + 1, M);
        std::vector<int> id(M.size);
        std::iota(id.begin(), id.end(), 0);
        S.face_map.resize(trunc + 1);
        S.degen_map.resize(trunc + 1);
        for (int n = 1; n <= trunc; ++n) S.face_map[n].assign(n + 1, id);
        for (int n = 0; n < trunc; ++n) S.degen_map[n].assign(n + 1, id);
        return S;
    }

    int face(int n, int i, int m) const { return face_map[n][i][m]; }
    int degen(int n, int i, int m) const { return degen_map[n][i][m]; }

    void validate() const {
        for (const FinMonoid& m : levels) m.validate();
        auto check_hom = [](const FinMonoid& A, const FinMonoid& B, const std::vector<int>& f) {
            if (f[A.identity] != B.identity) throw Error("SimplicialMonoid: unit not preserved");
            for (int a = 0; a < A.size; ++a)
                for (int b = 0; b < A.size; ++b)
                    if (f[A.mul(a, b)] != B.mul(f[a], f[b]))
                        throw Error("SimplicialMonoid: map not a monoid hom");
        };
        for (int n = 1; n <= trunc; ++n)
            for (int i = 0; i <= n; ++i) check_hom(levels[n], levels[n - 1], face_map[n][i]);
        for (int n = 0; n < trunc; ++n)
            for (int i = 0; i <= n; ++i) check_hom(levels[n], levels[n + 1], degen_map[n][i]);
    }
};

// Pointed right action of a simplicial monoid on a simplicial finite set,
// with equivariant structure maps.
struct SMAction {
    SimplicialFinSet X;
    SimplicialMonoid M;
    std::vector<std::vector<std::vector<int>>> act;  // [n][x][m]

    int trunc() const { return X.trunc; }

    MAction level(int n) const {
        MAction a;
        a.M = M.levels[n];
        a.xsize = X.size(n);
        a.basepoint = X.basepoint[n];
        a.act = act[n];
        a.xdisplay = X.display[n];
        return a;
    }

    void validate() const {
        if (M.trunc < X.trunc) throw TruncationTooLow("SMAction: monoid truncation too low");
        M.validate();
        for (int n = 0; n <= trunc(); ++n) level(n).validate();
        // equivariance of structure maps
        for (int n = 1; n <= trunc(); ++n)
            for (int i = 0; i <= n; ++i)
                for (int x = 0; x < X.size(n); ++x)
                    for (int m = 0; m < M.levels[n].size; ++m)
                        if (X.face(n, i, act[n][x][m]) !=
                            act[n - 1][X.face(n, i, x)][M.face(n, i, m)])
                            throw Error("SMAction: faces not equivariant");
        for (int n = 0; n < trunc(); ++n)
            for (int i = 0; i <= n; ++i)
                for (int x = 0; x < X.size(n); ++x)
                    for (int m = 0; m < M.levels[n].size; ++m)
                        if (X.degen(n, i, act[n][x][m]) !=
                            act[n + 1][X.degen(n, i, x)][M.degen(n, i, m)])
                            throw Error("SMAction: degeneracies not equivariant");
    }

    static SMAction trivial(const SSetFT& Xs, const FinMonoid& Mm, int trunc) {
        SMAction a;
        a.X = SimplicialFinSet::from_sset(Xs, trunc);
        a.M = SimplicialMonoid::constant(Mm, trunc);
        a.act.resize(trunc + 1);
        for (int n = 0; n <= trunc; ++n) {
            a.act[n].assign(a.X.size(n), std::vector<int>(Mm.size));
            for (int x = 0; x < a.X.size(n); ++x)
                for (int m = 0; m < Mm.size; ++m) a.act[n][x][m] = x;
        }
        return a;
    }

    // constant simplicial structure on a single pointed action
    static SMAction constant(const MAction& A, int trunc) {
        SMAction a;
        SSetFT disc(trunc);
        for (int x = 0; x < A.xsize; ++x)
            disc.add_simplex(0, {}, x < (int)A.xdisplay.size() ? A.xdisplay[x]
                                                               : "x" + std::to_string(x));
        disc.set_basepoint(A.basepoint);
        a.X = SimplicialFinSet::from_sset(disc, trunc);
        a.M = SimplicialMonoid::constant(A.M, trunc);
        a.act.resize(trunc + 1);
        for (int n = 0; n <= trunc; ++n) {
            // level elements are degeneracies of the vertices, in vertex order
            a.act[n].assign(a.X.size(n), std::vector<int>(A.M.size));
            for (int e = 0; e < a.X.size(n); ++e) {
                const DegSimplex& z = a.X.elems[n][e];
                for (int m = 0; m < A.M.size; ++m) {
                    DegSimplex w{0, A.apply(z.base_id, m), z.degs};
                    a.act[n][e][m] = a.X.index[n].at(w);
                }
            }
        }
        return a;
    }
};

inline std::optional<HypothesisFails> hypothesis_witness(const SMAction& A) {
    for (int n = 0; n <= A.trunc(); ++n) {
        MAction lvl = A.level(n);
        if (auto ce = hypothesis_counterexample(lvl))
            return HypothesisFails(n, ce->first, ce->second,
                                   "x=" + lvl.xdisplay[ce->first] + ", m=" +
                                       lvl.M.display[ce->second] + " has no invertible witness");
    }
    return std::nullopt;
}

inline bool theorem_hypothesis(const SMAction& A) { return !hypothesis_witness(A).has_value(); }

inline SFinCat action_scat(const SMAction& A) {
    SFinCat sc;
    sc.trunc = A.trunc();
    for (int n = 0; n <= A.trunc(); ++n) sc.levels.push_back(action_category(A.level(n)));
    sc.face.assign(sc.trunc + 1, {});
    sc.degen.assign(sc.trunc + 1, {});
    auto make_functor = [&](int n, bool is_face, int i) {
        SFinCat::Functor F;
        const int msize = A.M.levels[n].size;
        const int xs = A.X.size(n);
        F.obj.resize(xs);
        F.mor.resize(xs * msize);
        for (int x = 0; x < xs; ++x) {
            int fx = is_face ? A.X.face(n, i, x) : A.X.degen(n, i, x);
            F.obj[x] = fx;
            for (int m = 0; m < msize; ++m) {
                int fm = is_face ? A.M.face(n, i, m) : A.M.degen(n, i, m);
                int tsize = A.M.levels[is_face ? n - 1 : n + 1].size;
                F.mor[x * msize + m] = fx * tsize + fm;
            }
        }
        return F;
    };
    for (int n = 1; n <= sc.trunc; ++n)
        for (int i = 0; i <= n; ++i) sc.face[n].push_back(make_functor(n, true, i));
    for (int n = 0; n < sc.trunc; ++n)
        for (int i = 0; i <= n; ++i) sc.degen[n].push_back(make_functor(n, false, i));
    return sc;
}

// --- the J^M[X] construction --------------------------------------------------

// Levelwise confluent presentations with letter-level structure maps
// (generator -> generator or the empty word).
struct FilteredMonoidFamily {
    int trunc = 0;
    std::vector<Presentation> levels;
    std::vector<std::vector<std::vector<int>>> face_map;   // [n][i][gen] -> gen or -1
    std::vector<std::vector<std::vector<int>>> degen_map;  // [n][i][gen] -> gen or -1

    Word map_word(const Word& w, const std::vector<int>& lmap, const Presentation& target) const {
        Word out;
        for (GenId g : w.letters)
            if (lmap[g] >= 0) out.letters.push_back(lmap[g]);
        return target.normalize(out);
    }

    Word face_word(int n, int i, const Word& w) const {
        return map_word(w, face_map[n][i], levels[n - 1]);
    }
    Word degen_word(int n, int i, const Word& w) const {
        return map_word(w, degen_map[n][i], levels[n + 1]);
    }

    void validate() const {
        auto check = [&](const Presentation& src, const Presentation& tgt,
                         const std::vector<int>& lmap) {
            if ((int)lmap.size() != src.gen_count())
                throw IllDefinedMap("family: letter map arity");
            std::vector<Word> gmap(src.gen_count());
            for (int g = 0; g < src.gen_count(); ++g)
                gmap[g] = lmap[g] < 0 ? Word::one() : Word::gen(lmap[g]);
            for (const RewriteRule& r : src.rules())
                if (tgt.normalize(umc::map_word(r.lhs, gmap)) !=
                    tgt.normalize(umc::map_word(r.rhs, gmap)))
                    throw IllDefinedMap("family: structure map breaks a relation");
        };
        for (int n = 1; n <= trunc; ++n)
            for (int i = 0; i <= n; ++i) check(levels[n], levels[n - 1], face_map[n][i]);
        for (int n = 0; n < trunc; ++n)
            for (int i = 0; i <= n; ++i) check(levels[n], levels[n + 1], degen_map[n][i]);
    }
};

// Single-level J^M[X]: generators (x, m) for x nonbase, m non-identity;
// relations (x,m)(xm,k) ~ (x,mk) with basepoint and identity letters erased.
struct JmxLevel {
    Presentation pres;
    std::vector<std::vector<int>> gen_of;  // [x][m] -> generator or -1
};

inline JmxLevel jmx_level(const MAction& A) {
    JmxLevel out;
    out.gen_of.assign(A.xsize, std::vector<int>(A.M.size, -1));
    std::vector<Generator> gens;
    for (int x = 0; x < A.xsize; ++x) {
        if (x == A.basepoint) continue;
        for (int m = 0; m < A.M.size; ++m) {
            if (m == A.M.identity) continue;
            out.gen_of[x][m] = (int)gens.size();
            std::string xd = x < (int)A.xdisplay.size() ? A.xdisplay[x] : std::to_string(x);
            gens.push_back(Generator{"(" + xd + "^" + A.M.display[m] + ")"});
        }
    }
    auto word_of = [&](int x, int m) {
        int g = out.gen_of[x][m];
        return g < 0 ? Word::one() : Word::gen(g);
    };
    std::vector<std::pair<Word, Word>> rels;
    for (int x = 0; x < A.xsize; ++x)
        for (int m = 0; m < A.M.size; ++m)
            for (int k = 0; k < A.M.size; ++k)
                rels.emplace_back(word_of(x, m) * word_of(A.apply(x, m), k),
                                  word_of(x, A.M.mul(m, k)));
    out.pres = Presentation::make(std::move(gens), std::move(rels));
    if (out.pres.status() != Confluence::verified)
        throw NotConfluent("J^M[X] level presentation has unresolved pairs");
    return out;
}

inline FilteredMonoidFamily jmx(const SMAction& A) {
    FilteredMonoidFamily fam;
    fam.trunc = A.trunc();
    std::vector<JmxLevel> lv;
    for (int n = 0; n <= fam.trunc; ++n) lv.push_back(jmx_level(A.level(n)));
    for (auto& l : lv) fam.levels.push_back(l.pres);
    fam.face_map.resize(fam.trunc + 1);
    fam.degen_map.resize(fam.trunc + 1);
    auto letter_map = [&](int n, bool is_face, int i) {
        const MAction src = A.level(n);
        std::vector<int> lmap(lv[n].pres.gen_count(), -1);
        for (int x = 0; x < src.xsize; ++x)
            for (int m = 0; m < src.M.size; ++m) {
                int g = lv[n].gen_of[x][m];
                if (g < 0) continue;
                int fx = is_face ? A.X.face(n, i, x) : A.X.degen(n, i, x);
                int fm = is_face ? A.M.face(n, i, m) : A.M.degen(n, i, m);
                lmap[g] = lv[is_face ? n - 1 : n + 1].gen_of[fx][fm];
            }
        return lmap;
    };
    for (int n = 1; n <= fam.trunc; ++n)
        for (int i = 0; i <= n; ++i) fam.face_map[n].push_back(letter_map(n, true, i));
    for (int n = 0; n < fam.trunc; ++n)
        for (int i = 0; i <= n; ++i) fam.degen_map[n].push_back(letter_map(n, false, i));
    fam.validate();
    return fam;
}

// J^M[X] = U[X//M], certified on a ball.
inline bool u_of_action_category_iso(const MAction& A, int radius) {
    JmxLevel j = jmx_level(A);
    ReducedUniversal u = reduced_universal_monoid(action_category(A));
    std::vector<Word> gmap(j.pres.gen_count());
    for (int x = 0; x < A.xsize; ++x)
        for (int m = 0; m < A.M.size; ++m) {
            int g = j.gen_of[x][m];
            if (g < 0) continue;
            int mor = x * A.M.size + m;
            int ug = u.gen_of_mor[mor];
            gmap[g] = ug < 0 ? Word::one() : Word::gen(ug);
        }
    return ball_isomorphic(j.pres, u.pres, gmap, radius);
}

// --- tensor product X (x) M ----------------------------------------------------

struct NamedMonoidN {};  // free monoid on one generator per copy
struct NamedMonoidZ {};  // free group on one generator per copy
using TensorCoefficient = std::variant<FinMonoid, NamedMonoidN, NamedMonoidZ>;

// Copy presentation of the coefficient monoid.
inline Presentation tensor_copy_presentation(const TensorCoefficient& M) {
    if (std::holds_alternative<NamedMonoidN>(M))
        return free_monoid({Generator{"t"}});
    if (std::holds_alternative<NamedMonoidZ>(M)) {
        std::vector<std::pair<Word, Word>> rels;
        rels.emplace_back(Word::gen(0) * Word::gen(1), Word::one());
        rels.emplace_back(Word::gen(1) * Word::gen(0), Word::one());
        return Presentation::make({Generator{"t"}, Generator{"T"}}, std::move(rels));
    }
    return std::get<FinMonoid>(M).table_presentation();
}

struct TensorFamily {
    FilteredMonoidFamily family;
    // generator ids: [level][x][copy-generator]
    std::vector<std::vector<std::vector<int>>> gen_of;
};

// One free copy of M per nonbase simplex of X (degenerate simplices
// included), levelwise free product; structure maps move copies along X.
inline TensorFamily tensor_product(const SSetFT& X, const TensorCoefficient& M, int trunc) {
    if (!X.basepoint()) throw NoBasepoint("tensor_product needs a pointed simplicial set");
    SimplicialFinSet S = SimplicialFinSet::from_sset(X, trunc);
    Presentation copy = tensor_copy_presentation(M);
    const int cg = copy.gen_count();

    TensorFamily out;
    FilteredMonoidFamily& fam = out.family;
    fam.trunc = trunc;
    out.gen_of.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        std::vector<Generator> gens;
        std::vector<std::pair<Word, Word>> rels;
        out.gen_of[n].assign(S.size(n), std::vector<int>(cg, -1));
        for (int x = 0; x < S.size(n); ++x) {
            if (x == S.basepoint[n]) continue;
            int base = (int)gens.size();
            for (int g = 0; g < cg; ++g) {
                out.gen_of[n][x][g] = base + g;
                gens.push_back(Generator{copy.generators()[g].display + "@" + S.display[n][x]});
            }
            for (const RewriteRule& r : copy.rules()) {
                Word a = r.lhs, b = r.rhs;
                for (GenId& t : a.letters) t += base;
                for (GenId& t : b.letters) t += base;
                rels.emplace_back(std::move(a), std::move(b));
            }
        }
        fam.levels.push_back(Presentation::make(std::move(gens), std::move(rels)));
        if (fam.levels.back().status() != Confluence::verified)
            throw NotConfluent("tensor level not confluent");
    }
    fam.face_map.resize(trunc + 1);
    fam.degen_map.resize(trunc + 1);
    auto letter_map = [&](int n, bool is_face, int i) {
        std::vector<int> lmap(fam.levels[n].gen_count(), -1);
        int tn = is_face ? n - 1 : n + 1;
        for (int x = 0; x < S.size(n); ++x)
            for (int g = 0; g < cg; ++g) {
                int gi = out.gen_of[n][x][g];
                if (gi < 0) continue;
                int fx = is_face ? S.face(n, i, x) : S.degen(n, i, x);
                lmap[gi] = out.gen_of[tn][fx][g];
            }
        return lmap;
    };
    for (int n = 1; n <= trunc; ++n)
        for (int i = 0; i <= n; ++i) fam.face_map[n].push_back(letter_map(n, true, i));
    for (int n = 0; n < trunc; ++n)
        for (int i = 0; i <= n; ++i) fam.degen_map[n].push_back(letter_map(n, false, i));
    fam.validate();
    return out;
}

// For trivial actions the tensor product is J^M[X], levelwise on the nose.
inline bool tensor_equals_jmx_trivial(const SSetFT& X, const FinMonoid& M, int trunc,
                                      int radius) {
    TensorFamily tf = tensor_product(X, TensorCoefficient{M}, trunc);
    SMAction triv = SMAction::trivial(X, M, trunc);
    SimplicialFinSet S = SimplicialFinSet::from_sset(X, trunc);
    for (int n = 0; n <= trunc; ++n) {
        JmxLevel lvl = jmx_level(triv.level(n));
        // (x, m) -> generator m in copy x; copy generators are the non-identity
        // elements of M in element order
        std::vector<int> elem_to_copygen(M.size, -1);
        int c = 0;
        for (int m = 0; m < M.size; ++m)
            if (m != M.identity) elem_to_copygen[m] = c++;
        std::vector<Word> gmap(lvl.pres.gen_count());
        for (int x = 0; x < S.size(n); ++x)
            for (int m = 0; m < M.size; ++m) {
                int g = lvl.gen_of[x][m];
                if (g < 0) continue;
                gmap[g] = Word::gen(tf.gen_of[n][x][elem_to_copygen[m]]);
            }
        if (!ball_isomorphic(lvl.pres, tf.family.levels[n], gmap, radius)) return false;
    }
    return true;
}

// --- M x G extension -----------------------------------------------------------

inline MAction mxg_extend(const FinMonoid& M, const FinMonoid& G, const MAction& A) {
    if (!is_group(G)) throw GNotAGroup("mxg_extend: G must be a group");
    if (A.M.size != G.size || A.M.mult != G.mult || A.M.identity != G.identity)
        throw Error("mxg_extend: A is not an action of G");
    MAction out;
    out.M = FinMonoid::product(M, G);
    out.xsize = A.xsize;
    out.basepoint = A.basepoint;
    out.xdisplay = A.xdisplay;
    out.act.assign(A.xsize, std::vector<int>(out.M.size));
    for (int x = 0; x < A.xsize; ++x)
        for (int mg = 0; mg < out.M.size; ++mg) out.act[x][mg] = A.apply(x, mg % G.size);
    return out;
}

inline SMAction mxg_extend(const FinMonoid& M, const SMAction& GA) {
    SMAction out;
    out.X = GA.X;
    const int T = GA.trunc();
    for (int n = 0; n <= T; ++n)
        if (!is_group(GA.M.levels[n])) throw GNotAGroup("mxg_extend: level monoid not a group");
    out.M.trunc = GA.M.trunc;
    out.M.face_map.resize(GA.M.trunc + 1);
    out.M.degen_map.resize(GA.M.trunc + 1);
    for (int n = 0; n <= GA.M.trunc; ++n)
        out.M.levels.push_back(FinMonoid::product(M, GA.M.levels[n]));
    for (int n = 1; n <= GA.M.trunc; ++n)
        for (int i = 0; i <= n; ++i) {
            const int gl = GA.M.levels[n].size;
            const int gl2 = GA.M.levels[n - 1].size;
            std::vector<int> f(M.size * gl);
            for (int a = 0; a < M.size; ++a)
                for (int g = 0; g < gl; ++g)
                    f[a * gl + g] = a * gl2 + GA.M.face(n, i, g);
            out.M.face_map[n].push_back(std::move(f));
        }
    for (int n = 0; n < GA.M.trunc; ++n)
        for (int i = 0; i <= n; ++i) {
            const int gl = GA.M.levels[n].size;
            const int gl2 = GA.M.levels[n + 1].size;
            std::vector<int> f(M.size * gl);
            for (int a = 0; a < M.size; ++a)
                for (int g = 0; g < gl; ++g)
                    f[a * gl + g] = a * gl2 + GA.M.degen(n, i, g);
            out.M.degen_map[n].push_back(std::move(f));
        }
    out.act.resize(T + 1);
    for (int n = 0; n <= T; ++n) {
        const int gl = GA.M.levels[n].size;
        out.act[n].assign(GA.X.size(n), std::vector<int>(M.size * gl));
        for (int x = 0; x < GA.X.size(n); ++x)
            for (int a = 0; a < M.size; ++a)
                for (int g = 0; g < gl; ++g)
                    out.act[n][x][a * gl + g] = GA.act[n][x][g];
    }
    out.validate();
    return out;
}

// --- Borel model ---------------------------------------------------------------

// N(X//M) as a bisimplicial grid plus the two distinguished subobjects: the
// basepoint-chain part N(pt//M) and the identity-chain image of X.
struct BorelModel {
    NerveScat nerve;
    // flags per (p, q, element)
    std::vector<std::vector<std::vector<char>>> in_pt;
    std::vector<std::vector<std::vector<char>>> in_x;
    int basepoint_elem00 = 0;
};

inline BorelModel borel_model(const SMAction& A, int d) {
    if (d > A.trunc()) throw TruncationTooLow("borel_model: d exceeds truncation");
    BorelModel out;
    SFinCat sc = action_scat(A);
    if (sc.trunc > d) {
        sc.trunc = d;
        sc.levels.resize(d + 1);
        sc.face.resize(d + 1);
        sc.degen.resize(d + 1);
        for (int q = d; q < (int)sc.degen.size(); ++q) sc.degen[q].clear();
    }
    out.nerve = nerve_scat(sc, d);
    const BisimplicialFT& B = out.nerve.grid;
    out.in_pt.assign(d + 1, {});
    out.in_x.assign(d + 1, {});
    for (int p = 0; p <= d; ++p) {
        out.in_pt[p].resize(d + 1);
        out.in_x[p].resize(d + 1);
        for (int q = 0; q <= d; ++q) {
            const MAction lvl = A.level(q);
            out.in_pt[p][q].assign(B.count[p][q], 0);
            out.in_x[p][q].assign(B.count[p][q], 0);
            for (int e = 0; e < B.count[p][q]; ++e) {
                const std::vector<int>& ch = out.nerve.chains[p][q][e];
                if (p == 0) {
                    out.in_pt[p][q][e] = ch[0] == lvl.basepoint;
                    out.in_x[p][q][e] = 1;  // every object is in the X image
                } else {
                    bool all_pt = true, all_id = true;
                    int obj = out.nerve.start_obj[p][q][e];
                    if (obj != lvl.basepoint) all_pt = false;
                    for (int f : ch) {
                        int x = f / lvl.M.size, m = f % lvl.M.size;
                        if (x != lvl.basepoint) all_pt = false;
                        if (m != lvl.M.identity) all_id = false;
                    }
                    out.in_pt[p][q][e] = all_pt;
                    out.in_x[p][q][e] = all_id;
                }
            }
        }
    }
    out.basepoint_elem00 = A.X.basepoint[0];
    return out;
}

}  // namespace umc
