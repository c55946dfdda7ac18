#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "umc/errors.hpp"
#include "umc/fin_monoid.hpp"
#include "umc/presentation.hpp"
#include "umc/sset.hpp"

namespace umc {

// Finite category: morphisms carry src/tgt, composition is a total table on
// composable pairs. then(f,g) = g o f, i.e. "f followed by g".
struct FinCat {
    struct Mor {
        int src, tgt;
        std::string display;
    };
    int n_objects = 0;
    std::vector<std::string> obj_display;
    std::vector<Mor> morphisms;
    std::vector<int> identity;                    // per object
    std::vector<std::vector<int>> compose_then;   // [f][g] = g o f, or -1
    std::optional<int> basepoint;                 // object

    int then(int f, int g) const { return compose_then[f][g]; }
    int mor_count() const { return (int)morphisms.size(); }

    bool is_endo_of(int f, int x) const {
        return morphisms[f].src == x && morphisms[f].tgt == x;
    }

    void validate() const {
        if ((int)identity.size() != n_objects) throw Error("FinCat: identity table size");
        for (int x = 0; x < n_objects; ++x) {
            int e = identity[x];
            if (morphisms[e].src != x || morphisms[e].tgt != x)
                throw Error("FinCat: identity src/tgt");
        }
        for (int f = 0; f < mor_count(); ++f)
            for (int g = 0; g < mor_count(); ++g) {
                int h = compose_then[f][g];
                bool composable = morphisms[f].tgt == morphisms[g].src;
                if (composable != (h >= 0)) throw Error("FinCat: composability mismatch");
                if (h >= 0 && (morphisms[h].src != morphisms[f].src ||
                               morphisms[h].tgt != morphisms[g].tgt))
                    throw Error("FinCat: composite src/tgt");
            }
        for (int f = 0; f < mor_count(); ++f) {
            if (then(identity[morphisms[f].src], f) != f || then(f, identity[morphisms[f].tgt]) != f)
                throw Error("FinCat: identity law");
        }
        for (int f = 0; f < mor_count(); ++f)
            for (int g = 0; g < mor_count(); ++g) {
                if (then(f, g) < 0) continue;
                for (int h = 0; h < mor_count(); ++h) {
                    if (then(g, h) < 0) continue;
                    if (then(then(f, g), h) != then(f, then(g, h)))
                        throw Error("FinCat: associativity");
                }
            }
        if (basepoint && (*basepoint < 0 || *basepoint >= n_objects))
            throw Error("FinCat: basepoint out of range");
    }

    // One-object category on a monoid; composition in diagram order matches
    // the monoid product, then(f,g) = f*g.
    static FinCat from_monoid(const FinMonoid& m, const std::string& objname = "*") {
        FinCat c;
        c.n_objects = 1;
        c.obj_display = {objname};
        c.identity = {m.identity};
        c.basepoint = 0;
        for (int a = 0; a < m.size; ++a) c.morphisms.push_back(Mor{0, 0, m.display[a]});
        c.compose_then.assign(m.size, std::vector<int>(m.size));
        for (int a = 0; a < m.size; ++a)
            for (int b = 0; b < m.size; ++b) c.compose_then[a][b] = m.mul(a, b);
        return c;
    }

    static FinCat discrete(int n, std::optional<int> bp = std::nullopt) {
        FinCat c;
        c.n_objects = n;
        c.compose_then.assign(n, std::vector<int>(n, -1));
        for (int x = 0; x < n; ++x) {
            c.obj_display.push_back("x" + std::to_string(x));
            c.morphisms.push_back(Mor{x, x, "1_" + std::to_string(x)});
            c.identity.push_back(x);
            c.compose_then[x][x] = x;
        }
        c.basepoint = bp;
        return c;
    }

    // Poset category 0 -> 1 (a single nonidentity arrow t).
    static FinCat arrow(std::optional<int> bp = 0) {
        FinCat c;
        c.n_objects = 2;
        c.obj_display = {"0", "1"};
        c.morphisms = {Mor{0, 0, "1_0"}, Mor{1, 1, "1_1"}, Mor{0, 1, "t"}};
        c.identity = {0, 1};
        c.compose_then.assign(3, std::vector<int>(3, -1));
        c.compose_then[0][0] = 0;
        c.compose_then[1][1] = 1;
        c.compose_then[0][2] = 2;
        c.compose_then[2][1] = 2;
        c.basepoint = bp;
        return c;
    }

    // Contractible groupoid: one isomorphism between any two of n objects.
    static FinCat contractible_groupoid(int n, std::optional<int> bp = std::nullopt) {
        FinCat c;
        c.n_objects = n;
        for (int x = 0; x < n; ++x) c.obj_display.push_back("x" + std::to_string(x));
        std::vector<std::vector<int>> id(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                id[a][b] = (int)c.morphisms.size();
                c.morphisms.push_back(Mor{a, b, "c" + std::to_string(a) + std::to_string(b)});
            }
        for (int x = 0; x < n; ++x) c.identity.push_back(id[x][x]);
        c.compose_then.assign(c.mor_count(), std::vector<int>(c.mor_count(), -1));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int d = 0; d < n; ++d) c.compose_then[id[a][b]][id[b][d]] = id[a][d];
        c.basepoint = bp;
        return c;
    }
};

inline FinCat disjoint_union(const std::vector<const FinCat*>& parts,
                             std::optional<std::pair<int, int>> bp = std::nullopt) {
    FinCat c;
    std::vector<int> obj_off(parts.size()), mor_off(parts.size());
    for (size_t k = 0; k < parts.size(); ++k) {
        obj_off[k] = c.n_objects;
        mor_off[k] = c.mor_count();
        const FinCat& p = *parts[k];
        for (int x = 0; x < p.n_objects; ++x)
            c.obj_display.push_back(p.obj_display[x] + "#" + std::to_string(k));
        for (const auto& m : p.morphisms)
            c.morphisms.push_back(
                FinCat::Mor{m.src + obj_off[k], m.tgt + obj_off[k], m.display});
        for (int x = 0; x < p.n_objects; ++x) c.identity.push_back(p.identity[x] + mor_off[k]);
        c.n_objects += p.n_objects;
    }
    c.compose_then.assign(c.mor_count(), std::vector<int>(c.mor_count(), -1));
    for (size_t k = 0; k < parts.size(); ++k) {
        const FinCat& p = *parts[k];
        for (int f = 0; f < p.mor_count(); ++f)
            for (int g = 0; g < p.mor_count(); ++g)
                if (p.then(f, g) >= 0)
                    c.compose_then[f + mor_off[k]][g + mor_off[k]] = p.then(f, g) + mor_off[k];
    }
    if (bp) c.basepoint = obj_off[bp->first] + bp->second;
    return c;
}

// --- structural operations ---------------------------------------------------

inline std::vector<int> components(const FinCat& C) {
    std::vector<int> parent(C.n_objects);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& m : C.morphisms) parent[find(m.src)] = find(m.tgt);
    std::vector<int> comp(C.n_objects);
    std::map<int, int> label;
    for (int x = 0; x < C.n_objects; ++x) {
        int r = find(x);
        auto it = label.find(r);
        if (it == label.end()) it = label.emplace(r, (int)label.size()).first;
        comp[x] = it->second;
    }
    return comp;
}

inline FinMonoid end_monoid(const FinCat& C, int x) {
    std::vector<int> endos;
    std::vector<int> idx(C.mor_count(), -1);
    for (int f = 0; f < C.mor_count(); ++f)
        if (C.is_endo_of(f, x)) {
            idx[f] = (int)endos.size();
            endos.push_back(f);
        }
    FinMonoid m;
    m.size = (int)endos.size();
    m.identity = idx[C.identity[x]];
    m.mult.assign(m.size, std::vector<int>(m.size));
    m.display.clear();
    for (int a = 0; a < m.size; ++a) m.display.push_back(C.morphisms[endos[a]].display);
    for (int a = 0; a < m.size; ++a)
        for (int b = 0; b < m.size; ++b) m.mult[a][b] = idx[C.then(endos[a], endos[b])];
    m.validate();
    return m;
}

inline bool is_isomorphism(const FinCat& C, int f) {
    int s = C.morphisms[f].src, t = C.morphisms[f].tgt;
    for (int g = 0; g < C.mor_count(); ++g) {
        if (C.morphisms[g].src != t || C.morphisms[g].tgt != s) continue;
        if (C.then(f, g) == C.identity[s] && C.then(g, f) == C.identity[t]) return true;
    }
    return false;
}

inline bool objects_isomorphic(const FinCat& C, int x, int y) {
    if (x == y) return true;
    for (int f = 0; f < C.mor_count(); ++f)
        if (C.morphisms[f].src == x && C.morphisms[f].tgt == y && is_isomorphism(C, f))
            return true;
    return false;
}

// Every pair of objects in the same connected component isomorphic.
inline bool equivalent_to_totally_disconnected(const FinCat& C) {
    std::vector<int> comp = components(C);
    for (int x = 0; x < C.n_objects; ++x)
        for (int y = x + 1; y < C.n_objects; ++y)
            if (comp[x] == comp[y] && !objects_isomorphic(C, x, y)) return false;
    return true;
}

// Full subcategory on one representative per isomorphism class; the
// independent route for the totally-disconnected check.
inline FinCat skeleton(const FinCat& C) {
    std::vector<int> rep(C.n_objects, -1);
    std::vector<int> reps;
    for (int x = 0; x < C.n_objects; ++x) {
        for (int r : reps)
            if (objects_isomorphic(C, r, x)) {
                rep[x] = r;
                break;
            }
        if (rep[x] < 0) {
            rep[x] = x;
            reps.push_back(x);
        }
    }
    std::vector<int> obj_new(C.n_objects, -1);
    FinCat S;
    S.n_objects = (int)reps.size();
    for (size_t i = 0; i < reps.size(); ++i) {
        obj_new[reps[i]] = (int)i;
        S.obj_display.push_back(C.obj_display[reps[i]]);
    }
    std::vector<int> mor_new(C.mor_count(), -1);
    for (int f = 0; f < C.mor_count(); ++f) {
        const auto& m = C.morphisms[f];
        if (obj_new[m.src] < 0 || obj_new[m.tgt] < 0) continue;
        mor_new[f] = S.mor_count();
        S.morphisms.push_back(FinCat::Mor{obj_new[m.src], obj_new[m.tgt], m.display});
    }
    S.identity.assign(S.n_objects, -1);
    for (int r : reps) S.identity[obj_new[r]] = mor_new[C.identity[r]];
    S.compose_then.assign(S.mor_count(), std::vector<int>(S.mor_count(), -1));
    for (int f = 0; f < C.mor_count(); ++f) {
        if (mor_new[f] < 0) continue;
        for (int g = 0; g < C.mor_count(); ++g) {
            if (mor_new[g] < 0 || C.then(f, g) < 0) continue;
            S.compose_then[mor_new[f]][mor_new[g]] = mor_new[C.then(f, g)];
        }
    }
    return S;
}

// --- nerve -------------------------------------------------------------------

// Chains of composable morphisms; nondegenerate = identity-free. Faces that
// produce identities are re-encoded through the degeneracy normal form.
class NerveBuilder {
public:
    NerveBuilder(const FinCat& C, int d) : C_(C), space_(d) {
        ids_.resize(d + 1);
        chains_.resize(d + 1);
        for (int x = 0; x < C.n_objects; ++x) {
            int id = space_.add_simplex(0, {}, C.obj_display[x]);
            ids_[0][{x}] = id;
            chains_[0].push_back({x});
        }
        if (C.basepoint) space_.set_basepoint(*C.basepoint);
        for (int n = 1; n <= d; ++n)
            for (int f = 0; f < C_.mor_count(); ++f)
                if (!is_identity(f)) extend(n, {f});
    }

    SSetFT take() { return std::move(space_); }
    const SSetFT& space() const { return space_; }

    // chain entries are morphisms; chains_[0] holds objects
    const std::vector<int>& chain_of(int dim, int id) const { return chains_[dim][id]; }

    // normal form of an arbitrary chain (identity entries allowed)
    DegSimplex encode_chain_at(std::vector<int> chain, int start_obj) const {
        std::vector<int> degs;
        for (;;) {
            int j = -1;
            for (int p = (int)chain.size() - 1; p >= 0; --p)
                if (is_identity(chain[p])) {
                    j = p;
                    break;
                }
            if (j < 0) break;
            degs.push_back(j);
            chain.erase(chain.begin() + j);
        }
        int m = (int)chain.size();
        int base = m == 0 ? ids_.at(0).at({start_obj}) : ids_.at(m).at(chain);
        return DegSimplex{m, base, degs};
    }

private:
    bool is_identity(int f) const { return C_.identity[C_.morphisms[f].src] == f; }

    void extend(int n, std::vector<int> prefix) {
        if ((int)prefix.size() == n) {
            std::vector<DegSimplex> faces;
            for (int i = 0; i <= n; ++i) faces.push_back(face_chain(prefix, i));
            std::string disp;
            for (size_t t = 0; t < prefix.size(); ++t) {
                if (t) disp += "|";
                disp += C_.morphisms[prefix[t]].display;
            }
            int id = space_.add_simplex(n, std::move(faces), disp);
            ids_[n][prefix] = id;
            chains_[n].push_back(prefix);
            return;
        }
        int last = prefix.back();
        for (int g = 0; g < C_.mor_count(); ++g)
            if (!is_identity(g) && C_.morphisms[g].src == C_.morphisms[last].tgt) {
                prefix.push_back(g);
                extend(n, prefix);
                prefix.pop_back();
            }
    }

    DegSimplex face_chain(const std::vector<int>& chain, int i) const {
        const int n = (int)chain.size();
        if (n == 1) {
            int obj = i == 0 ? C_.morphisms[chain[0]].tgt : C_.morphisms[chain[0]].src;
            return DegSimplex{0, ids_.at(0).at({obj}), {}};
        }
        std::vector<int> out;
        if (i == 0) {
            out.assign(chain.begin() + 1, chain.end());
        } else if (i == n) {
            out.assign(chain.begin(), chain.end() - 1);
        } else {
            out.assign(chain.begin(), chain.end());
            int comp = C_.then(out[i - 1], out[i]);
            out[i - 1] = comp;
            out.erase(out.begin() + i);
        }
        int start = C_.morphisms[out[0]].src;
        return encode_chain_at(out, start);
    }

    const FinCat& C_;
    SSetFT space_;
    std::vector<std::map<std::vector<int>, int>> ids_;
    std::vector<std::vector<std::vector<int>>> chains_;
};

inline SSetFT nerve(const FinCat& C, int d) { return NerveBuilder(C, d).take(); }

// --- universal monoids -------------------------------------------------------

// U(C): generators all morphisms; identities die, composable pairs multiply.
inline Presentation universal_monoid(const FinCat& C) {
    std::vector<Generator> gens;
    for (const auto& m : C.morphisms) gens.push_back(Generator{m.display});
    std::vector<std::pair<Word, Word>> rels;
    for (int x = 0; x < C.n_objects; ++x)
        rels.emplace_back(Word::gen(C.identity[x]), Word::one());
    for (int f = 0; f < C.mor_count(); ++f)
        for (int g = 0; g < C.mor_count(); ++g) {
            int h = C.then(f, g);
            if (h < 0) continue;
            rels.emplace_back(Word::gen(f) * Word::gen(g), Word::gen(h));
        }
    return Presentation::make(std::move(gens), std::move(rels));
}

// U[C]: U(C) with the basepoint endomorphisms killed. Returns the
// presentation plus the generator table (morphism id -> generator or -1).
struct ReducedUniversal {
    Presentation pres;
    std::vector<int> gen_of_mor;  // -1 for basepoint endomorphisms
};

inline ReducedUniversal reduced_universal_monoid(const FinCat& C) {
    if (!C.basepoint) throw NoBasepoint("reduced universal monoid needs a pointed category");
    const int pt = *C.basepoint;
    ReducedUniversal out;
    out.gen_of_mor.assign(C.mor_count(), -1);
    std::vector<Generator> gens;
    for (int f = 0; f < C.mor_count(); ++f) {
        if (C.is_endo_of(f, pt)) continue;
        out.gen_of_mor[f] = (int)gens.size();
        gens.push_back(Generator{C.morphisms[f].display});
    }
    auto word_of = [&](int f) {
        return out.gen_of_mor[f] < 0 ? Word::one() : Word::gen(out.gen_of_mor[f]);
    };
    std::vector<std::pair<Word, Word>> rels;
    for (int x = 0; x < C.n_objects; ++x)
        rels.emplace_back(word_of(C.identity[x]), Word::one());
    for (int f = 0; f < C.mor_count(); ++f)
        for (int g = 0; g < C.mor_count(); ++g) {
            int h = C.then(f, g);
            if (h < 0) continue;
            rels.emplace_back(word_of(f) * word_of(g), word_of(h));
        }
    out.pres = Presentation::make(std::move(gens), std::move(rels));
    return out;
}

// Functor data into a monoid-as-category. Checks Prop-style universal
// property: psi kills End(pt) and factors uniquely through U[C].
inline bool verify_universal_property(const FinCat& C, const FinMonoid& M,
                                      const std::vector<int>& psi) {
    if ((int)psi.size() != C.mor_count()) throw NotAFunctor("psi has wrong arity");
    for (int f = 0; f < C.mor_count(); ++f)
        if (psi[f] < 0 || psi[f] >= M.size) throw NotAFunctor("psi out of range");
    for (int x = 0; x < C.n_objects; ++x)
        if (psi[C.identity[x]] != M.identity) throw NotAFunctor("psi(1_X) != 1");
    for (int f = 0; f < C.mor_count(); ++f)
        for (int g = 0; g < C.mor_count(); ++g) {
            int h = C.then(f, g);
            if (h < 0) continue;
            if (psi[h] != M.mul(psi[f], psi[g]))
                throw NotAFunctor("psi does not respect composition");
        }
    if (!C.basepoint) throw NoBasepoint("universal property needs a pointed category");
    for (int f = 0; f < C.mor_count(); ++f)
        if (C.is_endo_of(f, *C.basepoint) && psi[f] != M.identity)
            throw DoesNotKillEndos("psi must send End(pt) to 1");
    // induced assignment on U[C] generators must respect all rules
    ReducedUniversal ru = reduced_universal_monoid(C);
    std::vector<int> gen_val(ru.pres.gen_count(), M.identity);
    for (int f = 0; f < C.mor_count(); ++f)
        if (ru.gen_of_mor[f] >= 0) gen_val[ru.gen_of_mor[f]] = psi[f];
    auto eval = [&](const Word& w) {
        int v = M.identity;
        for (GenId g : w.letters) v = M.mul(v, gen_val[g]);
        return v;
    };
    for (const RewriteRule& r : ru.pres.rules())
        if (eval(r.lhs) != eval(r.rhs)) return false;
    return true;
}

// --- Prop 3.3-style wedge decomposition ---------------------------------------

struct WedgeDecomposition {
    FinCat wedge;                 // End_C(x) v iso categories, as one category
    std::vector<int> functor_mor; // wedge morphism -> C morphism
    bool bijective = false;
};

// C connected and equivalent to a one-object category; iso_to[y] an
// isomorphism x -> y for every y != x (and identity at x). The wedge category
// has morphisms c_z o e o c_y^{-1} indexed by (y, z, e in End(x)).
inline WedgeDecomposition wedge_decompose(const FinCat& C, int x, std::vector<int> iso_to) {
    std::vector<int> comp = components(C);
    for (int y = 0; y < C.n_objects; ++y)
        if (comp[y] != comp[x])
            throw NotConnectedOrNotEquivalent("wedge_decompose needs a connected category");
    if ((int)iso_to.size() != C.n_objects) throw BadIsoFamily("iso family has wrong arity");
    std::vector<int> iso_from(C.n_objects, -1);
    for (int y = 0; y < C.n_objects; ++y) {
        int c = iso_to[y];
        if (y == x) {
            if (c != C.identity[x]) throw BadIsoFamily("family must pick 1_x at x");
        }
        if (C.morphisms[c].src != x || C.morphisms[c].tgt != y || !is_isomorphism(C, c))
            throw BadIsoFamily("c_y is not an isomorphism x -> y");
        for (int g = 0; g < C.mor_count(); ++g)
            if (C.morphisms[g].src == y && C.morphisms[g].tgt == x &&
                C.then(c, g) == C.identity[x] && C.then(g, c) == C.identity[y])
                iso_from[y] = g;
        if (iso_from[y] < 0) throw BadIsoFamily("no inverse for c_y");
    }

    FinMonoid endx = end_monoid(C, x);
    std::vector<int> endo_mor;
    for (int f = 0; f < C.mor_count(); ++f)
        if (C.is_endo_of(f, x)) endo_mor.push_back(f);

    WedgeDecomposition out;
    FinCat& W = out.wedge;
    W.n_objects = C.n_objects;
    W.obj_display = C.obj_display;
    W.identity.assign(C.n_objects, -1);
    W.basepoint = x;
    const int E = endx.size;
    auto widx = [&](int y, int z, int e) { return (y * C.n_objects + z) * E + e; };
    for (int y = 0; y < C.n_objects; ++y)
        for (int z = 0; z < C.n_objects; ++z)
            for (int e = 0; e < E; ++e) {
                W.morphisms.push_back(FinCat::Mor{
                    y, z, "w(" + std::to_string(y) + "," + std::to_string(z) + "," +
                              endx.display[e] + ")"});
                // gamma(d) = c_z o e o c_y^{-1} computed in C
                int m = C.then(iso_from[y], endo_mor[e]);
                m = C.then(m, iso_to[z]);
                out.functor_mor.push_back(m);
            }
    for (int y = 0; y < C.n_objects; ++y) W.identity[y] = widx(y, y, endx.identity);
    W.compose_then.assign(W.mor_count(), std::vector<int>(W.mor_count(), -1));
    for (int y = 0; y < C.n_objects; ++y)
        for (int z = 0; z < C.n_objects; ++z)
            for (int e = 0; e < E; ++e)
                for (int w2 = 0; w2 < C.n_objects; ++w2)
                    for (int e2 = 0; e2 < E; ++e2)
                        W.compose_then[widx(y, z, e)][widx(z, w2, e2)] =
                            widx(y, w2, endx.mul(e, e2));
    W.validate();

    // functoriality + bijectivity on objects and morphisms
    for (int f = 0; f < W.mor_count(); ++f)
        for (int g = 0; g < W.mor_count(); ++g) {
            if (W.then(f, g) < 0) continue;
            if (C.then(out.functor_mor[f], out.functor_mor[g]) !=
                out.functor_mor[W.then(f, g)])
                throw NotConnectedOrNotEquivalent("wedge functor not functorial");
        }
    std::set<int> image(out.functor_mor.begin(), out.functor_mor.end());
    out.bijective = (int)image.size() == W.mor_count() && W.mor_count() == C.mor_count();
    return out;
}

// --- Prop 4.3: U[C] = U[A0] * free product of U(A_i) --------------------------

inline bool reduced_u_coproduct_decomposition(const FinCat& C, int radius) {
    if (!C.basepoint) throw NoBasepoint("needs a pointed category");
    std::vector<int> comp = components(C);
    int c0 = comp[*C.basepoint];
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;

    // split C into full subcategories per component
    std::vector<std::vector<int>> objs(ncomp);
    for (int xx = 0; xx < C.n_objects; ++xx) objs[comp[xx]].push_back(xx);
    std::vector<Presentation> factors;
    // generator of the product presentation, indexed by C morphism
    std::vector<std::pair<int, int>> f_gen(C.mor_count(), {-1, -1});  // (factor, gen)
    std::vector<int> order;  // factor order: basepoint component first
    order.push_back(c0);
    for (int k = 0; k < ncomp; ++k)
        if (k != c0) order.push_back(k);
    for (int oi = 0; oi < ncomp; ++oi) {
        int k = order[oi];
        // build the full subcategory
        std::vector<int> obj_new(C.n_objects, -1);
        FinCat A;
        A.n_objects = (int)objs[k].size();
        for (size_t i = 0; i < objs[k].size(); ++i) {
            obj_new[objs[k][i]] = (int)i;
            A.obj_display.push_back(C.obj_display[objs[k][i]]);
        }
        std::vector<int> mor_new(C.mor_count(), -1), mor_old;
        for (int f = 0; f < C.mor_count(); ++f)
            if (obj_new[C.morphisms[f].src] >= 0) {
                mor_new[f] = A.mor_count();
                mor_old.push_back(f);
                A.morphisms.push_back(FinCat::Mor{obj_new[C.morphisms[f].src],
                                                  obj_new[C.morphisms[f].tgt],
                                                  C.morphisms[f].display});
            }
        A.identity.assign(A.n_objects, -1);
        for (int xx : objs[k]) A.identity[obj_new[xx]] = mor_new[C.identity[xx]];
        A.compose_then.assign(A.mor_count(), std::vector<int>(A.mor_count(), -1));
        for (int f = 0; f < A.mor_count(); ++f)
            for (int g = 0; g < A.mor_count(); ++g) {
                int h = C.then(mor_old[f], mor_old[g]);
                if (h >= 0) A.compose_then[f][g] = mor_new[h];
            }
        if (k == c0) {
            A.basepoint = obj_new[*C.basepoint];
            ReducedUniversal ru = reduced_universal_monoid(A);
            for (int f = 0; f < A.mor_count(); ++f)
                if (ru.gen_of_mor[f] >= 0) f_gen[mor_old[f]] = {oi, ru.gen_of_mor[f]};
            factors.push_back(ru.pres);
        } else {
            A.basepoint.reset();
            Presentation u = universal_monoid(A);
            for (int f = 0; f < A.mor_count(); ++f) f_gen[mor_old[f]] = {oi, f};
            factors.push_back(u);
        }
    }
    Presentation prod = free_product(factors);
    std::vector<int> offset(factors.size(), 0);
    for (size_t i = 1; i < factors.size(); ++i)
        offset[i] = offset[i - 1] + factors[i - 1].gen_count();

    ReducedUniversal whole = reduced_universal_monoid(C);
    std::vector<Word> gmap(whole.pres.gen_count());
    for (int f = 0; f < C.mor_count(); ++f) {
        if (whole.gen_of_mor[f] < 0) continue;
        auto [fac, gen] = f_gen[f];
        gmap[whole.gen_of_mor[f]] = Word::gen(offset[fac] + gen);
    }
    return ball_isomorphic(whole.pres, prod, gmap, radius);
}

}  // namespace umc
