#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "umc/errors.hpp"
#include "umc/presentation.hpp"

namespace umc {

// Finite monoid as a multiplication table, mult[i][j] = i*j.
struct FinMonoid {
    int size = 1;
    int identity = 0;
    std::vector<std::vector<int>> mult{{0}};
    std::vector<std::string> display{"1"};

    int mul(int a, int b) const { return mult[a][b]; }

    void validate() const {
        if (size <= 0 || identity < 0 || identity >= size)
            throw Error("FinMonoid: bad size/identity");
        if ((int)mult.size() != size) throw Error("FinMonoid: bad table");
        for (const auto& row : mult) {
            if ((int)row.size() != size) throw Error("FinMonoid: ragged table");
            for (int v : row)
                if (v < 0 || v >= size) throw Error("FinMonoid: entry out of range");
        }
        for (int a = 0; a < size; ++a)
            if (mul(identity, a) != a || mul(a, identity) != a)
                throw Error("FinMonoid: identity law fails");
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                for (int c = 0; c < size; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw Error("FinMonoid: associativity fails");
    }

    static FinMonoid trivial() { return FinMonoid{}; }

    static FinMonoid cyclic(int n) {
        FinMonoid m;
        m.size = n;
        m.identity = 0;
        m.mult.assign(n, std::vector<int>(n));
        m.display.clear();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.mult[i][j] = (i + j) % n;
        for (int i = 0; i < n; ++i) m.display.push_back(i == 0 ? "1" : "t" + std::string(i > 1 ? std::to_string(i) : ""));
        return m;
    }

    // {1, e} with ee = e; the smallest monoid that is not a group.
    static FinMonoid idempotent2() {
        FinMonoid m;
        m.size = 2;
        m.identity = 0;
        m.mult = {{0, 1}, {1, 1}};
        m.display = {"1", "e"};
        return m;
    }

    static FinMonoid product(const FinMonoid& a, const FinMonoid& b) {
        FinMonoid m;
        m.size = a.size * b.size;
        m.identity = a.identity * b.size + b.identity;
        m.mult.assign(m.size, std::vector<int>(m.size));
        m.display.assign(m.size, "");
        for (int i = 0; i < m.size; ++i) {
            int ia = i / b.size, ib = i % b.size;
            m.display[i] = "(" + a.display[ia] + "," + b.display[ib] + ")";
            for (int j = 0; j < m.size; ++j) {
                int ja = j / b.size, jb = j % b.size;
                m.mult[i][j] = a.mul(ia, ja) * b.size + b.mul(ib, jb);
            }
        }
        return m;
    }

    // Generators = non-identity elements, relations (a)(b) ~ (ab).
    Presentation table_presentation() const {
        std::vector<Generator> gens;
        std::vector<int> gid(size, -1);
        for (int a = 0; a < size; ++a) {
            if (a == identity) continue;
            gid[a] = (int)gens.size();
            gens.push_back(Generator{display[a]});
        }
        std::vector<std::pair<Word, Word>> rels;
        for (int a = 0; a < size; ++a) {
            if (a == identity) continue;
            for (int b = 0; b < size; ++b) {
                if (b == identity) continue;
                int c = mul(a, b);
                Word lhs = Word::gen(gid[a]) * Word::gen(gid[b]);
                Word rhs = c == identity ? Word::one() : Word::gen(gid[c]);
                rels.emplace_back(std::move(lhs), std::move(rhs));
            }
        }
        return Presentation::make(std::move(gens), std::move(rels));
    }
};

inline std::vector<int> invertible_elements(const FinMonoid& m) {
    std::vector<int> out;
    for (int a = 0; a < m.size; ++a)
        for (int k = 0; k < m.size; ++k)
            if (m.mul(a, k) == m.identity && m.mul(k, a) == m.identity) {
                out.push_back(a);
                break;
            }
    return out;
}

inline bool is_group(const FinMonoid& m) {
    return (int)invertible_elements(m).size() == m.size;
}

inline bool monoid_isomorphic(const FinMonoid& a, const FinMonoid& b) {
    if (a.size != b.size) return false;
    std::vector<int> perm(a.size);
    std::iota(perm.begin(), perm.end(), 0);
    // permutations fixing the identity
    std::sort(perm.begin(), perm.end());
    do {
        if (perm[a.identity] != b.identity) continue;
        bool ok = true;
        for (int x = 0; x < a.size && ok; ++x)
            for (int y = 0; y < a.size && ok; ++y)
                if (perm[a.mul(x, y)] != b.mul(perm[x], perm[y])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// All associative unital tables on {0..n-1}, n <= max_size, up to isomorphism.
inline std::vector<FinMonoid> small_monoids_up_to_iso(int max_size) {
    std::vector<FinMonoid> out;
    for (int n = 1; n <= max_size; ++n) {
        std::vector<FinMonoid> reps;
        FinMonoid m;
        m.size = n;
        m.identity = 0;
        m.mult.assign(n, std::vector<int>(n));
        m.display.clear();
        for (int i = 0; i < n; ++i)
            m.display.push_back(i == 0 ? "1" : std::string(1, char('a' + i - 1)));
        for (int i = 0; i < n; ++i) {
            m.mult[0][i] = i;
            m.mult[i][0] = i;
        }
        // fill the (n-1)x(n-1) free block
        const int cells = (n - 1) * (n - 1);
        std::vector<int> v(cells, 0);
        auto assoc_ok = [&]() {
            for (int a = 1; a < n; ++a)
                for (int b = 1; b < n; ++b)
                    for (int c = 1; c < n; ++c)
                        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) return false;
            return true;
        };
        for (;;) {
            for (int i = 0; i < cells; ++i)
                m.mult[1 + i / (n - 1)][1 + i % (n - 1)] = v[i];
            if (assoc_ok()) {
                bool dup = false;
                for (const FinMonoid& r : reps)
                    if (monoid_isomorphic(r, m)) {
                        dup = true;
                        break;
                    }
                if (!dup) reps.push_back(m);
            }
            int i = 0;
            while (i < cells && v[i] == n - 1) v[i++] = 0;
            if (i == cells) break;
            ++v[i];
        }
        out.insert(out.end(), reps.begin(), reps.end());
    }
    return out;
}

}  // namespace umc
