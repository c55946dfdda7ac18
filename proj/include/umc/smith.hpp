#pragma once

#include <vector>

#include "umc/matrix.hpp"

namespace umc {

struct SmithResult {
    std::vector<Int> factors;  // invariant factors d1 | d2 | ..., all >= 1
    int rank = 0;              // number of nonzero factors
};

// Smith normal form by smallest-entry pivoting. Entries are exact integers;
// each outer step clears one pivot position and restores the divisibility
// chain before moving on.
inline SmithResult smith_normal_form(Matrix a) {
    const int m = a.rows(), n = a.cols();
    const int steps = std::min(m, n);
    SmithResult out;

    for (int s = 0; s < steps; ++s) {
        // locate smallest nonzero |entry| in the trailing block
        int pr = -1, pc = -1;
        Int best = 0;
        for (int i = s; i < m; ++i)
            for (int j = s; j < n; ++j) {
                const Int& v = a.at(i, j);
                if (v == 0) continue;
                Int av = abs(v);
                if (pr < 0 || av < best) {
                    best = av;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;  // trailing block zero

        for (;;) {
            a.swap_rows(s, pr);
            a.swap_cols(s, pc);

            // clear column s and row s by division; imperfect divisions
            // leave smaller remainders and we re-pivot on them
            bool clean = true;
            for (int i = s + 1; i < m; ++i) {
                if (a.at(i, s) == 0) continue;
                Int q = a.at(i, s) / a.at(s, s);
                a.add_row(i, s, -q);
                if (a.at(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < n; ++j) {
                if (a.at(s, j) == 0) continue;
                Int q = a.at(s, j) / a.at(s, s);
                a.add_col(j, s, -q);
                if (a.at(s, j) != 0) clean = false;
            }
            if (clean) {
                // enforce divisibility of the remaining block by the pivot
                int br = -1, bc = -1;
                for (int i = s + 1; i < m && br < 0; ++i)
                    for (int j = s + 1; j < n; ++j)
                        if (a.at(i, j) % a.at(s, s) != 0) {
                            br = i;
                            bc = j;
                            break;
                        }
                if (br < 0) break;
                a.add_row(s, br, 1);  // brings a non-multiple into row s
                pr = s;
                pc = s;
                continue;
            }
            // re-pivot on the smallest remainder
            pr = -1;
            pc = -1;
            best = 0;
            for (int i = s; i < m; ++i)
                for (int j = s; j < n; ++j) {
                    const Int& v = a.at(i, j);
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (pr < 0 || av < best) {
                        best = av;
                        pr = i;
                        pc = j;
                    }
                }
        }
        if (a.at(s, s) < 0) a.negate_row(s);
        out.factors.push_back(a.at(s, s));
    }
    out.rank = (int)out.factors.size();
    return out;
}

inline int matrix_rank(const Matrix& a) { return smith_normal_form(a).rank; }

}  // namespace umc
