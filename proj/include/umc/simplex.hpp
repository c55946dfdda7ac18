#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "umc/errors.hpp"

namespace umc {

// Eilenberg-Zilber normal form: every simplex is s_{i_1}..s_{i_r} of a unique
// nondegenerate base with i_1 > ... > i_r. `degs` stores that list.
struct DegSimplex {
    int base_dim = 0;
    int base_id = 0;
    std::vector<int> degs;  // strictly decreasing

    int dim() const { return base_dim + (int)degs.size(); }
    bool nondegenerate() const { return degs.empty(); }

    bool operator==(const DegSimplex& o) const {
        return base_dim == o.base_dim && base_id == o.base_id && degs == o.degs;
    }
    bool operator!=(const DegSimplex& o) const { return !(*this == o); }
    bool operator<(const DegSimplex& o) const {
        if (base_dim != o.base_dim) return base_dim < o.base_dim;
        if (base_id != o.base_id) return base_id < o.base_id;
        return degs < o.degs;
    }
};

struct DegSimplexHash {
    size_t operator()(const DegSimplex& z) const {
        size_t h = ((size_t)(uint32_t)z.base_dim << 32) ^ (uint32_t)z.base_id;
        for (int d : z.degs) h = h * 1099511628211ull + (size_t)d + 1;
        return h;
    }
};

// The weakly increasing surjection [base_dim + degs.size()] ->> [base_dim]
// encoded by the degeneracy list (sigma_{i_1} applied first).
inline std::vector<int> degs_to_surj(int base_dim, const std::vector<int>& degs) {
    const int n = base_dim + (int)degs.size();
    std::vector<int> f(n + 1);
    for (int p = 0; p <= n; ++p) {
        int v = p;
        for (int d : degs)  // sigma_{degs[0]} acts first
            if (v > d) --v;
        f[p] = v;
    }
    return f;
}

inline std::vector<int> surj_to_degs(const std::vector<int>& f) {
    std::vector<int> degs;
    for (int p = (int)f.size() - 2; p >= 0; --p)
        if (f[p] == f[p + 1]) degs.push_back(p);
    return degs;
}

}  // namespace umc
