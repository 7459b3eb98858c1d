#pragma once

// Smith normal form over Z for abelian group presentations. Rows of the
// input matrix are relations between the column generators; the returned
// change-of-basis V expresses each generator in coordinates where the
// relation lattice is diagonal.

#include <stdexcept>
#include <vector>

#include "tightcensus/bigint.hpp"

namespace tightcensus {

using IntMatrix = std::vector<std::vector<Int>>;

struct SmithPresentation {
    std::vector<Int> factors;       // d_0 | d_1 | ... (>= 0), length = #generators
    IntMatrix generator_images;     // row k = image of generator k in sum Z/d_i (+ Z for d_i = 0)
    Int group_order;                // product of nonzero d_i, or 0 when the group is infinite
    bool cyclic;                    // at most one factor differs from 1
};

// relations: m x n matrix, rows = relations over generators mu_0 ... mu_{n-1}.
inline SmithPresentation smith_presentation(const IntMatrix& relations) {
    if (relations.empty()) throw std::invalid_argument("smith_presentation: empty matrix");
    const std::size_t m = relations.size();
    const std::size_t n = relations[0].size();
    for (const auto& row : relations) {
        if (row.size() != n) throw std::invalid_argument("smith_presentation: ragged matrix");
    }

    IntMatrix D = relations;
    IntMatrix V(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) V[i][i] = 1;

    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) std::swap(D[r][i], D[r][j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(V[r][i], V[r][j]);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t r = 0; r < m; ++r) D[r][dst] += q * D[r][src];
        for (std::size_t r = 0; r < n; ++r) V[r][dst] += q * V[r][src];
    };
    auto negate_col = [&](std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) D[r][j] = -D[r][j];
        for (std::size_t r = 0; r < n; ++r) V[r][j] = -V[r][j];
    };

    const std::size_t rank_bound = m < n ? m : n;
    for (std::size_t p = 0; p < rank_bound; ++p) {
        for (;;) {
            // smallest nonzero |entry| in the working submatrix
            std::size_t bi = m, bj = n;
            for (std::size_t i = p; i < m && !(bi != m && abs_int(D[bi][bj]) == 1); ++i) {
                for (std::size_t j = p; j < n; ++j) {
                    if (D[i][j] == 0) continue;
                    if (bi == m || abs_int(D[i][j]) < abs_int(D[bi][bj])) {
                        bi = i;
                        bj = j;
                        if (abs_int(D[i][j]) == 1) break;
                    }
                }
            }
            if (bi == m) goto done;  // submatrix is zero
            if (bi != p) std::swap(D[p], D[bi]);
            if (bj != p) swap_cols(p, bj);
            if (D[p][p] < 0) {
                for (std::size_t j = p; j < n; ++j) D[p][j] = -D[p][j];
            }

            bool dirty = false;
            for (std::size_t i = p + 1; i < m; ++i) {
                if (D[i][p] == 0) continue;
                Int q = floor_div(D[i][p] + floor_div(D[p][p], 2), D[p][p]);
                if (q != 0) {
                    for (std::size_t j = p; j < n; ++j) D[i][j] -= q * D[p][j];
                }
                if (D[i][p] != 0) dirty = true;
            }
            for (std::size_t j = p + 1; j < n; ++j) {
                if (D[p][j] == 0) continue;
                Int q = floor_div(D[p][j] + floor_div(D[p][p], 2), D[p][p]);
                if (q != 0) add_col(j, p, -q);
                if (D[p][j] != 0) dirty = true;
            }
            if (dirty) continue;
            if (abs_int(D[p][p]) == 1) break;  // a unit pivot divides everything

            // pivot clears its row and column; enforce divisibility of the rest
            bool fixed = true;
            for (std::size_t i = p + 1; i < m && fixed; ++i) {
                for (std::size_t j = p + 1; j < n && fixed; ++j) {
                    if (D[i][j] % D[p][p] != 0) {
                        for (std::size_t jj = p; jj < n; ++jj) D[p][jj] += D[i][jj];
                        fixed = false;
                    }
                }
            }
            if (fixed) break;
        }
        if (D[p][p] < 0) negate_col(p);
    }
done:;

    SmithPresentation out;
    out.factors.assign(n, 0);
    for (std::size_t p = 0; p < rank_bound; ++p) out.factors[p] = abs_int(D[p][p]);
    out.generator_images = V;
    out.group_order = 1;
    out.cyclic = true;
    std::size_t nontrivial = 0;
    for (const Int& d : out.factors) {
        if (d == 0) {
            out.group_order = 0;
            ++nontrivial;
        } else {
            out.group_order = (out.group_order == 0) ? Int(0) : out.group_order * d;
            if (d != 1) ++nontrivial;
        }
    }
    out.cyclic = nontrivial <= 1;
    return out;
}

// Tridiagonal relation matrix of the weighted chain with weights a_0 ... a_n:
// a_0 mu_0 - mu_1 = 0; -mu_{i-1} + a_i mu_i - mu_{i+1} = 0; -mu_{n-1} + a_n mu_n = 0.
inline IntMatrix chain_relation_matrix(const std::vector<Int>& a) {
    const std::size_t n1 = a.size();
    if (n1 == 0) throw std::invalid_argument("chain_relation_matrix: empty weights");
    IntMatrix M(n1, std::vector<Int>(n1, 0));
    for (std::size_t i = 0; i < n1; ++i) {
        M[i][i] = a[i];
        if (i > 0) M[i][i - 1] = -1;
        if (i + 1 < n1) M[i][i + 1] = -1;
    }
    return M;
}

}  // namespace tightcensus
