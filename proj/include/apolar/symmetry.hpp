#pragma once

// The symmetry group of the variable matrix: pairs of row/column
// permutations extended by the transpose involution.  An element
// (P, Q, t) sends the cell (i, j) to (P(i), Q(j)) when t is false and to
// (P(j), Q(i)) (transpose first, then permute) when t is true.

#include <numeric>
#include <random>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

struct SymmetryElement {
    std::vector<int> row_perm;  // images of 0..n-1
    std::vector<int> col_perm;
    bool transpose = false;

    static SymmetryElement identity(int n) {
        SymmetryElement g;
        g.row_perm.resize(n);
        g.col_perm.resize(n);
        std::iota(g.row_perm.begin(), g.row_perm.end(), 0);
        std::iota(g.col_perm.begin(), g.col_perm.end(), 0);
        return g;
    }

    int n() const { return static_cast<int>(row_perm.size()); }

    std::pair<int, int> apply_cell(int i, int j) const {
        if (transpose) return {row_perm[j], col_perm[i]};
        return {row_perm[i], col_perm[j]};
    }

    // Composition acting as functions: (a*b) applies b first, then a.
    SymmetryElement operator*(const SymmetryElement& b) const {
        int m = n();
        SymmetryElement r;
        r.transpose = (transpose != b.transpose);
        r.row_perm.resize(m);
        r.col_perm.resize(m);
        const auto& second_for_rows = transpose ? b.col_perm : b.row_perm;
        const auto& second_for_cols = transpose ? b.row_perm : b.col_perm;
        for (int i = 0; i < m; ++i) {
            r.row_perm[i] = row_perm[second_for_rows[i]];
            r.col_perm[i] = col_perm[second_for_cols[i]];
        }
        return r;
    }

    SymmetryElement inverse() const {
        int m = n();
        SymmetryElement r;
        r.transpose = transpose;
        r.row_perm.resize(m);
        r.col_perm.resize(m);
        if (!transpose) {
            for (int i = 0; i < m; ++i) {
                r.row_perm[row_perm[i]] = i;
                r.col_perm[col_perm[i]] = i;
            }
        } else {
            // (P,Q,1)(i,j) = (P(j),Q(i)); the inverse is (Q^-1, P^-1, 1).
            for (int i = 0; i < m; ++i) {
                r.row_perm[col_perm[i]] = i;
                r.col_perm[row_perm[i]] = i;
            }
        }
        return r;
    }

    bool operator==(const SymmetryElement& o) const {
        return transpose == o.transpose && row_perm == o.row_perm && col_perm == o.col_perm;
    }

    static SymmetryElement random(int n, std::mt19937& rng, bool allow_transpose = true) {
        SymmetryElement g = identity(n);
        std::shuffle(g.row_perm.begin(), g.row_perm.end(), rng);
        std::shuffle(g.col_perm.begin(), g.col_perm.end(), rng);
        if (allow_transpose) g.transpose = (rng() & 1u) != 0;
        return g;
    }
};

inline Monomial apply_symmetry(const SymmetryElement& g, const Monomial& m) {
    Monomial r(m.n);
    std::vector<std::pair<int, int>> cells;
    cells.reserve(m.e.size());
    for (const auto& [c, x] : m.e) {
        auto [i, j] = g.apply_cell(c / m.n, c % m.n);
        cells.emplace_back(i * m.n + j, x);
    }
    std::sort(cells.begin(), cells.end());
    r.e = std::move(cells);
    return r;
}

inline Multidegree apply_symmetry(const SymmetryElement& g, const Multidegree& mu) {
    int n = mu.n();
    Multidegree r(std::vector<int>(n, 0), std::vector<int>(n, 0));
    const auto& src_row = g.transpose ? mu.col : mu.row;
    const auto& src_col = g.transpose ? mu.row : mu.col;
    for (int i = 0; i < n; ++i) {
        r.row[g.row_perm[i]] = src_row[i];
        r.col[g.col_perm[i]] = src_col[i];
    }
    return r;
}

template <typename F>
Polynomial<F> apply_symmetry(const SymmetryElement& g, const Polynomial<F>& f) {
    Polynomial<F> r(f.n);
    for (const auto& [m, c] : f.terms) r.add_term(apply_symmetry(g, m), c);
    return r;
}

}  // namespace apolar
