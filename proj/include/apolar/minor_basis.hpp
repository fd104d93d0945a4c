#pragma once

// Exact model of the apolar quotient algebra of the determinant or
// permanent.  The degree-d piece has a basis indexed by pairs (R, C) of
// d-element row/column subsets; the pair stands for the complementary
// minor of the form, i.e. the contraction of the form by any partial
// permutation monomial covering rows R and columns C.  Multiplication by a
// variable is again such a contraction, so it sends a basis element to 0 or
// to +/- another basis element; no polynomial arithmetic is needed once the
// structure constants are in hand.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "apolar/apolar_ideal.hpp"
#include "apolar/monomial.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/util.hpp"

namespace apolar {

struct MinorBasisElement {
    int n = 0;
    std::uint32_t rows = 0;  // bitmask of deleted rows
    std::uint32_t cols = 0;  // bitmask of deleted cols

    int degree() const { return __builtin_popcount(rows); }

    bool operator==(const MinorBasisElement& o) const {
        return n == o.n && rows == o.rows && cols == o.cols;
    }
    bool operator<(const MinorBasisElement& o) const {
        if (rows != o.rows) return rows < o.rows;
        return cols < o.cols;
    }

    Multidegree multidegree() const {
        Multidegree d(std::vector<int>(n, 0), std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            if (rows & (1u << i)) d.row[i] = 1;
            if (cols & (1u << i)) d.col[i] = 1;
        }
        return d;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "del(";
        bool first = true;
        for (int i = 0; i < n; ++i) {
            if (rows & (1u << i)) {
                os << (first ? "" : ",") << i + 1;
                first = false;
            }
        }
        os << "|";
        first = true;
        for (int j = 0; j < n; ++j) {
            if (cols & (1u << j)) {
                os << (first ? "" : ",") << j + 1;
                first = false;
            }
        }
        os << ")";
        return os.str();
    }
};

// All basis elements of the degree-d piece, subsets in lex order.
inline std::vector<MinorBasisElement> basis_elements(int n, int d) {
    std::vector<MinorBasisElement> out;
    if (d < 0 || d > n) return out;
    std::vector<std::uint32_t> subsets;
    for_each_subset(n, d, [&](const std::vector<int>& s) {
        std::uint32_t m = 0;
        for (int v : s) m |= (1u << v);
        subsets.push_back(m);
    });
    for (auto r : subsets) {
        for (auto c : subsets) out.push_back({n, r, c});
    }
    return out;
}

struct VariableAction {
    int coeff = 0;  // 0, +1 or -1
    MinorBasisElement image;
};

// Multiplication by X[i][j] in the quotient algebra.  Zero when the row or
// column is already deleted; otherwise the image deletes them too, with
// sign (-1)^(p+q) for the determinant where p and q are the 1-based
// positions of i and j inside the sorted complements of the deleted sets.
inline VariableAction variable_action(PolyKind kind, const MinorBasisElement& b, int i,
                                      int j) {
    VariableAction out;
    std::uint32_t ri = 1u << i, cj = 1u << j;
    if ((b.rows & ri) || (b.cols & cj)) {
        out.coeff = 0;
        return out;
    }
    out.image = {b.n, b.rows | ri, b.cols | cj};
    if (kind == PolyKind::Perm) {
        out.coeff = 1;
    } else {
        std::uint32_t live = ~0u >> (32 - b.n);
        int p = 1 + __builtin_popcount(static_cast<std::uint32_t>(~b.rows) & live &
                                       (ri - 1));
        int q = 1 + __builtin_popcount(static_cast<std::uint32_t>(~b.cols) & live &
                                       (cj - 1));
        out.coeff = ((p + q) % 2 == 0) ? 1 : -1;
    }
    return out;
}

// The polynomial the basis element stands for: the determinant or permanent
// of the submatrix on the surviving rows and columns, leading coefficient
// +1 on the diagonal pairing of the sorted survivors.  Used as an oracle to
// validate variable_action against honest contraction.
template <typename F>
Polynomial<F> minor_polynomial(PolyKind kind, const MinorBasisElement& b) {
    int n = b.n;
    std::vector<int> live_rows, live_cols;
    for (int i = 0; i < n; ++i) {
        if (!(b.rows & (1u << i))) live_rows.push_back(i);
    }
    for (int j = 0; j < n; ++j) {
        if (!(b.cols & (1u << j))) live_cols.push_back(j);
    }
    int m = static_cast<int>(live_rows.size());
    Polynomial<F> f(n);
    if (m == 0) {
        f.add_term(Monomial::one(n), F::one());
        return f;
    }
    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int sign = 1;
        if (kind == PolyKind::Det) {
            for (int a = 0; a < m; ++a) {
                for (int c = a + 1; c < m; ++c) {
                    if (sigma[a] > sigma[c]) sign = -sign;
                }
            }
        }
        Monomial mon(n);
        std::vector<std::pair<int, int>> cells;
        for (int a = 0; a < m; ++a) {
            cells.emplace_back(live_rows[a] * n + live_cols[sigma[a]], 1);
        }
        std::sort(cells.begin(), cells.end());
        mon.e = std::move(cells);
        f.terms.emplace(std::move(mon), F::from_int(sign));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return f;
}

}  // namespace apolar
