#pragma once

// Exact sparse linear algebra over Q and GF(p).
//
// Elimination is Gauss-Jordan with Markowitz pivoting (pivot minimizing
// (row_nnz-1)*(col_nnz-1), ties broken by lowest column then lowest row), so
// results are deterministic.  Over Q the updates are fraction-free two-term
// integer operations with per-row gcd normalization, which keeps intermediate
// entries integral and bounds their growth; pivots are divided out only when
// the reduced rows are converted back to rationals.  Kernel bases come out in
// reduced echelon form: one vector per free column (ascending), with entry 1
// at its own free column and 0 at every other free column.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

template <class F>
struct SparseMatrix {
    using K = typename F::Elem;

    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, K>> entries;  // duplicates are summed
    std::vector<std::string> row_labels;           // optional, for debug dumps
    std::vector<std::string> col_labels;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c) {}

    void add(int r, int c, K v) {
        if (r < 0 || r >= rows || c < 0 || c >= cols) {
            throw std::out_of_range("SparseMatrix::add out of range");
        }
        entries.emplace_back(r, c, std::move(v));
    }
};

template <class F>
SparseMatrix<F> transpose(const SparseMatrix<F>& m) {
    SparseMatrix<F> t(m.cols, m.rows);
    t.entries.reserve(m.entries.size());
    for (const auto& [r, c, v] : m.entries) t.entries.emplace_back(c, r, v);
    t.row_labels = m.col_labels;
    t.col_labels = m.row_labels;
    return t;
}

namespace detail {

// Sparse row: (column, value) pairs sorted by column, values nonzero.
template <class K>
using SparseRow = std::vector<std::pair<int, K>>;

template <class F>
std::vector<SparseRow<typename F::Elem>> gather_rows(const F& field,
                                                     const SparseMatrix<F>& m) {
    using K = typename F::Elem;
    std::vector<std::map<int, K>> acc(m.rows);
    for (const auto& [r, c, v] : m.entries) {
        auto it = acc[r].find(c);
        if (it == acc[r].end()) {
            acc[r].emplace(c, v);
        } else {
            it->second = field.add(it->second, v);
        }
    }
    std::vector<SparseRow<K>> rows(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        for (auto& [c, v] : acc[r]) {
            if (!F::is_zero(v)) rows[r].emplace_back(c, v);
        }
    }
    return rows;
}

// Shared reduced-echelon result.  `rows` holds the surviving pivot rows;
// pivots[t] = (index into rows, pivot column), in pivot order.
template <class K>
struct Echelon {
    std::vector<SparseRow<K>> rows;
    std::vector<std::pair<int, int>> pivots;
    int cols = 0;
    int rank() const { return static_cast<int>(pivots.size()); }
};

// Markowitz pivot choice over the live rows.  Returns (row, col) or (-1,-1).
template <class K>
std::pair<int, int> pick_pivot(const std::vector<SparseRow<K>>& rows,
                               const std::vector<bool>& live,
                               const std::vector<int>& col_count) {
    long long best = -1;
    int br = -1, bc = -1;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (!live[r] || rows[r].empty()) continue;
        long long rn = static_cast<long long>(rows[r].size()) - 1;
        for (const auto& [c, v] : rows[r]) {
            long long score = rn * (col_count[c] - 1);
            if (best < 0 || score < best || (score == best && (c < bc || (c == bc && r < br)))) {
                best = score;
                br = r;
                bc = c;
            }
        }
    }
    return {br, bc};
}

template <class K>
void recount_columns(const std::vector<SparseRow<K>>& rows,
                     const std::vector<bool>& live, std::vector<int>& col_count) {
    std::fill(col_count.begin(), col_count.end(), 0);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (!live[r]) continue;
        for (const auto& [c, v] : rows[r]) ++col_count[c];
    }
}

// Gauss-Jordan over a prime field.
inline Echelon<PrimeField::Elem> echelonize(const PrimeField& field,
                                            std::vector<SparseRow<PrimeField::Elem>> rows,
                                            int cols) {
    using K = PrimeField::Elem;
    Echelon<K> out;
    out.cols = cols;
    std::vector<bool> live(rows.size(), true);
    std::vector<int> col_count(cols, 0);
    recount_columns(rows, live, col_count);
    while (true) {
        auto [pr, pc] = pick_pivot(rows, live, col_count);
        if (pr < 0) break;
        live[pr] = false;
        K pv{};
        for (const auto& [c, v] : rows[pr]) {
            if (c == pc) pv = v;
        }
        K pinv = field.inv(pv);
        // normalize the pivot row
        for (auto& [c, v] : rows[pr]) v = field.mul(v, pinv);
        // eliminate pc from every other row (Jordan-style, pivot rows included)
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pr || rows[r].empty()) continue;
            K f{};
            bool has = false;
            for (const auto& [c, v] : rows[r]) {
                if (c == pc) {
                    f = v;
                    has = true;
                    break;
                }
            }
            if (!has) continue;
            SparseRow<K> merged;
            merged.reserve(rows[r].size() + rows[pr].size());
            auto a = rows[r].begin(), ae = rows[r].end();
            auto b = rows[pr].begin(), be = rows[pr].end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == ae || b->first < a->first) {
                    K nv = field.neg(field.mul(f, b->second));
                    if (nv != 0) merged.emplace_back(b->first, nv);
                    ++b;
                } else {
                    K nv = field.sub(a->second, field.mul(f, b->second));
                    if (nv != 0) merged.emplace_back(a->first, nv);
                    ++a;
                    ++b;
                }
            }
            rows[r] = std::move(merged);
        }
        recount_columns(rows, live, col_count);
        out.pivots.emplace_back(pr, pc);
    }
    out.rows = std::move(rows);
    return out;
}

// Fraction-free Gauss-Jordan over Z (rows come from Q rows with denominators
// cleared).  Row update: row_j <- pv*row_j - a_jc*row_p, then divide row_j by
// the gcd of its entries.  Pivot entries are not divided out here.
inline Echelon<mpz_class> echelonize_fraction_free(std::vector<SparseRow<mpz_class>> rows,
                                                   int cols) {
    Echelon<mpz_class> out;
    out.cols = cols;
    std::vector<bool> live(rows.size(), true);
    std::vector<int> col_count(cols, 0);
    recount_columns(rows, live, col_count);
    while (true) {
        auto [pr, pc] = pick_pivot(rows, live, col_count);
        if (pr < 0) break;
        live[pr] = false;
        mpz_class pv;
        for (const auto& [c, v] : rows[pr]) {
            if (c == pc) pv = v;
        }
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pr || rows[r].empty()) continue;
            mpz_class f;
            bool has = false;
            for (const auto& [c, v] : rows[r]) {
                if (c == pc) {
                    f = v;
                    has = true;
                    break;
                }
            }
            if (!has) continue;
            SparseRow<mpz_class> merged;
            merged.reserve(rows[r].size() + rows[pr].size());
            auto a = rows[r].begin(), ae = rows[r].end();
            auto b = rows[pr].begin(), be = rows[pr].end();
            mpz_class g = 0;
            while (a != ae || b != be) {
                mpz_class nv;
                if (b == be || (a != ae && a->first < b->first)) {
                    nv = pv * a->second;
                    merged.emplace_back(a->first, nv);
                    ++a;
                } else if (a == ae || b->first < a->first) {
                    nv = -f * b->second;
                    if (sgn(nv) != 0) merged.emplace_back(b->first, nv);
                    ++b;
                } else {
                    nv = pv * a->second - f * b->second;
                    if (sgn(nv) != 0) merged.emplace_back(a->first, nv);
                    ++a;
                    ++b;
                }
                if (sgn(nv) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nv.get_mpz_t());
            }
            if (sgn(g) != 0 && g != 1) {
                for (auto& [c, v] : merged) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
            }
            rows[r] = std::move(merged);
        }
        recount_columns(rows, live, col_count);
        out.pivots.emplace_back(pr, pc);
    }
    out.rows = std::move(rows);
    return out;
}

inline std::vector<SparseRow<mpz_class>> clear_denominators(
    const std::vector<SparseRow<mpq_class>>& rows) {
    std::vector<SparseRow<mpz_class>> out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        mpz_class l = 1;
        for (const auto& [c, v] : rows[r]) {
            mpz_class den = v.get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        out[r].reserve(rows[r].size());
        for (const auto& [c, v] : rows[r]) {
            mpq_class scaled = v * mpq_class(l);
            out[r].emplace_back(c, mpz_class(scaled.get_num()));
        }
    }
    return out;
}

}  // namespace detail

template <class F>
int rank(const F& field, const SparseMatrix<F>& m) {
    auto rows = detail::gather_rows(field, m);
    if constexpr (std::is_same_v<F, RationalField>) {
        auto zrows = detail::clear_denominators(rows);
        return detail::echelonize_fraction_free(std::move(zrows), m.cols).rank();
    } else {
        return detail::echelonize(field, std::move(rows), m.cols).rank();
    }
}

// Kernel basis in reduced echelon form (see header comment).  Vectors are
// dense, length m.cols.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& field,
                                                        const SparseMatrix<F>& m) {
    using K = typename F::Elem;
    auto rows = detail::gather_rows(field, m);

    // Reduced rows with unit pivots, as (pivot col -> row over rationals
    // or field elements).
    std::vector<std::pair<int, detail::SparseRow<K>>> pivot_rows;
    if constexpr (std::is_same_v<F, RationalField>) {
        auto ech = detail::echelonize_fraction_free(detail::clear_denominators(rows), m.cols);
        for (const auto& [r, c] : ech.pivots) {
            mpz_class pv;
            for (const auto& [cc, v] : ech.rows[r]) {
                if (cc == c) pv = v;
            }
            detail::SparseRow<K> row;
            row.reserve(ech.rows[r].size());
            for (const auto& [cc, v] : ech.rows[r]) {
                row.emplace_back(cc, mpq_class(v) / mpq_class(pv));
            }
            pivot_rows.emplace_back(c, std::move(row));
        }
    } else {
        auto ech = detail::echelonize(field, std::move(rows), m.cols);
        for (const auto& [r, c] : ech.pivots) {
            pivot_rows.emplace_back(c, ech.rows[r]);
        }
    }

    std::vector<bool> is_pivot(m.cols, false);
    for (const auto& [c, row] : pivot_rows) is_pivot[c] = true;

    std::vector<std::vector<K>> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(m.cols, field.zero());
        v[f] = field.one();
        for (const auto& [pc, row] : pivot_rows) {
            for (const auto& [c, val] : row) {
                if (c == f) {
                    v[pc] = field.neg(val);  // pivot entry is 1
                    break;
                }
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct CrosscheckPrimeResult {
    std::uint32_t p = 0;
    bool rejected = false;  // p divides a denominator appearing in the matrix
    int rank_p = -1;
    bool flagged = false;  // rank over GF(p) differs from rank over Q
};

struct CrosscheckReport {
    int rank_q = 0;
    std::vector<CrosscheckPrimeResult> primes;
    bool all_match() const {
        for (const auto& r : primes) {
            if (r.rejected || r.flagged) return false;
        }
        return true;
    }
};

// Reduces a rational matrix mod each prime and compares ranks.  Rows are
// scaled integral first; a prime dividing any denominator is rejected
// (reduction would need 1/p) rather than silently reduced.
inline CrosscheckReport rank_crosscheck(const SparseMatrix<RationalField>& m,
                                        const std::vector<std::uint32_t>& primes) {
    RationalField qq;
    CrosscheckReport rep;
    rep.rank_q = rank(qq, m);
    mpz_class den_lcm = 1;
    for (const auto& [r, c, v] : m.entries) {
        mpz_class den = v.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (auto p : primes) {
        CrosscheckPrimeResult res;
        res.p = p;
        if (mpz_divisible_ui_p(den_lcm.get_mpz_t(), p)) {
            res.rejected = true;
            rep.primes.push_back(res);
            continue;
        }
        PrimeField fp(p);
        SparseMatrix<PrimeField> mp(m.rows, m.cols);
        for (const auto& [r, c, v] : m.entries) {
            mpz_class num = v.get_num(), den = v.get_den();
            auto nm = static_cast<PrimeField::Elem>(mpz_fdiv_ui(num.get_mpz_t(), p));
            auto dm = static_cast<PrimeField::Elem>(mpz_fdiv_ui(den.get_mpz_t(), p));
            PrimeField::Elem val = fp.mul(nm, fp.inv(dm));
            if (val != 0) mp.add(r, c, val);
        }
        res.rank_p = rank(fp, mp);
        res.flagged = res.rank_p != rep.rank_q;
        rep.primes.push_back(res);
    }
    return rep;
}

// Multiplies M by a dense vector, for kernel validation.
template <class F>
std::vector<typename F::Elem> apply(const F& field, const SparseMatrix<F>& m,
                                    const std::vector<typename F::Elem>& v) {
    std::vector<typename F::Elem> out(m.rows, field.zero());
    for (const auto& [r, c, val] : m.entries) {
        out[r] = field.add(out[r], field.mul(val, v[c]));
    }
    return out;
}

// MatrixMarket coordinate dump (debug facility).  GF(p) matrices are written
// with integer entries plus a modulus comment; rational matrices use the
// "a/b" extension with a comment noting it.
template <class F>
void write_matrix_market(std::ostream& os, const F& field, const SparseMatrix<F>& m) {
    std::map<std::pair<int, int>, typename F::Elem> acc;
    for (const auto& [r, c, v] : m.entries) {
        auto it = acc.find({r, c});
        if (it == acc.end()) {
            acc.emplace(std::make_pair(r, c), v);
        } else {
            it->second = field.add(it->second, v);
        }
    }
    for (auto it = acc.begin(); it != acc.end();) {
        if (F::is_zero(it->second)) {
            it = acc.erase(it);
        } else {
            ++it;
        }
    }
    if constexpr (std::is_same_v<F, RationalField>) {
        os << "%%MatrixMarket matrix coordinate rational general\n";
        os << "% entries are exact rationals num/den\n";
    } else {
        os << "%%MatrixMarket matrix coordinate integer general\n";
        os << "% entries are residues mod " << field.p << "\n";
    }
    for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
        os << "% row " << (r + 1) << " : " << m.row_labels[r] << "\n";
    }
    for (std::size_t c = 0; c < m.col_labels.size(); ++c) {
        os << "% col " << (c + 1) << " : " << m.col_labels[c] << "\n";
    }
    os << m.rows << " " << m.cols << " " << acc.size() << "\n";
    for (const auto& [rc, v] : acc) {
        os << (rc.first + 1) << " " << (rc.second + 1) << " " << F::to_string(v) << "\n";
    }
}

}  // namespace apolar
