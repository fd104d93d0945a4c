#pragma once

// Monomials in the n*n matrix of variables X[i][j] (0-based internally,
// 1-based in text I/O), with the three gradings used throughout:
//   standard   - total degree in Z
//   multi      - (row degree vector, column degree vector) in Z^n x Z^n
//   monomial   - the full exponent matrix in Z^(n x n)
// The canonical term order is graded lexicographic on the row-major
// flattened exponent vector.

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "apolar/util.hpp"

namespace apolar {

struct Multidegree {
    std::vector<int> row;
    std::vector<int> col;

    Multidegree() = default;
    Multidegree(std::vector<int> r, std::vector<int> c)
        : row(std::move(r)), col(std::move(c)) {}

    int n() const { return static_cast<int>(row.size()); }
    int total() const { return std::accumulate(row.begin(), row.end(), 0); }
    bool balanced() const {
        return std::accumulate(row.begin(), row.end(), 0) ==
               std::accumulate(col.begin(), col.end(), 0);
    }
    // All entries 0/1: the degrees of squarefree monomials with distinct
    // rows and columns, whose monomials correspond to permutations.
    bool is_singular() const {
        for (int v : row) {
            if (v < 0 || v > 1) return false;
        }
        for (int v : col) {
            if (v < 0 || v > 1) return false;
        }
        return true;
    }

    Multidegree operator+(const Multidegree& o) const {
        Multidegree s = *this;
        for (int i = 0; i < n(); ++i) {
            s.row[i] += o.row[i];
            s.col[i] += o.col[i];
        }
        return s;
    }
    // Componentwise difference; valid only when o <= *this (checked by caller
    // via leq).
    Multidegree operator-(const Multidegree& o) const {
        Multidegree s = *this;
        for (int i = 0; i < n(); ++i) {
            s.row[i] -= o.row[i];
            s.col[i] -= o.col[i];
        }
        return s;
    }
    bool leq(const Multidegree& o) const {
        for (int i = 0; i < n(); ++i) {
            if (row[i] > o.row[i] || col[i] > o.col[i]) return false;
        }
        return true;
    }
    bool operator==(const Multidegree& o) const { return row == o.row && col == o.col; }
    bool operator<(const Multidegree& o) const {
        if (row != o.row) return row < o.row;
        return col < o.col;
    }

    std::vector<int> row_support() const {
        std::vector<int> s;
        for (int i = 0; i < n(); ++i) {
            if (row[i] > 0) s.push_back(i);
        }
        return s;
    }
    std::vector<int> col_support() const {
        std::vector<int> s;
        for (int j = 0; j < n(); ++j) {
            if (col[j] > 0) s.push_back(j);
        }
        return s;
    }

    // "2,1,0;1,1,1" (1-based order of coordinates is just left to right).
    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < n(); ++i) os << (i ? "," : "") << row[i];
        os << ";";
        for (int j = 0; j < n(); ++j) os << (j ? "," : "") << col[j];
        return os.str();
    }
    static Multidegree parse(const std::string& s, int n) {
        auto semi = s.find(';');
        if (semi == std::string::npos) {
            throw UsageError("multidegree must look like r1,..,rn;c1,..,cn");
        }
        auto parse_list = [n](const std::string& part) {
            std::vector<int> v;
            std::istringstream is(part);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
                    throw UsageError("bad multidegree entry '" + tok + "'");
                }
                v.push_back(std::stoi(tok));
            }
            if (static_cast<int>(v.size()) != n) {
                throw UsageError("multidegree needs exactly n=" + std::to_string(n) +
                                 " entries per side");
            }
            return v;
        };
        return Multidegree(parse_list(s.substr(0, semi)), parse_list(s.substr(semi + 1)));
    }
};

struct MultidegreeHash {
    std::size_t operator()(const Multidegree& d) const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](int v) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (int v : d.row) mix(v);
        mix(-1);
        for (int v : d.col) mix(v);
        return h;
    }
};

struct Monomial {
    int n = 0;
    // (flat cell index i*n+j, exponent>0), sorted by cell.
    std::vector<std::pair<int, int>> e;

    Monomial() = default;
    explicit Monomial(int n_) : n(n_) {}

    static Monomial one(int n) { return Monomial(n); }
    static Monomial var(int n, int i, int j, int exp = 1) {
        Monomial m(n);
        if (exp > 0) m.e.emplace_back(i * n + j, exp);
        return m;
    }

    int degree() const {
        int d = 0;
        for (const auto& [c, x] : e) d += x;
        return d;
    }
    int exponent(int i, int j) const {
        int cell = i * n + j;
        for (const auto& [c, x] : e) {
            if (c == cell) return x;
        }
        return 0;
    }
    Multidegree multidegree() const {
        Multidegree d(std::vector<int>(n, 0), std::vector<int>(n, 0));
        for (const auto& [c, x] : e) {
            d.row[c / n] += x;
            d.col[c % n] += x;
        }
        return d;
    }
    std::vector<std::vector<int>> exponent_matrix() const {
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
        for (const auto& [c, x] : e) m[c / n][c % n] = x;
        return m;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(n);
        auto a = e.begin(), ae = e.end();
        auto b = o.e.begin(), be = o.e.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                r.e.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                r.e.push_back(*b++);
            } else {
                r.e.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return r;
    }
    bool divides(const Monomial& o) const {
        auto b = o.e.begin(), be = o.e.end();
        for (const auto& [c, x] : e) {
            while (b != be && b->first < c) ++b;
            if (b == be || b->first != c || b->second < x) return false;
        }
        return true;
    }
    // Quotient o / *this taken only when divides(o) holds.
    Monomial divide_into(const Monomial& o) const {
        Monomial r(n);
        auto b = o.e.begin(), be = o.e.end();
        auto a = e.begin(), ae = e.end();
        while (b != be) {
            if (a != ae && a->first == b->first) {
                int d = b->second - a->second;
                if (d > 0) r.e.emplace_back(b->first, d);
                ++a;
                ++b;
            } else {
                r.e.push_back(*b++);
            }
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return n == o.n && e == o.e; }

    std::string to_string(const std::string& letter = "X") const {
        if (e.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [c, x] : e) {
            if (!first) os << "*";
            first = false;
            os << letter << "[" << (c / n + 1) << "," << (c % n + 1) << "]";
            if (x > 1) os << "^" << x;
        }
        return os.str();
    }
};

// Graded lexicographic: higher total degree wins; at equal degree the
// monomial with the larger exponent at the earliest row-major cell wins.
// Returns true when a is strictly greater than b in this order.
inline bool graded_lex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    auto x = a.e.begin(), xe = a.e.end();
    auto y = b.e.begin(), ye = b.e.end();
    while (x != xe && y != ye) {
        if (x->first != y->first) return x->first < y->first;
        if (x->second != y->second) return x->second > y->second;
        ++x;
        ++y;
    }
    return (x != xe);
}

struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return graded_lex_greater(a, b);
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = m.n;
        for (const auto& [c, x] : m.e) {
            h = h * 1000003u + static_cast<std::size_t>(c) * 131u +
                static_cast<std::size_t>(x);
        }
        return h;
    }
};

// All monomials of the given multidegree (contingency tables with the given
// row/column sums), in a deterministic recursive order.
inline std::vector<Monomial> monomials_of_multidegree(const Multidegree& mu) {
    int n = mu.n();
    std::vector<Monomial> out;
    if (!mu.balanced()) return out;
    for (int v : mu.row) {
        if (v < 0) return out;
    }
    for (int v : mu.col) {
        if (v < 0) return out;
    }
    std::vector<int> colrem = mu.col;
    std::vector<std::vector<int>> mat(n, std::vector<int>(n, 0));
    std::function<void(int)> rec_row = [&](int i) {
        if (i == n) {
            Monomial m(n);
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    if (mat[r][c] > 0) m.e.emplace_back(r * n + c, mat[r][c]);
                }
            }
            out.push_back(std::move(m));
            return;
        }
        // distribute mu.row[i] over columns with remaining capacity
        std::function<void(int, int)> rec_cell = [&](int j, int rem) {
            if (j == n) {
                if (rem == 0) rec_row(i + 1);
                return;
            }
            int cap = std::min(rem, colrem[j]);
            for (int take = 0; take <= cap; ++take) {
                mat[i][j] = take;
                colrem[j] -= take;
                rec_cell(j + 1, rem - take);
                colrem[j] += take;
                mat[i][j] = 0;
            }
        };
        rec_cell(0, mu.row[i]);
    };
    rec_row(0);
    return out;
}

// All monomials of standard degree d, in graded-lex descending order.
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    int cells = n * n;
    std::vector<std::pair<int, int>> cur;
    std::function<void(int, int)> rec = [&](int cell, int rem) {
        if (rem == 0) {
            Monomial m(n);
            m.e = cur;
            out.push_back(std::move(m));
            return;
        }
        if (cell == cells) return;
        for (int take = rem; take >= 0; --take) {
            if (take > 0) cur.emplace_back(cell, take);
            rec(cell + 1, rem - take);
            if (take > 0) cur.pop_back();
        }
    };
    rec(0, d);
    return out;
}

// Monomial of a singular multidegree indexed by a permutation: the monomial
// prod_t X[rows[t]][cols[sigma(t)]] where rows/cols list the supports in
// increasing order.
inline Monomial monomial_for_permutation(const Multidegree& mu,
                                         const std::vector<int>& sigma) {
    auto rows = mu.row_support();
    auto cols = mu.col_support();
    int n = mu.n();
    Monomial m(n);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        cells.emplace_back(rows[t] * n + cols[sigma[t]], 1);
    }
    std::sort(cells.begin(), cells.end());
    m.e = std::move(cells);
    return m;
}

// Inverse of monomial_for_permutation; requires a squarefree monomial whose
// rows and columns are exactly the supports of mu.
inline std::vector<int> permutation_for_monomial(const Multidegree& mu,
                                                 const Monomial& m) {
    auto rows = mu.row_support();
    auto cols = mu.col_support();
    std::vector<int> colpos(mu.n(), -1);
    for (std::size_t t = 0; t < cols.size(); ++t) colpos[cols[t]] = static_cast<int>(t);
    std::vector<int> sigma(rows.size(), -1);
    std::vector<int> rowpos(mu.n(), -1);
    for (std::size_t t = 0; t < rows.size(); ++t) rowpos[rows[t]] = static_cast<int>(t);
    if (m.e.size() != rows.size()) {
        throw std::invalid_argument("monomial does not match singular multidegree");
    }
    for (const auto& [c, x] : m.e) {
        int i = c / m.n, j = c % m.n;
        if (x != 1 || rowpos[i] < 0 || colpos[j] < 0) {
            throw std::invalid_argument("monomial does not match singular multidegree");
        }
        sigma[rowpos[i]] = colpos[j];
    }
    return sigma;
}

// Canonical representatives of the S_n x S_n orbits of balanced multidegrees
// of total degree d: both sides sorted descending.  Returns (multidegree,
// number of ordered multidegrees in the orbit).
inline std::vector<std::pair<Multidegree, long long>> multidegree_classes(int n, int d) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur(n, 0);
    std::function<void(int, int, int)> rec = [&](int idx, int rem, int maxv) {
        if (idx == n) {
            if (rem == 0) parts.push_back(cur);
            return;
        }
        for (int v = std::min(rem, maxv); v >= 0; --v) {
            cur[idx] = v;
            rec(idx + 1, rem - v, v);
            cur[idx] = 0;
        }
    };
    rec(0, d, d);
    auto arrangements = [n](const std::vector<int>& sorted_desc) {
        long long r = factorial(n);
        int run = 1;
        for (int i = 1; i <= n; ++i) {
            if (i < n && sorted_desc[i] == sorted_desc[i - 1]) {
                ++run;
            } else {
                r /= factorial(run);
                run = 1;
            }
        }
        return r;
    };
    std::vector<std::pair<Multidegree, long long>> out;
    for (const auto& r : parts) {
        for (const auto& c : parts) {
            out.emplace_back(Multidegree(r, c), arrangements(r) * arrangements(c));
        }
    }
    return out;
}

}  // namespace apolar
