#pragma once

// Graded Betti tables, the closed-form values for the first columns, the
// Hilbert-series consistency check, and the table serializers (ASCII in the
// row convention where row r column i holds beta_{i,i+r}, JSON, CSV).

#include <gmpxx.h>

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apolar/apolar_ideal.hpp"
#include "apolar/util.hpp"

namespace apolar {

struct GradedBettiTable {
    PolyKind kind = PolyKind::Det;
    int n = 0;
    std::string field_name;
    std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta, nonzero only
    std::set<int> complete_columns;                    // homological degrees i
    std::set<int> capped_strands;                      // dropped: budget exceeded
    int max_strand = -1;                               // strands 0..max_strand computed

    long long beta(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int i, int j, long long v) {
        if (v == 0) return;
        auto key = std::make_pair(i, j);
        auto it = entries.find(key);
        if (it == entries.end()) {
            entries.emplace(key, v);
        } else {
            it->second += v;
            if (it->second == 0) entries.erase(it);
        }
    }
    bool column_complete(int i) const { return complete_columns.count(i) > 0; }
    int max_i() const {
        int m = 0;
        for (const auto& [ij, v] : entries) m = std::max(m, ij.first);
        return m;
    }
    int max_row() const {
        int m = 0;
        for (const auto& [ij, v] : entries) m = std::max(m, ij.second - ij.first);
        return m;
    }
};

// The Gorenstein symmetry beta_{i,j} = beta_{c-i, s-j} with c = n^2 and
// s = n^2 + n, meaningful only for complete tables.
inline bool is_palindromic(const GradedBettiTable& t) {
    int c = t.n * t.n, s = t.n * t.n + t.n;
    for (const auto& [ij, v] : t.entries) {
        if (t.beta(c - ij.first, s - ij.second) != v) return false;
    }
    return true;
}

struct ClosedForms {
    int n = 0;
    mpz_class beta12;       // both kinds
    mpz_class beta23;       // both kinds
    mpz_class det_beta34;
    mpz_class perm_beta24;
    mpz_class perm_beta34;
};

inline ClosedForms betti_closed_forms(int n) {
    ClosedForms f;
    f.n = n;
    f.beta12 = binom_mpz(n + 1, 2) * binom_mpz(n + 1, 2);
    f.beta23 = 4 * binom_mpz(n + 1, 3) * binom_mpz(n + 2, 3);
    f.det_beta34 = 6 * binom_mpz(n + 1, 4) * binom_mpz(n + 3, 4) +
                   9 * binom_mpz(n + 2, 4) * binom_mpz(n + 2, 4);
    f.perm_beta24 = 2 * binom_mpz(n, 2) * binom_mpz(n, 4);
    f.perm_beta34 = f.det_beta34 + f.perm_beta24;
    return f;
}

struct HilbertCheck {
    bool computed = false;
    mpz_class residual;
    std::string reason;  // set when not computed
};

// residual(d) = binom(n,d)^2 - sum_{i,j} (-1)^i beta_{i,j} binom(n^2+d-j-1, d-j).
// Zero for every d iff the table is consistent with the quotient's Hilbert
// function.  Requires columns 0..d complete, since any of them could carry
// entries with j <= d.
inline HilbertCheck hilbert_identity_check(const GradedBettiTable& t, int d) {
    HilbertCheck out;
    for (int i = 0; i <= d; ++i) {
        if (!t.column_complete(i)) {
            out.reason = "column " + std::to_string(i) +
                         " is incomplete; degree " + std::to_string(d) +
                         " needs complete columns 0.." + std::to_string(d);
            return out;
        }
    }
    int n = t.n;
    mpz_class res = binom_mpz(n, d) * binom_mpz(n, d);
    for (const auto& [ij, v] : t.entries) {
        auto [i, j] = ij;
        if (j > d) continue;
        mpz_class term = binom_mpz(n * n + d - j - 1, d - j) * static_cast<long>(v);
        if (i % 2 == 0) {
            res -= term;
        } else {
            res += term;
        }
    }
    out.computed = true;
    out.residual = res;
    return out;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

// Row r column i shows beta_{i, i+r}; zeros print as dots; an incomplete
// column is marked with '?' after its header index.
inline std::string to_ascii_table(const GradedBettiTable& t) {
    int imax = t.max_i();
    int rmax = t.max_row();
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rmax) + 1);
    std::vector<std::string> headers;
    std::vector<std::size_t> width(static_cast<std::size_t>(imax) + 1, 0);
    for (int i = 0; i <= imax; ++i) {
        std::string h = std::to_string(i);
        if (!t.column_complete(i)) h += "?";
        headers.push_back(h);
        width[static_cast<std::size_t>(i)] = h.size();
    }
    for (int r = 0; r <= rmax; ++r) {
        for (int i = 0; i <= imax; ++i) {
            long long v = t.beta(i, i + r);
            std::string cell = (v == 0) ? "." : std::to_string(v);
            cells[static_cast<std::size_t>(r)].push_back(cell);
            width[static_cast<std::size_t>(i)] =
                std::max(width[static_cast<std::size_t>(i)], cell.size());
        }
    }
    std::ostringstream os;
    os << "betti " << kind_name(t.kind) << " n=" << t.n << " field=" << t.field_name
       << "\n";
    std::size_t rowlabel = std::to_string(rmax).size();
    os << std::string(rowlabel + 2, ' ');
    for (int i = 0; i <= imax; ++i) {
        os << " " << std::string(width[static_cast<std::size_t>(i)] - headers[static_cast<std::size_t>(i)].size(), ' ')
           << headers[static_cast<std::size_t>(i)];
    }
    os << "\n";
    for (int r = 0; r <= rmax; ++r) {
        std::string lab = std::to_string(r);
        os << std::string(rowlabel - lab.size(), ' ') << lab << ": ";
        for (int i = 0; i <= imax; ++i) {
            const std::string& cell = cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
            os << " " << std::string(width[static_cast<std::size_t>(i)] - cell.size(), ' ') << cell;
        }
        os << "\n";
    }
    return os.str();
}

// Compact single-line JSON; the trivial beta_{0,0} = 1 entry is implied and
// not listed.
inline std::string to_json(const GradedBettiTable& t) {
    std::ostringstream os;
    os << "{\"kind\":\"" << kind_name(t.kind) << "\",\"n\":" << t.n << ",\"field\":\""
       << t.field_name << "\",\"entries\":[";
    bool first = true;
    for (const auto& [ij, v] : t.entries) {
        if (ij.first == 0 && ij.second == 0) continue;
        if (!first) os << ",";
        first = false;
        os << "{\"i\":" << ij.first << ",\"j\":" << ij.second << ",\"beta\":" << v << "}";
    }
    os << "],\"complete_columns\":[";
    first = true;
    for (int i : t.complete_columns) {
        if (!first) os << ",";
        first = false;
        os << i;
    }
    os << "]}";
    return os.str();
}

inline std::string to_csv(const GradedBettiTable& t) {
    std::ostringstream os;
    os << "i,j,beta\n";
    for (const auto& [ij, v] : t.entries) {
        os << ij.first << "," << ij.second << "," << v << "\n";
    }
    return os.str();
}

}  // namespace apolar
