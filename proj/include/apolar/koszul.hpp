#pragma once

// Blockwise Koszul homology for the graded Betti numbers of the apolar
// quotient algebra.  In internal strand j the complex at homological index
// i is Wedge^i(V) tensor A_{j-i} with V the n^2 variables and A the
// minor-basis algebra; the differential peels one variable off the wedge
// and multiplies it into A.  Every term is multihomogeneous, so each strand
// splits into independent blocks indexed by multidegree, and only one
// representative per row/column-permutation class is computed.
//
// Element encoding (n <= 5): wedge cell bitmask in bits 0..24, deleted-row
// mask in bits 32..36, deleted-column mask in bits 40..44 of a uint64.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "apolar/betti.hpp"
#include "apolar/linalg.hpp"
#include "apolar/minor_basis.hpp"
#include "apolar/monomial.hpp"
#include "apolar/util.hpp"

namespace apolar {

struct BettiOptions {
    int max_strand = -1;               // -1: full range for n <= 4, 6 for n = 5
    long long level_budget = 2000000;  // max basis elements per block level
    int threads = 0;                   // 0: env override or hardware default
    int n_cap = 5;
};

namespace koszul_detail {

using Key = std::uint64_t;

inline Key pack(std::uint32_t wedge, std::uint32_t rows, std::uint32_t cols) {
    return Key(wedge) | (Key(rows) << 32) | (Key(cols) << 40);
}
inline std::uint32_t wedge_of(Key k) { return static_cast<std::uint32_t>(k & 0x1ffffffu); }
inline std::uint32_t rows_of(Key k) { return static_cast<std::uint32_t>((k >> 32) & 0x1fu); }
inline std::uint32_t cols_of(Key k) { return static_cast<std::uint32_t>((k >> 40) & 0x1fu); }

// All level-d elements of the block: deleted sets (R, C) inside the support
// of mu, and a 0/1 wedge matrix with margins mu.row - 1_R, mu.col - 1_C.
inline std::vector<Key> level_basis(int n, const Multidegree& mu, int d) {
    std::vector<Key> out;
    if (d < 0 || d > n) return out;
    std::vector<int> rcand, ccand;
    for (int i = 0; i < n; ++i) {
        if (mu.row[i] >= 1) rcand.push_back(i);
        if (mu.col[i] >= 1) ccand.push_back(i);
    }
    if (static_cast<int>(rcand.size()) < d || static_cast<int>(ccand.size()) < d) {
        return out;
    }
    std::vector<std::uint32_t> rsets, csets;
    for_each_subset(static_cast<int>(rcand.size()), d, [&](const std::vector<int>& s) {
        std::uint32_t m = 0;
        for (int v : s) m |= 1u << rcand[static_cast<std::size_t>(v)];
        rsets.push_back(m);
    });
    for_each_subset(static_cast<int>(ccand.size()), d, [&](const std::vector<int>& s) {
        std::uint32_t m = 0;
        for (int v : s) m |= 1u << ccand[static_cast<std::size_t>(v)];
        csets.push_back(m);
    });
    std::vector<int> mrow(static_cast<std::size_t>(n)), mcol(static_cast<std::size_t>(n));
    for (auto R : rsets) {
        bool ok = true;
        int wsum = 0;
        for (int i = 0; i < n; ++i) {
            mrow[static_cast<std::size_t>(i)] = mu.row[i] - ((R >> i) & 1);
            if (mrow[static_cast<std::size_t>(i)] < 0 ||
                mrow[static_cast<std::size_t>(i)] > n) {
                ok = false;
            }
            wsum += mrow[static_cast<std::size_t>(i)];
        }
        if (!ok) continue;
        for (auto C : csets) {
            int csum = 0;
            bool cok = true;
            for (int jx = 0; jx < n; ++jx) {
                mcol[static_cast<std::size_t>(jx)] = mu.col[jx] - ((C >> jx) & 1);
                if (mcol[static_cast<std::size_t>(jx)] < 0 ||
                    mcol[static_cast<std::size_t>(jx)] > n) {
                    cok = false;
                }
                csum += mcol[static_cast<std::size_t>(jx)];
            }
            if (!cok || csum != wsum) continue;
            // wedge matrices row by row
            std::vector<int> colrem = mcol;
            std::function<void(int, std::uint32_t)> rec = [&](int i, std::uint32_t wedge) {
                if (i == n) {
                    out.push_back(pack(wedge, R, C));
                    return;
                }
                int need = mrow[static_cast<std::size_t>(i)];
                // choose the columns of row i
                std::function<void(int, int, std::uint32_t)> pick =
                    [&](int j0, int left, std::uint32_t acc) {
                        if (left == 0) {
                            rec(i + 1, acc);
                            return;
                        }
                        if (n - j0 < left) return;
                        for (int jx = j0; jx <= n - left; ++jx) {
                            if (colrem[static_cast<std::size_t>(jx)] <= 0) continue;
                            colrem[static_cast<std::size_t>(jx)]--;
                            pick(jx + 1, left - 1,
                                 acc | (1u << (i * n + jx)));
                            colrem[static_cast<std::size_t>(jx)]++;
                        }
                    };
                pick(0, need, wedge);
            };
            rec(0, 0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace koszul_detail

struct StrandBlock {
    Multidegree mu;            // class representative (both sides sorted desc)
    long long orbit_size = 0;  // ordered multidegrees in its class
    bool capped = false;       // level budget exceeded; dims invalid
    std::map<int, long long> beta_by_i;  // per-single-multidegree dimensions
};

namespace koszul_detail {

template <typename F>
StrandBlock compute_block(const F& field, PolyKind kind, int n, int j,
                          const Multidegree& mu, long long orbit,
                          long long level_budget) {
    StrandBlock blk;
    blk.mu = mu;
    blk.orbit_size = orbit;
    int dmax = std::min(n, j);
    std::vector<std::vector<Key>> bases(static_cast<std::size_t>(dmax) + 1);
    for (int d = 0; d <= dmax; ++d) {
        bases[static_cast<std::size_t>(d)] = level_basis(n, mu, d);
        if (static_cast<long long>(bases[static_cast<std::size_t>(d)].size()) >
            level_budget) {
            blk.capped = true;
            return blk;
        }
    }
    std::vector<long long> r(static_cast<std::size_t>(dmax) + 1, 0);
    for (int d = 0; d < dmax; ++d) {
        const auto& src = bases[static_cast<std::size_t>(d)];
        const auto& tgt = bases[static_cast<std::size_t>(d) + 1];
        if (src.empty() || tgt.empty()) continue;
        std::unordered_map<Key, int> tgt_index;
        tgt_index.reserve(tgt.size() * 2);
        for (std::size_t idx = 0; idx < tgt.size(); ++idx) {
            tgt_index.emplace(tgt[idx], static_cast<int>(idx));
        }
        SparseMatrix<F> m(static_cast<int>(src.size()), static_cast<int>(tgt.size()));
        for (std::size_t s = 0; s < src.size(); ++s) {
            std::uint32_t wedge = wedge_of(src[s]);
            MinorBasisElement b{n, rows_of(src[s]), cols_of(src[s])};
            int tpos = 0;
            for (std::uint32_t rest = wedge; rest != 0; rest &= rest - 1) {
                ++tpos;
                int cell = __builtin_ctz(rest);
                auto act = variable_action(kind, b, cell / n, cell % n);
                if (act.coeff == 0) continue;
                int sign = (tpos % 2 == 1) ? act.coeff : -act.coeff;
                Key tk = pack(wedge & ~(1u << cell), act.image.rows, act.image.cols);
                m.add(static_cast<int>(s), tgt_index.at(tk), F::from_int(sign));
            }
        }
        r[static_cast<std::size_t>(d)] = rank(field, m);
    }
    for (int d = 0; d <= dmax; ++d) {
        long long size = static_cast<long long>(bases[static_cast<std::size_t>(d)].size());
        if (size == 0) continue;
        long long dim = size - r[static_cast<std::size_t>(d)] -
                        (d > 0 ? r[static_cast<std::size_t>(d) - 1] : 0);
        if (dim != 0) blk.beta_by_i[j - d] = dim;
    }
    return blk;
}

}  // namespace koszul_detail

// All blocks of one strand, one entry per multidegree class.  Blocks that
// blow the level budget come back flagged `capped` with no dims.
template <typename F>
std::vector<StrandBlock> betti_strand(const F& field, PolyKind kind, int n, int j,
                                      const BettiOptions& opt = {}) {
    if (n < 1 || n > opt.n_cap) {
        throw CapError("betti engine supports 1 <= n <= " + std::to_string(opt.n_cap));
    }
    std::vector<std::pair<Multidegree, long long>> classes;
    for (auto& [mu, count] : multidegree_classes(n, j)) {
        if (!mu.row.empty() && (mu.row[0] > n + 1 || mu.col[0] > n + 1)) continue;
        classes.emplace_back(mu, count);
    }
    std::vector<StrandBlock> out(classes.size());
    parallel_for(classes.size(), effective_threads(opt.threads), [&](std::size_t t) {
        out[t] = koszul_detail::compute_block(field, kind, n, j, classes[t].first,
                                              classes[t].second, opt.level_budget);
    });
    return out;
}

inline int top_strand(int n) { return n * n + n; }

// Full (or strand-capped) Betti table.  A column i is complete exactly when
// every strand i..min(i+n, top) was computed without hitting the budget;
// strands with a capped block contribute nothing and poison their columns.
template <typename F>
GradedBettiTable betti_koszul(const F& field, PolyKind kind, int n,
                              BettiOptions opt = {}) {
    if (n < 1 || n > opt.n_cap) {
        throw CapError("betti engine supports 1 <= n <= " + std::to_string(opt.n_cap));
    }
    int sigma = top_strand(n);
    int max_strand = opt.max_strand;
    if (max_strand < 0) max_strand = (n <= 4) ? sigma : 6;
    max_strand = std::min(max_strand, sigma);

    GradedBettiTable table;
    table.kind = kind;
    table.n = n;
    table.field_name = field.name();
    table.max_strand = max_strand;

    std::vector<char> strand_ok(static_cast<std::size_t>(max_strand) + 1, 0);
    for (int j = 0; j <= max_strand; ++j) {
        auto blocks = betti_strand(field, kind, n, j, opt);
        bool ok = true;
        for (const auto& b : blocks) {
            if (b.capped) ok = false;
        }
        strand_ok[static_cast<std::size_t>(j)] = ok ? 1 : 0;
        if (!ok) {
            table.capped_strands.insert(j);
            continue;
        }
        for (const auto& b : blocks) {
            for (const auto& [i, dim] : b.beta_by_i) {
                table.add(i, j, dim * b.orbit_size);
            }
        }
    }
    for (int i = 0; i <= n * n; ++i) {
        bool complete = true;
        for (int j = i; j <= std::min(i + n, sigma); ++j) {
            if (j > max_strand || !strand_ok[static_cast<std::size_t>(j)]) {
                complete = false;
                break;
            }
        }
        if (complete) table.complete_columns.insert(i);
    }
    return table;
}

// Table restricted to the strands needed for the requested (i, j) cells.
template <typename F>
GradedBettiTable betti_cells(const F& field, PolyKind kind, int n,
                             const std::vector<std::pair<int, int>>& cells,
                             BettiOptions opt = {}) {
    if (n < 1 || n > opt.n_cap) {
        throw CapError("betti engine supports 1 <= n <= " + std::to_string(opt.n_cap));
    }
    GradedBettiTable table;
    table.kind = kind;
    table.n = n;
    table.field_name = field.name();
    std::set<int> strands;
    for (auto [i, j] : cells) strands.insert(j);
    for (int j : strands) {
        if (j < 0 || j > top_strand(n)) continue;
        auto blocks = betti_strand(field, kind, n, j, opt);
        for (const auto& b : blocks) {
            if (b.capped) {
                throw CapError("strand " + std::to_string(j) +
                               " exceeded the level budget");
            }
        }
        for (const auto& b : blocks) {
            for (const auto& [i, dim] : b.beta_by_i) {
                table.add(i, j, dim * b.orbit_size);
            }
        }
        table.max_strand = std::max(table.max_strand, j);
    }
    return table;
}

// Dimensions of beta_{i,j} refined by ordered multidegree, for the weight
// calculus cross-checks.  Every ordered multidegree in a class carries the
// class dimension (row/column permutations act by isomorphisms).
template <typename F>
std::map<Multidegree, long long> betti_refined(const F& field, PolyKind kind, int n,
                                               int i, int j,
                                               const BettiOptions& opt = {}) {
    std::map<Multidegree, long long> out;
    for (const auto& b : betti_strand(field, kind, n, j, opt)) {
        if (b.capped) {
            throw CapError("strand " + std::to_string(j) + " exceeded the level budget");
        }
        auto it = b.beta_by_i.find(i);
        if (it == b.beta_by_i.end()) continue;
        // expand the class: all ordered row/col rearrangements
        std::vector<int> rs = b.mu.row, cs = b.mu.col;
        std::sort(rs.begin(), rs.end());
        std::sort(cs.begin(), cs.end());
        std::vector<std::vector<int>> rows_all, cols_all;
        do {
            rows_all.push_back(rs);
        } while (std::next_permutation(rs.begin(), rs.end()));
        do {
            cols_all.push_back(cs);
        } while (std::next_permutation(cs.begin(), cs.end()));
        for (const auto& rv : rows_all) {
            for (const auto& cv : cols_all) {
                out.emplace(Multidegree(rv, cv), it->second);
            }
        }
    }
    return out;
}

}  // namespace apolar
