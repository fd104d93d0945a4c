#pragma once

// The determinant / permanent of the generic n x n matrix, the canonical
// quadric generating set of its apolar ideal, and exact verification that
// those quadrics annihilate the form and span the full degree-2 piece.
//
// Generator families, in canonical order:
//   squares      X[i,j]^2                       (row-major i, j)
//   same row     X[i,j] X[i,k], j < k           (i ascending, then j, k)
//   same column  X[i,j] X[k,j], i < k           (j ascending, then i, k)
//   mixed        X[i,j] X[k,l] +/- X[i,l] X[k,j], i < k, j < l
//                (+ for the determinant, - for the permanent; the first
//                 term is the canonical orientation)

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/monomial.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/util.hpp"

namespace apolar {

enum class PolyKind { Det, Perm };

inline std::string kind_name(PolyKind k) { return k == PolyKind::Det ? "det" : "perm"; }

inline PolyKind parse_kind(const std::string& s) {
    if (s == "det" || s == "determinant") return PolyKind::Det;
    if (s == "perm" || s == "permanent") return PolyKind::Perm;
    throw UsageError("unknown kind '" + s + "' (use det or perm)");
}

// Sum over permutations of signed (Det) or plain (Perm) products of entries.
template <typename F>
Polynomial<F> build_polynomial(PolyKind kind, int n) {
    if (n < 1) throw UsageError("build_polynomial requires n >= 1");
    Polynomial<F> f(n);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int sign = 1;
        if (kind == PolyKind::Det) {
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (sigma[i] > sigma[j]) sign = -sign;
                }
            }
        }
        Monomial m(n);
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < n; ++i) cells.emplace_back(i * n + sigma[i], 1);
        std::sort(cells.begin(), cells.end());
        m.e = std::move(cells);
        f.terms.emplace(std::move(m), F::from_int(sign));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return f;
}

enum class GenType { Square, SameRow, SameCol, Mixed };

struct GeneratorInfo {
    GenType type;
    std::array<int, 2> rows;  // 0-based; equal for Square/SameRow
    std::array<int, 2> cols;  // equal for Square/SameCol

    bool operator==(const GeneratorInfo& o) const {
        return type == o.type && rows == o.rows && cols == o.cols;
    }
    bool operator<(const GeneratorInfo& o) const {
        if (type != o.type) return type < o.type;
        if (rows != o.rows) return rows < o.rows;
        return cols < o.cols;
    }

    template <typename F>
    Polynomial<F> polynomial(PolyKind kind, int n) const {
        Polynomial<F> g(n);
        switch (type) {
            case GenType::Square:
                g.add_term(Monomial::var(n, rows[0], cols[0], 2), F::one());
                break;
            case GenType::SameRow:
                g.add_term(Monomial::var(n, rows[0], cols[0]) * Monomial::var(n, rows[0], cols[1]),
                           F::one());
                break;
            case GenType::SameCol:
                g.add_term(Monomial::var(n, rows[0], cols[0]) * Monomial::var(n, rows[1], cols[0]),
                           F::one());
                break;
            case GenType::Mixed: {
                g.add_term(Monomial::var(n, rows[0], cols[0]) * Monomial::var(n, rows[1], cols[1]),
                           F::one());
                auto anti = Monomial::var(n, rows[0], cols[1]) * Monomial::var(n, rows[1], cols[0]);
                g.add_term(anti, kind == PolyKind::Det ? F::one() : F::neg(F::one()));
                break;
            }
        }
        return g;
    }

    std::string to_string() const {
        std::ostringstream os;
        switch (type) {
            case GenType::Square:
                os << "sq(" << rows[0] + 1 << "," << cols[0] + 1 << ")";
                break;
            case GenType::SameRow:
                os << "row(" << rows[0] + 1 << ";" << cols[0] + 1 << "," << cols[1] + 1 << ")";
                break;
            case GenType::SameCol:
                os << "col(" << cols[0] + 1 << ";" << rows[0] + 1 << "," << rows[1] + 1 << ")";
                break;
            case GenType::Mixed:
                os << "mix(" << rows[0] + 1 << "," << rows[1] + 1 << ";" << cols[0] + 1 << ","
                   << cols[1] + 1 << ")";
                break;
        }
        return os.str();
    }
};

// Canonical generator list plus index lookups by structure.
struct GeneratorSet {
    int n = 0;
    std::vector<GeneratorInfo> infos;
    std::map<GeneratorInfo, int> index;

    explicit GeneratorSet(int n_) : n(n_) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                infos.push_back({GenType::Square, {i, i}, {j, j}});
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    infos.push_back({GenType::SameRow, {i, i}, {j, k}});
                }
            }
        }
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                for (int k = i + 1; k < n; ++k) {
                    infos.push_back({GenType::SameCol, {i, k}, {j, j}});
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int k = i + 1; k < n; ++k) {
                for (int j = 0; j < n; ++j) {
                    for (int l = j + 1; l < n; ++l) {
                        infos.push_back({GenType::Mixed, {i, k}, {j, l}});
                    }
                }
            }
        }
        for (std::size_t t = 0; t < infos.size(); ++t) {
            index.emplace(infos[t], static_cast<int>(t));
        }
    }

    int size() const { return static_cast<int>(infos.size()); }

    int square(int i, int j) const { return index.at({GenType::Square, {i, i}, {j, j}}); }
    int same_row(int i, int j, int k) const {
        return index.at({GenType::SameRow, {i, i}, {std::min(j, k), std::max(j, k)}});
    }
    int same_col(int j, int i, int k) const {
        return index.at({GenType::SameCol, {std::min(i, k), std::max(i, k)}, {j, j}});
    }
    int mixed(int i, int k, int j, int l) const {
        return index.at({GenType::Mixed, {std::min(i, k), std::max(i, k)},
                         {std::min(j, l), std::max(j, l)}});
    }
    int find(const GeneratorInfo& g) const {
        auto it = index.find(g);
        return it == index.end() ? -1 : it->second;
    }
};

template <typename F>
std::vector<Polynomial<F>> shafiei_generators(PolyKind kind, int n) {
    if (n < 2) throw UsageError("shafiei_generators requires n >= 2");
    GeneratorSet gens(n);
    std::vector<Polynomial<F>> out;
    out.reserve(gens.infos.size());
    for (const auto& info : gens.infos) out.push_back(info.template polynomial<F>(kind, n));
    return out;
}

inline long long expected_generator_count(int n) {
    // n^2 squares + 2 n C(n,2) same row/col + C(n,2)^2 mixed = C(n+1,2)^2
    return binom(n + 1, 2) * binom(n + 1, 2);
}

struct AnnihilationReport {
    int n = 0;
    PolyKind kind = PolyKind::Det;
    long long generator_count = 0;
    long long expected_count = 0;
    bool all_annihilate = false;
    long long span_rank = 0;         // rank of the generators inside degree 2
    long long degree2_apolar_dim = 0;  // dim S_2 minus catalecticant rank
    bool ok() const {
        return generator_count == expected_count && all_annihilate &&
               span_rank == generator_count && degree2_apolar_dim == generator_count;
    }
};

// Checks, over the given field, that the canonical quadrics annihilate the
// form, are linearly independent, and span the whole degree-2 piece of the
// apolar ideal (computed independently as the kernel of contraction against
// the form).
template <typename F>
AnnihilationReport verify_annihilation(const F& field, PolyKind kind, int n) {
    AnnihilationReport rep;
    rep.n = n;
    rep.kind = kind;
    rep.expected_count = expected_generator_count(n);

    Polynomial<F> f = build_polynomial<F>(kind, n);
    auto gens = shafiei_generators<F>(kind, n);
    rep.generator_count = static_cast<long long>(gens.size());

    rep.all_annihilate = true;
    for (const auto& g : gens) {
        if (!contract(g, f).is_zero()) {
            rep.all_annihilate = false;
            break;
        }
    }

    // Independence: expand generators in the monomial basis of S_2.
    auto deg2 = monomials_of_degree(n, 2);
    std::map<Monomial, int, GradedLexGreater> col_of;
    for (std::size_t t = 0; t < deg2.size(); ++t) col_of.emplace(deg2[t], static_cast<int>(t));
    SparseMatrix<F> span_m(static_cast<int>(gens.size()), static_cast<int>(deg2.size()));
    for (std::size_t r = 0; r < gens.size(); ++r) {
        for (const auto& [m, c] : gens[r].terms) {
            span_m.add(static_cast<int>(r), col_of.at(m), c);
        }
    }
    rep.span_rank = rank(field, span_m);

    // Catalecticant in degree 2: rows = degree-2 monomials, columns = the
    // degree n-2 monomials arising from contractions against f.
    std::map<Monomial, int, GradedLexGreater> cof_col;
    std::vector<std::tuple<int, int, typename F::Elem>> entries;
    for (std::size_t r = 0; r < deg2.size(); ++r) {
        auto g = contract(deg2[r], f);
        for (const auto& [m, c] : g.terms) {
            auto [it, fresh] = cof_col.emplace(m, static_cast<int>(cof_col.size()));
            entries.emplace_back(static_cast<int>(r), it->second, c);
        }
    }
    SparseMatrix<F> cat(static_cast<int>(deg2.size()),
                        std::max<int>(1, static_cast<int>(cof_col.size())));
    for (auto& [r, c, v] : entries) cat.add(r, c, v);
    rep.degree2_apolar_dim = static_cast<long long>(deg2.size()) - rank(field, cat);
    return rep;
}

// Dimension of the degree-d piece of the apolar quotient algebra.
inline long long quotient_dim(int n, int d) {
    if (d < 0 || d > n) return 0;
    return binom(n, d) * binom(n, d);
}

// Independent check of quotient_dim: the rank of the contraction pairing
// S_d x S_{n-d} -> K evaluated on the form.
template <typename F>
long long quotient_dim_verified(const F& field, PolyKind kind, int n, int d) {
    if (d < 0 || d > n) return 0;
    Polynomial<F> f = build_polynomial<F>(kind, n);
    auto degd = monomials_of_degree(n, d);
    std::map<Monomial, int, GradedLexGreater> cof_col;
    std::vector<std::tuple<int, int, typename F::Elem>> entries;
    for (std::size_t r = 0; r < degd.size(); ++r) {
        auto g = contract(degd[r], f);
        for (const auto& [m, c] : g.terms) {
            auto [it, fresh] = cof_col.emplace(m, static_cast<int>(cof_col.size()));
            entries.emplace_back(static_cast<int>(r), it->second, c);
        }
    }
    SparseMatrix<F> cat(static_cast<int>(degd.size()),
                        std::max<int>(1, static_cast<int>(cof_col.size())));
    for (auto& [r, c, v] : entries) cat.add(r, c, v);
    return rank(field, cat);
}

}  // namespace apolar
