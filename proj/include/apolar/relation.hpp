#pragma once

// First-syzygy machinery: formal S-linear combinations of the quadric
// generators, the evaluation (Koszul d1) map, multigraded relation spaces as
// exact kernels, the canonical relation templates and their symmetry orbit,
// and the degreewise generation check that compares the full relation space
// against what the orbit generates.

#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "apolar/apolar_ideal.hpp"
#include "apolar/linalg.hpp"
#include "apolar/monomial.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/util.hpp"

namespace apolar {

inline Multidegree generator_multidegree(const GeneratorInfo& g, int n) {
    Multidegree d(std::vector<int>(n, 0), std::vector<int>(n, 0));
    d.row[g.rows[0]] += 1;
    d.row[g.rows[1]] += 1;
    d.col[g.cols[0]] += 1;
    d.col[g.cols[1]] += 1;
    return d;
}

// One formal term: monomial coefficient times a generator, keyed for
// deterministic iteration (generator index ascending, then monomials in
// graded-lex descending order).
struct RelationTermKey {
    int gen = 0;
    Monomial mon;
};

struct RelationTermKeyLess {
    bool operator()(const RelationTermKey& a, const RelationTermKey& b) const {
        if (a.gen != b.gen) return a.gen < b.gen;
        return graded_lex_greater(a.mon, b.mon);
    }
};

template <typename F>
struct RelationElement {
    using K = typename F::Elem;

    int n = 0;
    PolyKind kind = PolyKind::Det;
    std::map<RelationTermKey, K, RelationTermKeyLess> terms;

    RelationElement() = default;
    RelationElement(int n_, PolyKind kind_) : n(n_), kind(kind_) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const Monomial& mon, int gen, const K& c) {
        if (F::is_zero(c)) return;
        RelationTermKey key{gen, mon};
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(std::move(key), c);
        } else {
            it->second = F::add(it->second, c);
            if (F::is_zero(it->second)) terms.erase(it);
        }
    }

    RelationElement operator+(const RelationElement& o) const {
        RelationElement r = *this;
        for (const auto& [k, c] : o.terms) r.add_term(k.mon, k.gen, c);
        return r;
    }
    RelationElement operator-(const RelationElement& o) const {
        RelationElement r = *this;
        for (const auto& [k, c] : o.terms) r.add_term(k.mon, k.gen, F::neg(c));
        return r;
    }
    RelationElement scaled(const K& c) const {
        RelationElement r(n, kind);
        if (F::is_zero(c)) return r;
        for (const auto& [k, x] : terms) r.terms.emplace(k, F::mul(x, c));
        return r;
    }
    RelationElement times_monomial(const Monomial& m) const {
        RelationElement r(n, kind);
        for (const auto& [k, x] : terms) r.terms.emplace(RelationTermKey{k.gen, k.mon * m}, x);
        return r;
    }

    Multidegree multidegree(const GeneratorSet& gens) const {
        if (terms.empty()) return Multidegree(std::vector<int>(n, 0), std::vector<int>(n, 0));
        const auto& k = terms.begin()->first;
        return k.mon.multidegree() + generator_multidegree(gens.infos[k.gen], n);
    }

    // Image in the ring: sum of coeff * monomial * generator polynomial.
    Polynomial<F> d1(const GeneratorSet& gens) const {
        Polynomial<F> out(n);
        for (const auto& [k, c] : terms) {
            auto g = gens.infos[k.gen].template polynomial<F>(kind, n);
            for (const auto& [gm, gc] : g.terms) out.add_term(gm * k.mon, F::mul(gc, c));
        }
        return out;
    }

    std::string to_string(const GeneratorSet& gens) const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms) {
            std::string cs = F::to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            if (mag != "1") os << mag << "*";
            if (!k.mon.e.empty()) os << k.mon.to_string() << "*";
            os << gens.infos[k.gen].to_string();
        }
        return os.str();
    }
};

struct F1Term {
    Monomial mon;
    int gen = 0;
};

struct F1TermLess {
    bool operator()(const std::pair<int, Monomial>& a,
                    const std::pair<int, Monomial>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return graded_lex_greater(a.second, b.second);
    }
};

// All formal terms f*(g) of the given multidegree: generator index
// ascending, monomial cofactors in graded-lex descending order.
inline std::vector<F1Term> f1_terms(PolyKind kind, int n, const Multidegree& mu) {
    (void)kind;  // the generator index set is the same for both kinds
    if (mu.total() < 2) return {};
    GeneratorSet gens(n);
    std::vector<F1Term> out;
    for (int g = 0; g < gens.size(); ++g) {
        Multidegree gd = generator_multidegree(gens.infos[g], n);
        if (!gd.leq(mu)) continue;
        auto mons = monomials_of_multidegree(mu - gd);
        std::sort(mons.begin(), mons.end(), graded_lex_greater);
        for (auto& m : mons) out.push_back({std::move(m), g});
    }
    return out;
}

// Evaluation matrix of d1 restricted to multidegree mu: rows are the
// monomials of S_mu (graded-lex descending), columns the f1 terms.
template <typename F>
SparseMatrix<F> evaluation_matrix(const F&, PolyKind kind, int n, const Multidegree& mu,
                                  const std::vector<F1Term>& terms) {
    auto mons = monomials_of_multidegree(mu);
    std::sort(mons.begin(), mons.end(), graded_lex_greater);
    std::map<Monomial, int, GradedLexGreater> row_of;
    for (std::size_t r = 0; r < mons.size(); ++r) row_of.emplace(mons[r], static_cast<int>(r));
    GeneratorSet gens(n);
    SparseMatrix<F> m(static_cast<int>(mons.size()), static_cast<int>(terms.size()));
    for (std::size_t c = 0; c < terms.size(); ++c) {
        auto g = gens.infos[terms[c].gen].template polynomial<F>(kind, n);
        for (const auto& [gm, gc] : g.terms) {
            m.add(row_of.at(gm * terms[c].mon), static_cast<int>(c), gc);
        }
    }
    return m;
}

// Exact basis of the relation space in one multidegree.
template <typename F>
std::vector<RelationElement<F>> relations_multidegree(const F& field, PolyKind kind, int n,
                                                      const Multidegree& mu) {
    auto terms = f1_terms(kind, n, mu);
    std::vector<RelationElement<F>> out;
    if (terms.empty()) return out;
    auto m = evaluation_matrix(field, kind, n, mu, terms);
    auto ker = kernel_basis(field, m);
    for (const auto& v : ker) {
        RelationElement<F> rel(n, kind);
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (!F::is_zero(v[c])) rel.add_term(terms[c].mon, terms[c].gen, v[c]);
        }
        out.push_back(std::move(rel));
    }
    return out;
}

template <typename F>
long long relation_space_dim(const F& field, PolyKind kind, int n, const Multidegree& mu) {
    auto terms = f1_terms(kind, n, mu);
    if (terms.empty()) return 0;
    auto m = evaluation_matrix(field, kind, n, mu, terms);
    return static_cast<long long>(terms.size()) - rank(field, m);
}

// ---------------------------------------------------------------------------
// Canonical relation templates and their symmetry orbit
// ---------------------------------------------------------------------------

struct TemplateTerm {
    long long coeff = 0;
    // monomial cells (row, col, exponent), 0-based within the footprint
    std::vector<std::array<int, 3>> mon_cells;
    GeneratorInfo gen;
};

struct RelationTemplate {
    std::string name;
    int row_footprint = 0;
    int col_footprint = 0;
    int degree = 3;  // standard degree of each term (monomial + quadric)
    std::vector<TemplateTerm> terms;
};

// The named templates whose symmetry orbits generate the first syzygies.
// The last determinant entry is the six-term relation supported on a 3x3
// footprint; the permanent list carries sign twists plus one extra template
// of degree 4 on a 2x4 footprint.
inline std::vector<RelationTemplate> canonical_relation_templates(PolyKind kind) {
    auto sq = [](int i, int j) { return GeneratorInfo{GenType::Square, {i, i}, {j, j}}; };
    auto row = [](int i, int j, int k) {
        return GeneratorInfo{GenType::SameRow, {i, i}, {j, k}};
    };
    auto col = [](int j, int i, int k) {
        return GeneratorInfo{GenType::SameCol, {i, k}, {j, j}};
    };
    auto mix = [](int i, int k, int j, int l) {
        return GeneratorInfo{GenType::Mixed, {i, k}, {j, l}};
    };
    using Cells = std::vector<std::array<int, 3>>;
    std::vector<RelationTemplate> out;
    bool det = (kind == PolyKind::Det);
    // rho1 = X12 sq(1,1) - X11 row(1;1,2)
    out.push_back({"rho1", 1, 2, 3,
                   {{+1, Cells{{0, 1, 1}}, sq(0, 0)}, {-1, Cells{{0, 0, 1}}, row(0, 0, 1)}}});
    // rho2 = X13 row(1;1,2) - X12 row(1;1,3)
    out.push_back({"rho2", 1, 3, 3,
                   {{+1, Cells{{0, 2, 1}}, row(0, 0, 1)}, {-1, Cells{{0, 1, 1}}, row(0, 0, 2)}}});
    // rho3 = X21 row(1;1,2) - X12 col(1;1,2)
    out.push_back({"rho3", 2, 2, 3,
                   {{+1, Cells{{1, 0, 1}}, row(0, 0, 1)}, {-1, Cells{{0, 1, 1}}, col(0, 0, 1)}}});
    // rho4 = X11 mix(1,2;1,2) -/+ X21 row(1;1,2) - X22 sq(1,1)
    out.push_back({"rho4", 2, 2, 3,
                   {{+1, Cells{{0, 0, 1}}, mix(0, 1, 0, 1)},
                    {det ? -1 : +1, Cells{{1, 0, 1}}, row(0, 0, 1)},
                    {-1, Cells{{1, 1, 1}}, sq(0, 0)}}});
    // rho5 = X13 mix(1,2;1,2) - X22 row(1;1,3) -/+ X21 row(1;2,3)
    out.push_back({"rho5", 2, 3, 3,
                   {{+1, Cells{{0, 2, 1}}, mix(0, 1, 0, 1)},
                    {-1, Cells{{1, 1, 1}}, row(0, 0, 2)},
                    {det ? -1 : +1, Cells{{1, 0, 1}}, row(0, 1, 2)}}});
    // rhoS = X33 mix(1,2;1,2) -/+ X12 mix(2,3;1,3) -/+ X23 mix(1,3;1,2)
    //        - X11 mix(2,3;2,3)
    out.push_back({"rhoS", 3, 3, 3,
                   {{+1, Cells{{2, 2, 1}}, mix(0, 1, 0, 1)},
                    {det ? -1 : +1, Cells{{0, 1, 1}}, mix(1, 2, 0, 2)},
                    {det ? +1 : -1, Cells{{1, 2, 1}}, mix(0, 2, 0, 1)},
                    {-1, Cells{{0, 0, 1}}, mix(1, 2, 1, 2)}}});
    if (kind == PolyKind::Perm) {
        // rhoQ = X23 X24 row(1;1,2) - X11 X12 row(2;3,4)
        out.push_back({"rhoQ", 2, 4, 4,
                       {{+1, Cells{{1, 2, 1}, {1, 3, 1}}, row(0, 0, 1)},
                        {-1, Cells{{0, 0, 1}, {0, 1, 1}}, row(1, 2, 3)}}});
    }
    return out;
}

// Push a generator through an injective cell map (row image, col image,
// optional transpose applied first).  Mixed generators may land with their
// positive diagonal on the anti-diagonal of the canonical form; for the
// permanent that flips the sign.
inline std::pair<GeneratorInfo, int> transform_generator(
    PolyKind kind, const GeneratorInfo& g,
    const std::function<std::pair<int, int>(int, int)>& cell_map) {
    auto order2 = [](int a, int b) {
        return std::array<int, 2>{std::min(a, b), std::max(a, b)};
    };
    switch (g.type) {
        case GenType::Square: {
            auto [i, j] = cell_map(g.rows[0], g.cols[0]);
            return {GeneratorInfo{GenType::Square, {i, i}, {j, j}}, 1};
        }
        case GenType::SameRow:
        case GenType::SameCol: {
            std::pair<int, int> a, b;
            if (g.type == GenType::SameRow) {
                a = cell_map(g.rows[0], g.cols[0]);
                b = cell_map(g.rows[0], g.cols[1]);
            } else {
                a = cell_map(g.rows[0], g.cols[0]);
                b = cell_map(g.rows[1], g.cols[0]);
            }
            if (a.first == b.first) {
                return {GeneratorInfo{GenType::SameRow, {a.first, a.first},
                                      order2(a.second, b.second)},
                        1};
            }
            return {GeneratorInfo{GenType::SameCol, order2(a.first, b.first),
                                  {a.second, a.second}},
                    1};
        }
        case GenType::Mixed: {
            auto a = cell_map(g.rows[0], g.cols[0]);  // positive diagonal
            auto b = cell_map(g.rows[1], g.cols[1]);
            GeneratorInfo img{GenType::Mixed, order2(a.first, b.first),
                              order2(a.second, b.second)};
            bool diagonal = (a.first < b.first) == (a.second < b.second);
            int sign = (kind == PolyKind::Perm && !diagonal) ? -1 : 1;
            return {img, sign};
        }
    }
    return {g, 1};  // unreachable
}

template <typename F>
RelationElement<F> instantiate_template(PolyKind kind, int n, const RelationTemplate& t,
                                        const std::vector<int>& row_image,
                                        const std::vector<int>& col_image, bool transpose) {
    GeneratorSet gens(n);
    auto cell_map = [&](int i, int j) -> std::pair<int, int> {
        if (transpose) return {row_image[j], col_image[i]};
        return {row_image[i], col_image[j]};
    };
    RelationElement<F> rel(n, kind);
    for (const auto& term : t.terms) {
        Monomial m(n);
        for (const auto& cell : term.mon_cells) {
            auto [i, j] = cell_map(cell[0], cell[1]);
            m = m * Monomial::var(n, i, j, cell[2]);
        }
        auto [gimg, sign] = transform_generator(kind, term.gen, cell_map);
        rel.add_term(m, gens.find(gimg), F::from_int(term.coeff * sign));
    }
    return rel;
}

namespace detail {

inline void for_each_injection(int k, int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> img(k, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> rec = [&](int idx) {
        if (idx == k) {
            fn(img);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            img[idx] = v;
            rec(idx + 1);
            used[v] = false;
        }
    };
    rec(0);
    (void)used;
}

}  // namespace detail

// Full symmetry orbit of the canonical templates at size n, deduplicated in
// the normalization where the leading term has coefficient +1.  Degree
// filter: 0 keeps everything, otherwise only templates of that degree.
template <typename F>
std::vector<RelationElement<F>> orbit_relations(const F&, PolyKind kind, int n,
                                                int degree_filter = 0) {
    GeneratorSet gens(n);
    std::vector<RelationElement<F>> out;
    std::set<std::string> seen;
    for (const auto& t : canonical_relation_templates(kind)) {
        if (degree_filter != 0 && t.degree != degree_filter) continue;
        for (int transpose = 0; transpose < 2; ++transpose) {
            int fr = transpose ? t.col_footprint : t.row_footprint;
            int fc = transpose ? t.row_footprint : t.col_footprint;
            if (fr > n || fc > n) continue;
            detail::for_each_injection(fr, n, [&](const std::vector<int>& rimg) {
                detail::for_each_injection(fc, n, [&](const std::vector<int>& cimg) {
                    auto rel = instantiate_template<F>(kind, n, t, rimg, cimg,
                                                       transpose != 0);
                    if (rel.is_zero()) return;
                    // normalize the leading coefficient to +1 (coefficients
                    // here are +/-1, so inversion is just a sign flip)
                    auto lead = rel.terms.begin()->second;
                    rel = rel.scaled(F::inv(lead));
                    auto key = rel.to_string(gens);
                    if (seen.insert(key).second) out.push_back(std::move(rel));
                });
            });
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generation check
// ---------------------------------------------------------------------------

struct GenerationClassReport {
    Multidegree mu;
    long long orbit_size = 0;
    long long relation_dim = 0;   // kernel dimension at the representative
    long long generated_dim = 0;  // dimension of the orbit-generated subspace
};

struct GenerationDegreeReport {
    int degree = 0;
    long long relation_dim = 0;   // summed over all ordered multidegrees
    long long generated_dim = 0;
    std::vector<GenerationClassReport> classes;
    long long deficiency() const { return relation_dim - generated_dim; }
};

struct GenerationReport {
    PolyKind kind = PolyKind::Det;
    int n = 0;
    bool include_quartic = true;
    std::vector<GenerationDegreeReport> degrees;
    long long total_deficiency() const {
        long long t = 0;
        for (const auto& d : degrees) t += d.deficiency();
        return t;
    }
};

// Compares, degree by degree and multidegree class by class, the exact
// relation space against the span of monomial multiples of the canonical
// orbit.  include_quartic controls whether the degree-4 permanent template
// participates.
template <typename F>
GenerationReport generation_check(const F& field, PolyKind kind, int n, int max_degree,
                                  bool include_quartic = true) {
    GenerationReport report;
    report.kind = kind;
    report.n = n;
    report.include_quartic = include_quartic;

    auto cubic = orbit_relations(field, kind, n, 3);
    std::vector<RelationElement<F>> quartic;
    if (include_quartic) quartic = orbit_relations(field, kind, n, 4);

    GeneratorSet gens(n);
    for (int d = 3; d <= max_degree; ++d) {
        GenerationDegreeReport deg;
        deg.degree = d;
        for (const auto& [mu, count] : multidegree_classes(n, d)) {
            auto terms = f1_terms(kind, n, mu);
            if (terms.empty()) continue;
            auto eval = evaluation_matrix(field, kind, n, mu, terms);
            long long kdim = static_cast<long long>(terms.size()) - rank(field, eval);
            if (kdim == 0) continue;

            std::map<std::pair<int, Monomial>, int, F1TermLess> col_of;
            for (std::size_t c = 0; c < terms.size(); ++c) {
                col_of.emplace(std::make_pair(terms[c].gen, terms[c].mon),
                               static_cast<int>(c));
            }
            std::vector<std::tuple<int, int, typename F::Elem>> entries;
            int rowcount = 0;
            auto push_products = [&](const std::vector<RelationElement<F>>& rels) {
                for (const auto& rel : rels) {
                    Multidegree nu = rel.multidegree(gens);
                    if (!nu.leq(mu)) continue;
                    for (const auto& m : monomials_of_multidegree(mu - nu)) {
                        for (const auto& [k, c] : rel.terms) {
                            entries.emplace_back(
                                rowcount, col_of.at({k.gen, k.mon * m}), c);
                        }
                        ++rowcount;
                    }
                }
            };
            push_products(cubic);
            push_products(quartic);
            long long span = 0;
            if (rowcount > 0) {
                SparseMatrix<F> spanm(rowcount, static_cast<int>(terms.size()));
                for (auto& [r, c, v] : entries) spanm.add(r, c, v);
                span = rank(field, spanm);
            }
            deg.relation_dim += count * kdim;
            deg.generated_dim += count * span;
            deg.classes.push_back({mu, count, kdim, span});
        }
        report.degrees.push_back(std::move(deg));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Pictorial rendering
// ---------------------------------------------------------------------------

// Each term is drawn on the minimal submatrix containing its variables:
// monomial multiplicities as digits ('.' for 1), generator corners as '#'
// (for the permanent's mixed generators the positive diagonal keeps '#' and
// the other two corners get 'o').
template <typename F>
std::string render_dots_and_boxes(const RelationElement<F>& rel, const GeneratorSet& gens) {
    if (rel.terms.empty()) return "0\n";
    struct Block {
        std::vector<std::string> lines;
        std::size_t width = 0;
    };
    std::vector<Block> blocks;
    std::vector<std::string> joiners;
    bool first = true;
    for (const auto& [k, c] : rel.terms) {
        const GeneratorInfo& g = gens.infos[k.gen];
        std::set<int> rows_used, cols_used;
        rows_used.insert(g.rows[0]);
        rows_used.insert(g.rows[1]);
        cols_used.insert(g.cols[0]);
        cols_used.insert(g.cols[1]);
        for (const auto& [cell, e] : k.mon.e) {
            rows_used.insert(cell / rel.n);
            cols_used.insert(cell % rel.n);
        }
        std::vector<int> rows(rows_used.begin(), rows_used.end());
        std::vector<int> cols(cols_used.begin(), cols_used.end());
        auto col_pos = [&](int j) {
            return static_cast<int>(std::lower_bound(cols.begin(), cols.end(), j) -
                                    cols.begin());
        };
        Block blk;
        {
            std::string header = "    ";
            for (int j : cols) header += " " + std::to_string(j + 1) + " ";
            blk.lines.push_back(header);
        }
        for (int i : rows) {
            std::string line = " " + std::to_string(i + 1) + " |";
            std::string cells(cols.size() * 3, ' ');
            auto put = [&](int j, int offset, char ch) {
                cells[static_cast<std::size_t>(col_pos(j)) * 3 + offset] = ch;
            };
            for (const auto& [cell, e] : k.mon.e) {
                if (cell / rel.n != i) continue;
                put(cell % rel.n, 0, e == 1 ? '.' : (e <= 9 ? static_cast<char>('0' + e) : '*'));
            }
            auto corner = [&](int gi, int gj, char ch) {
                if (gi == i) put(gj, 1, ch);
            };
            if (g.type == GenType::Mixed && rel.kind == PolyKind::Perm) {
                corner(g.rows[0], g.cols[0], '#');
                corner(g.rows[1], g.cols[1], '#');
                corner(g.rows[0], g.cols[1], 'o');
                corner(g.rows[1], g.cols[0], 'o');
            } else {
                corner(g.rows[0], g.cols[0], '#');
                corner(g.rows[1], g.cols[1], '#');
                corner(g.rows[0], g.cols[1], '#');
                corner(g.rows[1], g.cols[0], '#');
            }
            line += cells;
            blk.lines.push_back(line);
        }
        for (auto& l : blk.lines) blk.width = std::max(blk.width, l.size());
        for (auto& l : blk.lines) l.resize(blk.width, ' ');

        std::string cs = F::to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        std::string join;
        if (first) {
            join = neg ? "- " : "  ";
        } else {
            join = neg ? "  -  " : "  +  ";
        }
        if (mag != "1") join += mag + "*";
        first = false;
        joiners.push_back(join);
        blocks.push_back(std::move(blk));
    }
    std::size_t height = 0;
    for (const auto& b : blocks) height = std::max(height, b.lines.size());
    std::ostringstream os;
    for (std::size_t line = 0; line < height; ++line) {
        std::string out;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            out += (line == 1) ? joiners[b] : std::string(joiners[b].size(), ' ');
            out += (line < blocks[b].lines.size())
                       ? blocks[b].lines[line]
                       : std::string(blocks[b].width, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        os << out << "\n";
    }
    return os.str();
}

// Text parser for relation expressions in the to_string format, e.g.
//   "X[1,2]*sq(1,1) - X[1,1]*row(1;1,2)"
// with generator tokens sq(i,j), row(i;j,k), col(j;i,k), mix(i,k;j,l).
template <typename F>
RelationElement<F> parse_relation(const std::string& s, PolyKind kind, int n) {
    GeneratorSet gens(n);
    RelationElement<F> rel(n, kind);
    std::size_t p = 0;
    auto expect = [&](char ch) {
        detail::skip_ws(s, p);
        if (p >= s.size() || s[p] != ch) {
            throw UsageError(std::string("expected '") + ch + "' in relation text");
        }
        ++p;
    };
    bool first = true;
    while (true) {
        detail::skip_ws(s, p);
        if (p >= s.size()) break;
        int sign = 1;
        if (s[p] == '+') {
            ++p;
        } else if (s[p] == '-') {
            sign = -1;
            ++p;
        } else if (!first) {
            throw UsageError("expected + or - between relation terms");
        }
        first = false;
        detail::skip_ws(s, p);
        long long coeff = 1;
        if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            coeff = detail::parse_int(s, p);
            expect('*');
        }
        Monomial mon(n);
        detail::skip_ws(s, p);
        while (p < s.size() && s[p] == 'X') {
            ++p;
            expect('[');
            int i = static_cast<int>(detail::parse_int(s, p));
            expect(',');
            int j = static_cast<int>(detail::parse_int(s, p));
            expect(']');
            int e = 1;
            detail::skip_ws(s, p);
            if (p < s.size() && s[p] == '^') {
                ++p;
                e = static_cast<int>(detail::parse_int(s, p));
            }
            if (i < 1 || i > n || j < 1 || j > n || e < 1) {
                throw UsageError("bad variable in relation text");
            }
            mon = mon * Monomial::var(n, i - 1, j - 1, e);
            expect('*');
            detail::skip_ws(s, p);
        }
        detail::skip_ws(s, p);
        std::size_t word_end = p;
        while (word_end < s.size() && std::isalpha(static_cast<unsigned char>(s[word_end]))) {
            ++word_end;
        }
        std::string word = s.substr(p, word_end - p);
        p = word_end;
        auto read_pair = [&](int& a, int& b, char sep) {
            a = static_cast<int>(detail::parse_int(s, p));
            expect(sep);
            b = static_cast<int>(detail::parse_int(s, p));
        };
        int gidx = -1;
        if (word == "sq") {
            expect('(');
            int i, j;
            read_pair(i, j, ',');
            expect(')');
            gidx = gens.square(i - 1, j - 1);
        } else if (word == "row") {
            expect('(');
            int i = static_cast<int>(detail::parse_int(s, p));
            expect(';');
            int j, kk;
            read_pair(j, kk, ',');
            expect(')');
            gidx = gens.same_row(i - 1, j - 1, kk - 1);
        } else if (word == "col") {
            expect('(');
            int j = static_cast<int>(detail::parse_int(s, p));
            expect(';');
            int i, kk;
            read_pair(i, kk, ',');
            expect(')');
            gidx = gens.same_col(j - 1, i - 1, kk - 1);
        } else if (word == "mix") {
            expect('(');
            int i, kk;
            read_pair(i, kk, ',');
            expect(';');
            int j, l;
            read_pair(j, l, ',');
            expect(')');
            gidx = gens.mixed(i - 1, kk - 1, j - 1, l - 1);
        } else {
            throw UsageError("unknown generator token '" + word + "'");
        }
        rel.add_term(mon, gidx, F::from_int(sign * coeff));
    }
    return rel;
}

}  // namespace apolar
