#pragma once

// The Cayley graph of the symmetric group S_m with all transpositions as
// generators, zero-magic edge labelings (every vertex's incident labels sum
// to zero), spanning-tree cycle bases, the commutator reduction with
// verifiable certificates, and the dictionary between zero-magic labelings
// and relations in a singular multidegree.
//
// Walk convention: a step by the transposition t = (a b) swaps the VALUES
// a and b of the current permutation (left composition t o sigma).  Edges
// are unordered; the transposition is determined by its endpoints.

#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apolar/relation.hpp"
#include "apolar/util.hpp"

namespace apolar {

struct Transposition {
    int a = 0;  // 0-based letters, a < b
    int b = 1;

    Transposition() = default;
    Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}

    bool operator==(const Transposition& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Transposition& o) const { return !(*this == o); }
    bool operator<(const Transposition& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
    bool moves(int x) const { return a == x || b == x; }
    int other(int x) const { return a == x ? b : a; }
    bool disjoint_from(const Transposition& o) const {
        return !moves(o.a) && !moves(o.b);
    }
    std::string to_string() const {
        return "(" + std::to_string(a + 1) + " " + std::to_string(b + 1) + ")";
    }
};

// Letters of t relabeled through the transposition `by`.
inline Transposition conjugate(const Transposition& t, const Transposition& by) {
    auto map1 = [&](int x) { return x == by.a ? by.b : (x == by.b ? by.a : x); };
    return Transposition(map1(t.a), map1(t.b));
}

inline std::vector<int> apply_transposition(const std::vector<int>& img,
                                            const Transposition& t) {
    std::vector<int> out = img;
    for (auto& v : out) {
        if (v == t.a) {
            v = t.b;
        } else if (v == t.b) {
            v = t.a;
        }
    }
    return out;
}

inline int permutation_parity(const std::vector<int>& img) {
    int inv = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
        for (std::size_t j = i + 1; j < img.size(); ++j) {
            if (img[i] > img[j]) ++inv;
        }
    }
    return inv % 2;  // 0 even, 1 odd
}

inline long long perm_rank(const std::vector<int>& img) {
    int m = static_cast<int>(img.size());
    long long r = 0;
    for (int i = 0; i < m; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < m; ++j) {
            if (img[j] < img[i]) ++smaller;
        }
        r += smaller * factorial(m - 1 - i);
    }
    return r;
}

inline std::vector<int> perm_unrank(int m, long long r) {
    std::vector<int> avail(m);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> img;
    for (int i = m - 1; i >= 0; --i) {
        long long f = factorial(i);
        long long idx = r / f;
        r %= f;
        img.push_back(avail[static_cast<std::size_t>(idx)]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return img;
}

inline std::string permutation_to_string(const std::vector<int>& img) {
    std::string s;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(img[i] + 1);
    }
    return s;
}

// Parses "(1 2)(3 4)" (1-based letters, also accepts commas) into a word.
inline std::vector<Transposition> parse_word(const std::string& s, int m) {
    std::vector<Transposition> out;
    std::size_t p = 0;
    auto skip = [&]() {
        while (p < s.size() &&
               (s[p] == ' ' || s[p] == '\t' || s[p] == ',')) {
            ++p;
        }
    };
    auto number = [&]() {
        std::size_t q = p;
        long v = 0;
        while (p < s.size() && s[p] >= '0' && s[p] <= '9') {
            v = v * 10 + (s[p] - '0');
            ++p;
        }
        if (p == q) throw UsageError("expected a letter index in word text");
        return static_cast<int>(v);
    };
    skip();
    while (p < s.size()) {
        if (s[p] != '(') throw UsageError("expected '(' in word text");
        ++p;
        skip();
        int a = number();
        skip();
        int b = number();
        skip();
        if (p >= s.size() || s[p] != ')') throw UsageError("expected ')' in word text");
        ++p;
        if (a < 1 || b < 1 || a > m || b > m || a == b) {
            throw UsageError("transposition letters must be distinct and within 1.." +
                             std::to_string(m));
        }
        out.push_back(Transposition(a - 1, b - 1));
        skip();
    }
    return out;
}

// Parses a permutation given as space- or comma-separated 1-based images.
inline std::vector<int> parse_permutation(const std::string& s, int m) {
    std::vector<int> img;
    std::size_t p = 0;
    while (p < s.size()) {
        while (p < s.size() && (s[p] == ' ' || s[p] == ',')) ++p;
        if (p >= s.size()) break;
        int v = 0;
        std::size_t q = p;
        while (p < s.size() && s[p] >= '0' && s[p] <= '9') {
            v = v * 10 + (s[p] - '0');
            ++p;
        }
        if (p == q) throw UsageError("expected a number in permutation text");
        img.push_back(v - 1);
    }
    if (static_cast<int>(img.size()) != m) {
        throw UsageError("permutation must list " + std::to_string(m) + " images");
    }
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : img) {
        if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)]) {
            throw UsageError("not a permutation of 1.." + std::to_string(m));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return img;
}

struct ClosedWord {
    std::vector<int> start;  // permutation image, 0-based values
    std::vector<Transposition> word;

    std::string to_string() const {
        std::string s;
        for (const auto& t : word) s += t.to_string();
        return s;
    }
};

inline std::vector<std::vector<int>> walk_vertices(const ClosedWord& w) {
    std::vector<std::vector<int>> out;
    out.push_back(w.start);
    for (const auto& t : w.word) out.push_back(apply_transposition(out.back(), t));
    return out;
}

inline bool is_closed(const ClosedWord& w) {
    std::vector<int> cur = w.start;
    for (const auto& t : w.word) cur = apply_transposition(cur, t);
    return cur == w.start;
}

struct CayleyGraph {
    int m = 0;
    long long vertex_count = 0;
    std::vector<Transposition> transpositions;  // lex order
    struct Edge {
        long long u = 0;  // u < v, vertex ranks
        long long v = 0;
        Transposition t;
    };
    std::vector<Edge> edges;                          // sorted by (u, v)
    std::map<std::pair<long long, long long>, int> edge_index;
    // BFS spanning tree from the identity, neighbors in lex transposition order
    std::vector<long long> parent;      // -1 at the root
    std::vector<int> parent_move;       // index into transpositions
    std::vector<char> edge_in_tree;

    long long edge_count() const { return static_cast<long long>(edges.size()); }
    long long circuit_rank() const { return edge_count() - vertex_count + 1; }
};

inline CayleyGraph build_graph(int m, int cap = 7) {
    if (m < 2 || m > cap) {
        throw UsageError("build_graph needs 2 <= m <= " + std::to_string(cap));
    }
    CayleyGraph g;
    g.m = m;
    g.vertex_count = factorial(m);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) g.transpositions.emplace_back(a, b);
    }
    for (long long u = 0; u < g.vertex_count; ++u) {
        auto img = perm_unrank(m, u);
        for (const auto& t : g.transpositions) {
            long long v = perm_rank(apply_transposition(img, t));
            if (u < v) g.edges.push_back({u, v, t});
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) {
        return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        g.edge_index.emplace(std::make_pair(g.edges[i].u, g.edges[i].v),
                             static_cast<int>(i));
    }

    g.parent.assign(static_cast<std::size_t>(g.vertex_count), -1);
    g.parent_move.assign(static_cast<std::size_t>(g.vertex_count), -1);
    g.edge_in_tree.assign(g.edges.size(), 0);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count), 0);
    std::queue<long long> q;
    seen[0] = 1;
    q.push(0);
    while (!q.empty()) {
        long long u = q.front();
        q.pop();
        auto img = perm_unrank(m, u);
        for (std::size_t ti = 0; ti < g.transpositions.size(); ++ti) {
            long long v = perm_rank(apply_transposition(img, g.transpositions[ti]));
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                g.parent[static_cast<std::size_t>(v)] = u;
                g.parent_move[static_cast<std::size_t>(v)] = static_cast<int>(ti);
                g.edge_in_tree[static_cast<std::size_t>(
                    g.edge_index.at({std::min(u, v), std::max(u, v)}))] = 1;
                q.push(v);
            }
        }
    }
    return g;
}

struct EdgeLabeling {
    int m = 0;
    std::map<std::pair<long long, long long>, long long> values;  // (u<v) -> label

    void add(long long u, long long v, long long c) {
        if (u > v) std::swap(u, v);
        auto key = std::make_pair(u, v);
        auto it = values.find(key);
        if (it == values.end()) {
            if (c != 0) values.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) values.erase(it);
        }
    }
    bool is_zero() const { return values.empty(); }
    EdgeLabeling& operator+=(const EdgeLabeling& o) {
        for (const auto& [k, c] : o.values) add(k.first, k.second, c);
        return *this;
    }
    EdgeLabeling scaled(long long c) const {
        EdgeLabeling out;
        out.m = m;
        if (c == 0) return out;
        for (const auto& [k, v] : values) out.values.emplace(k, v * c);
        return out;
    }
};

// Alternating +1/-1 along the closed walk, repeated edges accumulated.
inline EdgeLabeling cycle_labeling(const ClosedWord& w) {
    if (!is_closed(w)) throw std::invalid_argument("cycle word must be closed");
    EdgeLabeling lab;
    lab.m = static_cast<int>(w.start.size());
    std::vector<int> cur = w.start;
    long long u = perm_rank(cur);
    int sign = 1;
    for (const auto& t : w.word) {
        cur = apply_transposition(cur, t);
        long long v = perm_rank(cur);
        lab.add(u, v, sign);
        sign = -sign;
        u = v;
    }
    return lab;
}

inline bool is_zero_magic(const EdgeLabeling& lab) {
    std::map<long long, long long> vertex_sum;
    for (const auto& [k, c] : lab.values) {
        vertex_sum[k.first] += c;
        vertex_sum[k.second] += c;
    }
    for (const auto& [v, s] : vertex_sum) {
        if (s != 0) return false;
    }
    return true;
}

struct FundamentalCycle {
    long long u = 0;  // the non-tree edge (u, v)
    long long v = 0;
    ClosedWord cycle;
    EdgeLabeling labeling;
};

// One fundamental cycle per non-tree edge: cross the edge, climb from the
// far end to the root, then descend back to the near end.  Tree edges on
// the shared tail are traversed once in each direction and their labels
// cancel, so the labeling is supported on the actual fundamental cycle with
// the non-tree edge labeled +1.
inline std::vector<FundamentalCycle> zero_magic_basis(const CayleyGraph& g) {
    auto path_to_root = [&g](long long x) {
        std::vector<Transposition> out;
        while (g.parent[static_cast<std::size_t>(x)] >= 0) {
            out.push_back(g.transpositions[static_cast<std::size_t>(
                g.parent_move[static_cast<std::size_t>(x)])]);
            x = g.parent[static_cast<std::size_t>(x)];
        }
        return out;
    };
    std::vector<FundamentalCycle> out;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        if (g.edge_in_tree[ei]) continue;
        const auto& e = g.edges[ei];
        FundamentalCycle fc;
        fc.u = e.u;
        fc.v = e.v;
        fc.cycle.start = perm_unrank(g.m, e.u);
        fc.cycle.word.push_back(e.t);
        for (const auto& t : path_to_root(e.v)) fc.cycle.word.push_back(t);
        auto up = path_to_root(e.u);
        for (auto it = up.rbegin(); it != up.rend(); ++it) fc.cycle.word.push_back(*it);
        fc.labeling = cycle_labeling(fc.cycle);
        out.push_back(std::move(fc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Commutator cycles and the reduction
// ---------------------------------------------------------------------------

// A commutator cycle is a closed 4-word  a b a [aba]  or  a b [bab] b  for
// distinct non-disjoint transpositions a, b ([x] denotes conjugation).
inline bool is_commutator_word(const std::vector<Transposition>& w) {
    if (w.size() != 4) return false;
    const auto& a = w[0];
    const auto& b = w[1];
    if (a == b || a.disjoint_from(b)) return false;
    if (w[2] == a && w[3] == conjugate(b, a)) return true;   // a b a [aba]
    if (w[3] == b && w[2] == conjugate(a, b)) return true;   // a b [bab] b
    return false;
}

struct ReduceCertificate {
    long long coeff = 0;
    ClosedWord cycle;

    std::string to_string() const {
        return std::to_string(coeff) + " ; " + permutation_to_string(cycle.start) +
               " ; " + cycle.to_string();
    }
};

struct ReduceResult {
    std::vector<ReduceCertificate> certificates;
    long long steps = 0;
};

// Rewrites the closed word down to nothing, emitting one commutator
// certificate per rewrite so that
//   cycle_labeling(w) = sum coeff * cycle_labeling(certificate).
// Strategy: repeatedly take the largest moved letter L and push its
// leftmost mover rightward.  With a = (i L) at 1-based position r and b its
// successor, the rewrite depends on b:
//   b = a                erase both, no certificate
//   b = (j L)            a b -> (i j)(i L); certificate  a b a (i j)
//   b = (i j), L fixed   a b -> (i j)(j L); certificate  a b (j L) (i j)
//   b disjoint           a b -> b a; the difference is the square a b a b,
//                        decomposed into five commutator cycles
// every certificate carries the sign (-1)^(r-1).
inline ReduceResult commutator_reduce(const ClosedWord& w, long long max_steps = 1000000) {
    if (!is_closed(w)) throw std::invalid_argument("cycle word must be closed");
    ReduceResult res;
    if (is_commutator_word(w.word)) {
        res.certificates.push_back({1, w});
        return res;
    }
    std::vector<Transposition> word = w.word;
    auto vertex_at = [&](std::size_t steps) {
        std::vector<int> cur = w.start;
        for (std::size_t k = 0; k < steps; ++k) cur = apply_transposition(cur, word[k]);
        return cur;
    };
    while (!word.empty()) {
        int big = 0;
        for (const auto& t : word) big = std::max(big, t.b);
        std::size_t r0 = 0;
        while (r0 < word.size() && !word[r0].moves(big)) ++r0;
        if (r0 + 1 >= word.size()) {
            throw std::runtime_error("closed word invariant violated in reduction");
        }
        if (++res.steps > max_steps) {
            throw CapError("commutator reduction exceeded the step budget");
        }
        long long sign = (r0 % 2 == 0) ? 1 : -1;
        Transposition a = word[r0];
        Transposition b = word[r0 + 1];
        if (b == a) {
            word.erase(word.begin() + static_cast<std::ptrdiff_t>(r0),
                       word.begin() + static_cast<std::ptrdiff_t>(r0) + 2);
            continue;
        }
        std::vector<int> base = vertex_at(r0);
        int i = a.other(big);
        if (b.moves(big)) {
            int j = b.other(big);
            res.certificates.push_back(
                {sign, {base, {a, b, a, Transposition(i, j)}}});
            word[r0] = Transposition(i, j);
            word[r0 + 1] = Transposition(i, big);
        } else if (b.moves(i)) {
            int j = b.other(i);
            res.certificates.push_back(
                {sign, {base, {a, b, Transposition(j, big), Transposition(i, j)}}});
            word[r0] = Transposition(i, j);
            word[r0 + 1] = Transposition(j, big);
        } else {
            // disjoint square a b a b decomposed into five commutator cycles
            int j = big, k = b.a, l = b.b;
            auto T = [](int x, int y) { return Transposition(x, y); };
            auto at = [&](const Transposition& t) { return apply_transposition(base, t); };
            res.certificates.push_back(
                {sign, {base, {T(i, j), T(i, k), T(i, j), T(j, k)}}});
            res.certificates.push_back(
                {sign, {base, {T(j, k), T(j, l), T(j, k), T(k, l)}}});
            res.certificates.push_back(
                {-sign, {at(T(j, k)), {T(i, j), T(i, l), T(i, j), T(j, l)}}});
            res.certificates.push_back(
                {-sign, {at(T(i, j)), {T(k, l), T(i, k), T(i, l), T(i, k)}}});
            res.certificates.push_back(
                {-sign, {at(T(k, l)), {T(j, k), T(i, j), T(i, k), T(i, j)}}});
            word[r0] = b;
            word[r0 + 1] = a;
        }
    }
    return res;
}

// All first-type commutator cycles a b a [aba] based at every vertex; their
// labelings span the zero-magic space.
inline std::vector<ClosedWord> commutator_cycles(const CayleyGraph& g) {
    std::vector<ClosedWord> out;
    for (long long u = 0; u < g.vertex_count; ++u) {
        auto img = perm_unrank(g.m, u);
        for (const auto& a : g.transpositions) {
            for (const auto& b : g.transpositions) {
                if (a == b || a.disjoint_from(b)) continue;
                out.push_back({img, {a, b, a, conjugate(b, a)}});
            }
        }
    }
    return out;
}

// Random closed word: a uniformly random prefix, closed up by sorting the
// product back to the identity one misplaced value at a time.
inline ClosedWord random_closed_word(int m, int prefix_len, std::mt19937& rng) {
    std::vector<Transposition> ts;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) ts.emplace_back(a, b);
    }
    ClosedWord w;
    w.start.resize(m);
    std::iota(w.start.begin(), w.start.end(), 0);
    std::shuffle(w.start.begin(), w.start.end(), rng);
    std::vector<int> cur = w.start;
    for (int k = 0; k < prefix_len; ++k) {
        const auto& t = ts[rng() % ts.size()];
        w.word.push_back(t);
        cur = apply_transposition(cur, t);
    }
    while (cur != w.start) {
        int p = 0;
        while (cur[p] == w.start[p]) ++p;
        Transposition t(cur[p], w.start[p]);
        w.word.push_back(t);
        cur = apply_transposition(cur, t);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Labelings <-> relations in a singular multidegree
// ---------------------------------------------------------------------------

// An edge joins permutations differing by one value swap; it contributes
// (common monomial) x (mixed generator on the swapped rows/columns).  For
// the determinant the edge label is the coefficient; for the permanent the
// label is further multiplied by the parity sign of whichever endpoint
// matches the generator's positive diagonal.
template <typename F>
RelationElement<F> labeling_to_relation(const F&, PolyKind kind, int n,
                                        const Multidegree& mu, const EdgeLabeling& lab) {
    if (!mu.is_singular()) throw std::invalid_argument("multidegree must be singular");
    if (!is_zero_magic(lab)) throw std::invalid_argument("labeling must be zero-magic");
    auto rows = mu.row_support();
    auto cols = mu.col_support();
    int m = static_cast<int>(rows.size());
    if (static_cast<int>(cols.size()) != m || mu.total() != m || lab.m != m) {
        throw std::invalid_argument("multidegree does not match the labeling's graph");
    }
    GeneratorSet gens(n);
    RelationElement<F> rel(n, kind);
    for (const auto& [key, c] : lab.values) {
        auto su = perm_unrank(m, key.first);
        auto sv = perm_unrank(m, key.second);
        int p1 = -1, p2 = -1;
        for (int p = 0; p < m; ++p) {
            if (su[p] == sv[p]) continue;
            if (p1 < 0) {
                p1 = p;
            } else if (p2 < 0) {
                p2 = p;
            } else {
                throw std::invalid_argument("labeling contains a non-edge");
            }
        }
        if (p2 < 0) throw std::invalid_argument("labeling contains a non-edge");
        Monomial common(n);
        for (int p = 0; p < m; ++p) {
            if (p == p1 || p == p2) continue;
            common = common * Monomial::var(n, rows[p], cols[su[p]]);
        }
        int gidx = gens.mixed(rows[p1], rows[p2], cols[su[p1]], cols[su[p2]]);
        long long coeff = c;
        if (kind == PolyKind::Perm) {
            // the canonical positive diagonal pairs min row with min col
            const auto& diag = (cols[su[p1]] < cols[su[p2]]) ? su : sv;
            coeff *= (permutation_parity(diag) == 0) ? 1 : -1;
        }
        rel.add_term(common, gidx, F::from_int(coeff));
    }
    return rel;
}

// DOT export of the graph, for small m.
inline std::string export_dot(const CayleyGraph& g) {
    if (g.m > 4) throw UsageError("DOT export supports m <= 4");
    std::ostringstream os;
    os << "graph cayley_s" << g.m << " {\n";
    os << "  node [shape=circle];\n";
    for (long long u = 0; u < g.vertex_count; ++u) {
        os << "  \"" << permutation_to_string(perm_unrank(g.m, u)) << "\";\n";
    }
    for (const auto& e : g.edges) {
        os << "  \"" << permutation_to_string(perm_unrank(g.m, e.u)) << "\" -- \""
           << permutation_to_string(perm_unrank(g.m, e.v)) << "\" [label=\""
           << e.t.to_string() << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace apolar
