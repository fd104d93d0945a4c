// Cayley graphs of symmetric groups with transposition generators, zero-magic
// edge labelings, fundamental-cycle bases, the certified commutator reduction,
// and the dictionary between labelings and singular-multidegree relations.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "apolar/cayley.hpp"
#include "apolar/field.hpp"
#include "apolar/linalg.hpp"

using namespace apolar;

namespace {

// Vertex sums computed directly from the label map (independent of
// is_zero_magic).
std::map<long long, long long> vertex_sums(const EdgeLabeling& lab) {
    std::map<long long, long long> sums;
    for (const auto& [k, c] : lab.values) {
        sums[k.first] += c;
        sums[k.second] += c;
    }
    return sums;
}

// Rank over the rationals of a family of labelings, one matrix row per
// labeling and one column per graph edge.
long long labeling_rank(const CayleyGraph& g, const std::vector<EdgeLabeling>& labs) {
    SparseMatrix<RationalField> m(static_cast<int>(labs.size()),
                                  static_cast<int>(g.edges.size()));
    for (std::size_t r = 0; r < labs.size(); ++r) {
        for (const auto& [k, c] : labs[r].values) {
            m.add(static_cast<int>(r), g.edge_index.at(k),
                  mpq_class(static_cast<long>(c)));
        }
    }
    RationalField qq;
    return rank(qq, m);
}

// cycle_labeling(w) minus the certified combination; empty iff they agree.
EdgeLabeling certificate_residual(const ClosedWord& w, const ReduceResult& red) {
    EdgeLabeling total;
    total.m = static_cast<int>(w.start.size());
    for (const auto& cert : red.certificates) {
        total += cycle_labeling(cert.cycle).scaled(cert.coeff);
    }
    total += cycle_labeling(w).scaled(-1);
    return total;
}

int brute_inversions(const std::vector<int>& img) {
    int inv = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
        for (std::size_t j = i + 1; j < img.size(); ++j) {
            if (img[i] > img[j]) ++inv;
        }
    }
    return inv;
}

}  // namespace

TEST_CASE("permutation ranking is the lexicographic order", "[cayley]") {
    for (int m = 1; m <= 4; ++m) {
        std::vector<int> img(static_cast<std::size_t>(m));
        std::iota(img.begin(), img.end(), 0);
        long long expect = 0;
        do {
            CHECK(perm_rank(img) == expect);
            CHECK(perm_unrank(m, expect) == img);
            CHECK(permutation_parity(img) == brute_inversions(img) % 2);
            ++expect;
        } while (std::next_permutation(img.begin(), img.end()));
        CHECK(expect == factorial(m));
    }
    CHECK(perm_rank({0, 1, 2, 3, 4}) == 0);
    CHECK(permutation_to_string({1, 0, 2}) == "2 1 3");
}

TEST_CASE("transpositions and conjugation", "[cayley]") {
    Transposition t(2, 0);
    CHECK(t.a == 0);
    CHECK(t.b == 2);
    CHECK(t.to_string() == "(1 3)");
    CHECK(t.moves(0));
    CHECK(!t.moves(1));
    CHECK(t.other(0) == 2);
    CHECK(Transposition(0, 1).disjoint_from(Transposition(2, 3)));
    CHECK(!Transposition(0, 1).disjoint_from(Transposition(1, 2)));
    CHECK(conjugate(Transposition(0, 1), Transposition(1, 2)) == Transposition(0, 2));
    CHECK(conjugate(Transposition(0, 1), Transposition(2, 3)) == Transposition(0, 1));
    CHECK(apply_transposition({0, 1, 2}, Transposition(0, 1)) ==
          std::vector<int>{1, 0, 2});
}

TEST_CASE("word and permutation parsing", "[cayley]") {
    auto w = parse_word("(1 2)(3 4)", 4);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Transposition(0, 1));
    CHECK(w[1] == Transposition(2, 3));
    CHECK(parse_word(" ( 1 , 2 ) ", 3).size() == 1);
    CHECK(parse_word("", 3).empty());
    CHECK_THROWS_AS(parse_word("(1 2", 3), UsageError);
    CHECK_THROWS_AS(parse_word("(1 1)", 3), UsageError);
    CHECK_THROWS_AS(parse_word("(1 9)", 4), UsageError);
    CHECK_THROWS_AS(parse_word("1 2", 3), UsageError);

    CHECK(parse_permutation("2 1 3", 3) == std::vector<int>{1, 0, 2});
    CHECK(parse_permutation("2,1,3", 3) == std::vector<int>{1, 0, 2});
    CHECK_THROWS_AS(parse_permutation("2 2 3", 3), UsageError);
    CHECK_THROWS_AS(parse_permutation("4 1 2", 3), UsageError);
    CHECK_THROWS_AS(parse_permutation("1 2", 3), UsageError);
}

TEST_CASE("graph shape: counts, degrees, parity bipartition", "[cayley]") {
    for (int m = 2; m <= 4; ++m) {
        auto g = build_graph(m);
        CHECK(g.vertex_count == factorial(m));
        CHECK(g.edge_count() == factorial(m) * binom(m, 2) / 2);
        std::vector<long long> degree(static_cast<std::size_t>(g.vertex_count), 0);
        for (const auto& e : g.edges) {
            ++degree[static_cast<std::size_t>(e.u)];
            ++degree[static_cast<std::size_t>(e.v)];
            // endpoints differ exactly by swapping the values of e.t
            CHECK(perm_rank(apply_transposition(perm_unrank(m, e.u), e.t)) == e.v);
            // parity bipartition
            CHECK(permutation_parity(perm_unrank(m, e.u)) !=
                  permutation_parity(perm_unrank(m, e.v)));
        }
        for (long long d : degree) CHECK(d == binom(m, 2));
        // connected: the BFS tree reaches every non-root vertex
        for (long long v = 1; v < g.vertex_count; ++v) {
            CHECK(g.parent[static_cast<std::size_t>(v)] >= 0);
        }
        CHECK(g.circuit_rank() == g.edge_count() - g.vertex_count + 1);
    }

    auto g2 = build_graph(2);
    CHECK(g2.vertex_count == 2);
    CHECK(g2.edge_count() == 1);

    // m = 3 is the complete bipartite graph on the parity classes.
    auto g3 = build_graph(3);
    CHECK(g3.vertex_count == 6);
    CHECK(g3.edge_count() == 9);
    std::vector<long long> evens, odds;
    for (long long v = 0; v < 6; ++v) {
        (permutation_parity(perm_unrank(3, v)) == 0 ? evens : odds).push_back(v);
    }
    REQUIRE(evens.size() == 3);
    REQUIRE(odds.size() == 3);
    for (long long u : evens) {
        for (long long v : odds) {
            CHECK(g3.edge_index.count({std::min(u, v), std::max(u, v)}) == 1);
        }
    }

    auto g4 = build_graph(4);
    CHECK(g4.vertex_count == 24);
    CHECK(g4.edge_count() == 24 * binom(4, 2) / 2);  // 72
    CHECK(g4.edge_count() == 72);

    CHECK_THROWS_AS(build_graph(1), UsageError);
    CHECK_THROWS_AS(build_graph(8), UsageError);
    CHECK_THROWS_AS(build_graph(5, 4), UsageError);
}

TEST_CASE("cycle labelings alternate and are zero-magic", "[cayley]") {
    // Back-and-forth on one edge: the +1 and -1 cancel.
    ClosedWord back{{0, 1}, {Transposition(0, 1), Transposition(0, 1)}};
    REQUIRE(is_closed(back));
    CHECK(cycle_labeling(back).is_zero());

    // The prototype commutator cycle: four distinct edges, walk labels
    // +1, -1, +1, -1.
    ClosedWord proto{{0, 1, 2},
                     {Transposition(0, 1), Transposition(0, 2), Transposition(0, 1),
                      Transposition(1, 2)}};
    REQUIRE(is_closed(proto));
    auto lab = cycle_labeling(proto);
    REQUIRE(lab.values.size() == 4);
    auto verts = walk_vertices(proto);
    REQUIRE(verts.size() == 5);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
        long long u = perm_rank(verts[k]);
        long long v = perm_rank(verts[k + 1]);
        if (u > v) std::swap(u, v);
        CHECK(lab.values.at({u, v}) == sign);
        sign = -sign;
    }
    for (const auto& [v, s] : vertex_sums(lab)) CHECK(s == 0);
    CHECK(is_zero_magic(lab));

    // A six-cycle through all of S_3: alternating labels on six edges,
    // vertex sums all zero.
    ClosedWord six{{0, 1, 2}, {}};
    for (int k = 0; k < 3; ++k) {
        six.word.push_back(Transposition(0, 1));
        six.word.push_back(Transposition(0, 2));
    }
    REQUIRE(is_closed(six));
    auto six_verts = walk_vertices(six);
    std::set<std::vector<int>> distinct(six_verts.begin(), six_verts.end());
    CHECK(distinct.size() == 6);
    auto lab6 = cycle_labeling(six);
    REQUIRE(lab6.values.size() == 6);
    for (const auto& [k, c] : lab6.values) CHECK((c == 1 || c == -1));
    for (const auto& [v, s] : vertex_sums(lab6)) CHECK(s == 0);
    CHECK(is_zero_magic(lab6));

    ClosedWord open{{0, 1, 2}, {Transposition(0, 1)}};
    CHECK(!is_closed(open));
    CHECK_THROWS_AS(cycle_labeling(open), std::invalid_argument);

    EdgeLabeling zero;
    CHECK(is_zero_magic(zero));
    EdgeLabeling single;
    single.add(0, 1, 1);
    CHECK(!is_zero_magic(single));
}

TEST_CASE("fundamental-cycle bases have circuit-rank size and full rank",
          "[cayley]") {
    const long long expected_sizes[] = {0, 0, 0, 4, 49};
    for (int m = 2; m <= 4; ++m) {
        auto g = build_graph(m);
        auto basis = zero_magic_basis(g);
        long long circuit = g.edge_count() - g.vertex_count + 1;
        CHECK(static_cast<long long>(basis.size()) == circuit);
        CHECK(static_cast<long long>(basis.size()) == expected_sizes[m]);
        std::vector<EdgeLabeling> labs;
        for (const auto& fc : basis) {
            CHECK(is_closed(fc.cycle));
            CHECK(is_zero_magic(fc.labeling));
            // the defining non-tree edge carries label +1
            CHECK(fc.labeling.values.at({fc.u, fc.v}) == 1);
            labs.push_back(fc.labeling);
        }
        CHECK(labeling_rank(g, labs) == circuit);
    }
}

TEST_CASE("commutator words are recognized syntactically", "[cayley]") {
    auto T = [](int x, int y) { return Transposition(x, y); };
    CHECK(is_commutator_word({T(0, 1), T(0, 2), T(0, 1), T(1, 2)}));  // a b a [aba]
    CHECK(is_commutator_word({T(0, 1), T(0, 2), T(1, 2), T(0, 2)}));  // a b [bab] b
    CHECK(!is_commutator_word({T(0, 1), T(0, 1), T(0, 1), T(0, 1)}));
    CHECK(!is_commutator_word({T(0, 1), T(2, 3), T(0, 1), T(2, 3)}));
    CHECK(!is_commutator_word({T(0, 1), T(0, 2), T(0, 1)}));
    CHECK(!is_commutator_word({T(0, 1), T(0, 2), T(0, 2), T(0, 1)}));
}

TEST_CASE("commutator reduction: pinned words", "[cayley]") {
    // Back-and-forth word reduces to nothing.
    ClosedWord back{{0, 1}, {Transposition(0, 1), Transposition(0, 1)}};
    auto red = commutator_reduce(back);
    CHECK(red.certificates.empty());
    CHECK(certificate_residual(back, red).is_zero());

    // A commutator cycle is its own certificate with coefficient 1.
    ClosedWord proto{{0, 1, 2},
                     {Transposition(0, 1), Transposition(0, 2), Transposition(0, 1),
                      Transposition(1, 2)}};
    auto redp = commutator_reduce(proto);
    REQUIRE(redp.certificates.size() == 1);
    CHECK(redp.certificates[0].coeff == 1);
    CHECK(redp.certificates[0].cycle.start == proto.start);
    CHECK(redp.certificates[0].cycle.word == proto.word);
    CHECK(redp.certificates[0].to_string() == "1 ; 1 2 3 ; (1 2)(1 3)(1 2)(2 3)");

    // The disjoint square decomposes into exactly five commutator cycles.
    ClosedWord square{{0, 1, 2, 3},
                      {Transposition(0, 1), Transposition(2, 3), Transposition(0, 1),
                       Transposition(2, 3)}};
    REQUIRE(is_closed(square));
    auto reds = commutator_reduce(square);
    CHECK(reds.certificates.size() == 5);
    for (const auto& cert : reds.certificates) {
        CHECK((cert.coeff == 1 || cert.coeff == -1));
        CHECK(is_closed(cert.cycle));
        CHECK(is_commutator_word(cert.cycle.word));
    }
    CHECK(certificate_residual(square, reds).is_zero());

    ClosedWord open{{0, 1, 2}, {Transposition(0, 1)}};
    CHECK_THROWS_AS(commutator_reduce(open), std::invalid_argument);

    // A word long enough to need several rewrites trips a tiny step budget.
    ClosedWord six{{0, 1, 2}, {}};
    for (int k = 0; k < 3; ++k) {
        six.word.push_back(Transposition(0, 1));
        six.word.push_back(Transposition(0, 2));
    }
    CHECK_THROWS_AS(commutator_reduce(six, 1), CapError);
}

TEST_CASE("commutator reduction certifies random closed words, seeded",
          "[cayley]") {
    std::mt19937 rng(46301);
    for (int m : {3, 4, 5}) {
        for (int trial = 0; trial < 60; ++trial) {
            int prefix = 1 + static_cast<int>(rng() % 12);
            auto w = random_closed_word(m, prefix, rng);
            REQUIRE(is_closed(w));
            CHECK(is_zero_magic(cycle_labeling(w)));
            auto red = commutator_reduce(w);
            for (const auto& cert : red.certificates) {
                CHECK(is_closed(cert.cycle));
                CHECK(is_commutator_word(cert.cycle.word));
                CHECK(is_zero_magic(cycle_labeling(cert.cycle)));
            }
            CHECK(certificate_residual(w, red).is_zero());
        }
    }
}

TEST_CASE("commutator labelings span the whole zero-magic space", "[cayley]") {
    for (int m : {3, 4}) {
        auto g = build_graph(m);
        std::vector<EdgeLabeling> labs;
        for (const auto& w : commutator_cycles(g)) {
            labs.push_back(cycle_labeling(w));
            CHECK(is_zero_magic(labs.back()));
        }
        CHECK(labeling_rank(g, labs) == g.circuit_rank());
    }
}

TEST_CASE("labelings translate to relations killed by the differential",
          "[cayley]") {
    RationalField qq;
    ClosedWord proto{{0, 1, 2},
                     {Transposition(0, 1), Transposition(0, 2), Transposition(0, 1),
                      Transposition(1, 2)}};
    auto lab = cycle_labeling(proto);
    Multidegree mu(std::vector<int>{1, 1, 1}, std::vector<int>{1, 1, 1});
    GeneratorSet gens(3);

    auto rel_det = labeling_to_relation(qq, PolyKind::Det, 3, mu, lab);
    CHECK(rel_det.to_string(gens) ==
          "X[3,3]*mix(1,2;1,2) + X[2,3]*mix(1,3;1,2) - X[1,2]*mix(2,3;1,3) - "
          "X[1,1]*mix(2,3;2,3)");
    CHECK(rel_det.d1(gens).is_zero());

    auto rel_perm = labeling_to_relation(qq, PolyKind::Perm, 3, mu, lab);
    CHECK(rel_perm.to_string(gens) ==
          "X[3,3]*mix(1,2;1,2) - X[2,3]*mix(1,3;1,2) + X[1,2]*mix(2,3;1,3) - "
          "X[1,1]*mix(2,3;2,3)");
    CHECK(rel_perm.d1(gens).is_zero());

    EdgeLabeling zero;
    zero.m = 3;
    CHECK(labeling_to_relation(qq, PolyKind::Det, 3, mu, zero).terms.empty());

    // Random zero-magic labelings at sparse supports stay inside ker d1.
    std::mt19937 rng(52361);
    Multidegree mu4(std::vector<int>{1, 0, 1, 1}, std::vector<int>{0, 1, 1, 1});
    GeneratorSet gens4(4);
    for (int trial = 0; trial < 25; ++trial) {
        auto w = random_closed_word(3, 1 + static_cast<int>(rng() % 8), rng);
        auto wl = cycle_labeling(w);
        for (PolyKind kind : {PolyKind::Det, PolyKind::Perm}) {
            auto r3 = labeling_to_relation(qq, kind, 3, mu, wl);
            CHECK(r3.d1(gens).is_zero());
            auto r4 = labeling_to_relation(qq, kind, 4, mu4, wl);
            CHECK(r4.d1(gens4).is_zero());
        }
    }

    // Error paths: non-zero-magic, non-singular multidegree, wrong walk size,
    // zero-magic support containing a non-edge.
    EdgeLabeling bad;
    bad.m = 3;
    bad.add(0, 1, 1);
    CHECK_THROWS_AS(labeling_to_relation(qq, PolyKind::Det, 3, mu, bad),
                    std::invalid_argument);
    Multidegree mu_bad(std::vector<int>{2, 1, 0}, std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(labeling_to_relation(qq, PolyKind::Det, 3, mu_bad, lab),
                    std::invalid_argument);
    Multidegree mu2(std::vector<int>{1, 1, 0}, std::vector<int>{1, 1, 0});
    CHECK_THROWS_AS(labeling_to_relation(qq, PolyKind::Det, 3, mu2, lab),
                    std::invalid_argument);
    EdgeLabeling nonedge;
    nonedge.m = 3;
    nonedge.add(0, 3, 1);  // ranks 0 and 3 differ in three positions
    nonedge.add(3, 4, -1);
    nonedge.add(4, 5, 1);
    nonedge.add(5, 0, -1);
    REQUIRE(is_zero_magic(nonedge));
    CHECK_THROWS_AS(labeling_to_relation(qq, PolyKind::Det, 3, mu, nonedge),
                    std::invalid_argument);
}

TEST_CASE("DOT export", "[cayley]") {
    auto g2 = build_graph(2);
    CHECK(export_dot(g2) ==
          "graph cayley_s2 {\n"
          "  node [shape=circle];\n"
          "  \"1 2\";\n"
          "  \"2 1\";\n"
          "  \"1 2\" -- \"2 1\" [label=\"(1 2)\"];\n"
          "}\n");
    auto g5 = build_graph(5);
    CHECK_THROWS_AS(export_dot(g5), UsageError);
}
