// Exact linear algebra: rank, kernel bases, prime crosschecks, MatrixMarket
// dumps.  The oracle here is an independent dense Gaussian elimination
// (rationals and GF(p)) plus brute-force minor expansion for small ranks.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <vector>

#include "apolar/field.hpp"
#include "apolar/linalg.hpp"

using namespace apolar;

namespace {

using DenseQ = std::vector<std::vector<mpq_class>>;

// Dense row reduction over the rationals, no pivoting tricks: the oracle.
int dense_rank_q(DenseQ a) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && sgn(a[sel][c]) == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Dense row reduction mod p, the oracle for the GF(p) path.
int dense_rank_p(std::vector<std::vector<long long>> a, long long p) {
    if (a.empty()) return 0;
    auto inv = [&](long long x) {
        long long t = 0, nt = 1, r = p, nr = ((x % p) + p) % p;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return ((t % p) + p) % p;
    };
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && ((a[sel][c] % p) + p) % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        long long iv = inv(a[r][c]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            long long f = ((a[i][c] % p) + p) % p * iv % p;
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] = ((a[i][j] - f % p * (a[r][j] % p)) % p + p * p) % p;
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

mpq_class dense_det(const DenseQ& a) {
    std::size_t k = a.size();
    if (k == 1) return a[0][0];
    mpq_class d = 0;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
        DenseQ minor;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<mpq_class> row;
            for (std::size_t j = 0; j < k; ++j) {
                if (j != c) row.push_back(a[i][j]);
            }
            minor.push_back(std::move(row));
        }
        d += sign * a[0][c] * dense_det(minor);
        sign = -sign;
    }
    return d;
}

// Rank as the largest k with a nonvanishing k x k minor.
int minor_rank(const DenseQ& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int best = 0;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        bool found = false;
        for_each_subset(rows, k, [&](const std::vector<int>& rs) {
            if (found) return;
            for_each_subset(cols, k, [&](const std::vector<int>& cs) {
                if (found) return;
                DenseQ sub;
                for (int r : rs) {
                    std::vector<mpq_class> row;
                    for (int c : cs) row.push_back(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                    sub.push_back(std::move(row));
                }
                if (sgn(dense_det(sub)) != 0) found = true;
            });
        });
        if (found) best = k;
    }
    return best;
}

SparseMatrix<RationalField> to_sparse_q(const DenseQ& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SparseMatrix<RationalField> m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (sgn(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) != 0) {
                m.add(r, c, a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
            }
        }
    }
    return m;
}

DenseQ random_dense(std::mt19937& rng, int rows, int cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    DenseQ a(static_cast<std::size_t>(rows),
             std::vector<mpq_class>(static_cast<std::size_t>(cols)));
    for (auto& row : a) {
        for (auto& v : row) v = dist(rng);
    }
    return a;
}

}  // namespace

TEST_CASE("rank of the pinned 4x3 matrix matches minor expansion", "[exactalg]") {
    DenseQ a = {{1, 1, 0}, {0, 1, 1}, {1, 0, -1}, {2, 2, 0}};
    REQUIRE(minor_rank(a) == 2);

    RationalField qq;
    auto m = to_sparse_q(a);
    CHECK(rank(qq, m) == 2);

    PrimeField fp(32003);
    SparseMatrix<PrimeField> mp(m.rows, m.cols);
    for (const auto& [r, c, v] : m.entries) {
        mp.add(r, c, fp.from_int(v.get_num().get_si()));
    }
    CHECK(rank(fp, mp) == 2);
}

TEST_CASE("kernel of the pinned 4x3 matrix", "[exactalg]") {
    RationalField qq;
    auto m = to_sparse_q({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}, {2, 2, 0}});
    auto ker = kernel_basis(qq, m);
    REQUIRE(ker.size() == 1);
    // spans (1,-1,1); the +1 sits in whichever column was left free
    CHECK(ker[0][0] != 0);
    CHECK(ker[0][1] == -ker[0][0]);
    CHECK(ker[0][2] == ker[0][0]);
    CHECK((ker[0][0] == 1 || ker[0][1] == 1));
    auto img = apply(qq, m, ker[0]);
    for (const auto& v : img) CHECK(sgn(v) == 0);
}

TEST_CASE("trivial rank and kernel cases", "[exactalg]") {
    RationalField qq;
    SparseMatrix<RationalField> id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.add(i, i, 1);
    CHECK(rank(qq, id3) == 3);
    CHECK(kernel_basis(qq, id3).empty());

    SparseMatrix<RationalField> zero(5, 7);
    CHECK(rank(qq, zero) == 0);
    CHECK(kernel_basis(qq, zero).size() == 7);

    SparseMatrix<RationalField> row(1, 2);
    row.add(0, 0, 1);
    row.add(0, 1, -1);
    auto ker = kernel_basis(qq, row);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == 1);
    CHECK(ker[0][1] == 1);
}

TEST_CASE("seeded random matrices: rank oracle, nullity, kernel validity",
          "[exactalg]") {
    std::mt19937 rng(20240811);
    RationalField qq;
    PrimeField fp(32003);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 9);
        int cols = 2 + static_cast<int>(rng() % 8);
        DenseQ a = random_dense(rng, rows, cols, -4, 4);

        auto m = to_sparse_q(a);
        int rq = rank(qq, m);
        CHECK(rq == dense_rank_q(a));

        auto ker = kernel_basis(qq, m);
        CHECK(static_cast<int>(ker.size()) == cols - rq);
        for (const auto& v : ker) {
            for (const auto& entry : apply(qq, m, v)) CHECK(sgn(entry) == 0);
        }

        // reduced form: every vector owns a coordinate where it is 1 and all
        // other basis vectors vanish (the basis is an identity on the free
        // columns, whichever columns the elimination left free)
        for (std::size_t i = 0; i < ker.size(); ++i) {
            bool owns_one = false;
            for (int c = 0; c < cols && !owns_one; ++c) {
                if (ker[i][static_cast<std::size_t>(c)] != 1) continue;
                bool others_zero = true;
                for (std::size_t k = 0; k < ker.size(); ++k) {
                    if (k != i && sgn(ker[k][static_cast<std::size_t>(c)]) != 0) {
                        others_zero = false;
                        break;
                    }
                }
                owns_one = others_zero;
            }
            CHECK(owns_one);
        }

        // GF(p) path against the dense mod-p oracle
        SparseMatrix<PrimeField> mp(rows, cols);
        std::vector<std::vector<long long>> ap(static_cast<std::size_t>(rows),
                                               std::vector<long long>(static_cast<std::size_t>(cols)));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                long long v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get_num().get_si();
                ap[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
                if (v != 0) mp.add(r, c, fp.from_int(v));
            }
        }
        CHECK(rank(fp, mp) == dense_rank_p(ap, 32003));
    }
}

TEST_CASE("seeded low-rank products have the planted rank", "[exactalg]") {
    std::mt19937 rng(987123);
    RationalField qq;
    for (int trial = 0; trial < 10; ++trial) {
        int rows = 6 + static_cast<int>(rng() % 4);
        int cols = 5 + static_cast<int>(rng() % 4);
        int planted = 1 + static_cast<int>(rng() % 3);
        DenseQ left = random_dense(rng, rows, planted, -3, 3);
        DenseQ right = random_dense(rng, planted, cols, -3, 3);
        DenseQ prod(static_cast<std::size_t>(rows),
                    std::vector<mpq_class>(static_cast<std::size_t>(cols), 0));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                for (int k = 0; k < planted; ++k) {
                    prod[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
                        left[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *
                        right[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                }
            }
        }
        int rq = rank(qq, to_sparse_q(prod));
        CHECK(rq <= planted);
        CHECK(rq == dense_rank_q(prod));
    }
}

TEST_CASE("rank crosscheck across primes", "[exactalg]") {
    RationalField qq;

    SparseMatrix<RationalField> id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.add(i, i, 1);
    auto rep = rank_crosscheck(id3, {3, 32003});
    CHECK(rep.rank_q == 3);
    REQUIRE(rep.primes.size() == 2);
    for (const auto& r : rep.primes) {
        CHECK(r.rank_p == 3);
        CHECK_FALSE(r.flagged);
        CHECK_FALSE(r.rejected);
    }
    CHECK(rep.all_match());

    SparseMatrix<RationalField> two(1, 1);
    two.add(0, 0, 2);
    rep = rank_crosscheck(two, {2});
    CHECK(rep.rank_q == 1);
    REQUIRE(rep.primes.size() == 1);
    CHECK(rep.primes[0].rank_p == 0);
    CHECK(rep.primes[0].flagged);

    // determinant -2, so rank drops exactly at p = 2
    SparseMatrix<RationalField> m(2, 2);
    m.add(0, 0, 1);
    m.add(0, 1, 1);
    m.add(1, 0, 1);
    m.add(1, 1, -1);
    rep = rank_crosscheck(m, {2});
    CHECK(rep.rank_q == 2);
    CHECK(rep.primes[0].rank_p == 1);
    CHECK(rep.primes[0].flagged);
    CHECK_FALSE(rep.all_match());

    // a denominator divisible by p must be rejected, not reduced
    SparseMatrix<RationalField> frac(1, 1);
    frac.add(0, 0, mpq_class(1, 2));
    rep = rank_crosscheck(frac, {2, 3});
    CHECK(rep.primes[0].rejected);
    CHECK_FALSE(rep.primes[1].rejected);
    CHECK(rep.primes[1].rank_p == 1);
}

TEST_CASE("prime field arithmetic axioms, seeded", "[exactalg]") {
    PrimeField fp(32003);
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long long> dist(-100000, 100000);
    for (int t = 0; t < 200; ++t) {
        auto a = fp.from_int(dist(rng));
        auto b = fp.from_int(dist(rng));
        auto c = fp.from_int(dist(rng));
        CHECK(fp.add(a, b) == fp.add(b, a));
        CHECK(fp.mul(a, b) == fp.mul(b, a));
        CHECK(fp.add(fp.add(a, b), c) == fp.add(a, fp.add(b, c)));
        CHECK(fp.mul(fp.mul(a, b), c) == fp.mul(a, fp.mul(b, c)));
        CHECK(fp.mul(a, fp.add(b, c)) == fp.add(fp.mul(a, b), fp.mul(a, c)));
        CHECK(fp.sub(a, b) == fp.add(a, fp.neg(b)));
        if (a != 0) CHECK(fp.mul(a, fp.inv(a)) == 1);
    }
    CHECK(fp.from_int(-1) == 32002);
    CHECK_THROWS_AS(PrimeField(15), UsageError);

    PrimeField f2(2);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.from_int(-3) == 1);
}

TEST_CASE("matrix market dump is canonical", "[exactalg]") {
    PrimeField fp(32003);
    SparseMatrix<PrimeField> m(2, 3);
    m.row_labels = {"first", "second"};
    m.add(1, 2, fp.from_int(5));
    m.add(0, 0, fp.from_int(1));
    m.add(0, 0, fp.from_int(2));    // duplicates are summed
    m.add(1, 0, fp.from_int(7));
    m.add(1, 0, fp.from_int(-7));   // and zeros dropped
    std::ostringstream os;
    write_matrix_market(os, fp, m);
    CHECK(os.str() ==
          "%%MatrixMarket matrix coordinate integer general\n"
          "% entries are residues mod 32003\n"
          "% row 1 : first\n"
          "% row 2 : second\n"
          "2 3 2\n"
          "1 1 3\n"
          "2 3 5\n");

    RationalField qq;
    SparseMatrix<RationalField> mq(1, 2);
    mq.add(0, 0, mpq_class(1, 2));
    mq.add(0, 1, mpq_class(-3));
    std::ostringstream osq;
    write_matrix_market(osq, qq, mq);
    CHECK(osq.str() ==
          "%%MatrixMarket matrix coordinate rational general\n"
          "% entries are exact rationals num/den\n"
          "1 2 2\n"
          "1 1 1/2\n"
          "1 2 -3\n");
}

TEST_CASE("out-of-range entries are rejected", "[exactalg]") {
    SparseMatrix<RationalField> m(2, 2);
    CHECK_THROWS_AS(m.add(2, 0, mpq_class(1)), std::out_of_range);
    CHECK_THROWS_AS(m.add(0, -1, mpq_class(1)), std::out_of_range);
}
