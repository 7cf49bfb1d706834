#include <doctest.h>

#include <random>

#include "linemat/matrix.hpp"
#include "linemat/rng.hpp"
#include "linemat/subspace.hpp"

using namespace linemat;
using linalg::Mat;
using linalg::Rational;
using linalg::Subspace;

namespace {

// Independent oracles: cofactor determinant and plain rational Gauss rank.
// They share no code with the Bareiss path they check.
Rational naive_det(const Mat& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rational acc = 0;
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c) == 0) continue;
        Mat minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c2 = 0; c2 < n; ++c2)
                if (c2 != c) minor.at(r - 1, cc++) = m.at(r, c2);
        }
        Rational term = m.at(0, c) * naive_det(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

int naive_rank(Mat a) {
    int rank = 0;
    for (int c = 0; c < a.cols() && rank < a.rows(); ++c) {
        int piv = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (a.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        for (int cc = 0; cc < a.cols(); ++cc) std::swap(a.at(piv, cc), a.at(rank, cc));
        for (int r = rank + 1; r < a.rows(); ++r) {
            if (a.at(r, c) == 0) continue;
            Rational f = a.at(r, c) / a.at(rank, c);
            for (int cc = 0; cc < a.cols(); ++cc) a.at(r, cc) -= f * a.at(rank, cc);
        }
        ++rank;
    }
    return rank;
}

Mat random_rational_matrix(std::mt19937_64& rng, int rows, int cols) {
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            long num = static_cast<long>(uniform_int(rng, -9, 9));
            long den = static_cast<long>(uniform_int(rng, 1, 7));
            Rational q(num, den);
            q.canonicalize();
            m.at(r, c) = q;
        }
    return m;
}

} // namespace

TEST_CASE("rank of identity and zero matrices") {
    CHECK(linalg::rank_of(Mat::identity(3)) == 3);
    CHECK(linalg::rank_of(Mat(4, 5)) == 0);
}

TEST_CASE("determinant basics") {
    CHECK(linalg::det(Mat::identity(5)) == Rational(1));
    Mat repeated{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
    CHECK(linalg::det(repeated) == Rational(0));
    CHECK_THROWS_AS(linalg::det(Mat(2, 3)), UsageError);
}

TEST_CASE("path-vector style matrix at unit weights has rank 3 and unit determinant") {
    // Columns (1,0,0), (c,d,0), (ac,ad+be,bf) at a=...=f=1.
    Mat m{{Rational(1), Rational(1), Rational(1)},
          {Rational(0), Rational(1), Rational(2)},
          {Rational(0), Rational(0), Rational(1)}};
    CHECK(linalg::rank_of(m) == 3);
    CHECK(linalg::det(m) == Rational(1));
}

TEST_CASE("bareiss agrees with naive oracles on random 5x5 rational matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        Mat m = random_rational_matrix(rng, 5, 5);
        CHECK(linalg::det(m) == naive_det(m));
        CHECK(linalg::rank_of(m) == naive_rank(m));
    }
    // Rectangular ranks too.
    for (int trial = 0; trial < 20; ++trial) {
        Mat m = random_rational_matrix(rng, 3, 6);
        CHECK(linalg::rank_of(m) == naive_rank(m));
    }
}

TEST_CASE("nullspace vectors satisfy the system") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Mat m = random_rational_matrix(rng, 3, 5);
        Mat ker = linalg::nullspace(m);
        CHECK(linalg::rank_of(m) + ker.cols() == 5);
        for (int k = 0; k < ker.cols(); ++k)
            for (int r = 0; r < m.rows(); ++r) {
                Rational acc = 0;
                for (int c = 0; c < m.cols(); ++c) acc += m.at(r, c) * ker.at(c, k);
                CHECK(acc == Rational(0));
            }
    }
}

TEST_CASE("subspace intersection dimensions") {
    // U = V -> U.
    Subspace u = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)}});
    CHECK(intersect(u, u) == u);

    // Two coordinate planes meet in the shared axis.
    Subspace xz = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(0), Rational(1)}});
    Subspace axis = intersect(u, xz);
    CHECK(axis.dim() == 1);
    CHECK(axis.contains({Rational(1), Rational(0), Rational(0)}));

    // Random 3-dim subspaces of Q^4 generically meet in dimension 2.
    std::mt19937_64 rng(7);
    Mat a = random_rational_matrix(rng, 3, 4);
    Mat b = random_rational_matrix(rng, 3, 4);
    REQUIRE(linalg::rank_of(a) == 3);
    REQUIRE(linalg::rank_of(b) == 3);
    Subspace sa = Subspace::span(4, {a.row(0), a.row(1), a.row(2)});
    Subspace sb = Subspace::span(4, {b.row(0), b.row(1), b.row(2)});
    CHECK(intersect(sa, sb).dim() == 2);
}

TEST_CASE("dimension formula dim(U cap V) + dim(U + V) = dim U + dim V") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 5;
        Mat a = random_rational_matrix(rng, static_cast<int>(uniform_int(rng, 1, 4)), n);
        Mat b = random_rational_matrix(rng, static_cast<int>(uniform_int(rng, 1, 4)), n);
        std::vector<std::vector<Rational>> ra, rb;
        for (int r = 0; r < a.rows(); ++r) ra.push_back(a.row(r));
        for (int r = 0; r < b.rows(); ++r) rb.push_back(b.row(r));
        Subspace u = Subspace::span(n, ra), v = Subspace::span(n, rb);
        CHECK(intersect(u, v).dim() + sum(u, v).dim() == u.dim() + v.dim());
    }
}

TEST_CASE("rational parsing round-trip") {
    CHECK(linalg::to_string(linalg::parse_rational("3/2")) == "3/2");
    CHECK(linalg::to_string(linalg::parse_rational("-4/2")) == "-2");
    CHECK(linalg::to_string(linalg::parse_rational("0")) == "0");
    CHECK_THROWS_AS(linalg::parse_rational("x"), UsageError);
}
