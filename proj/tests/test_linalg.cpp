#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "widomkit/linalg.hpp"
#include "widomkit/rng.hpp"

using widomkit::MatrixD;
using widomkit::det_dense;
using widomkit::log_det_dense;
using widomkit::solve_dense;

namespace {

// brute-force cofactor expansion, the independent determinant oracle
double det_cofactor(const MatrixD& a) {
    const int n = a.n;
    if (n == 1) return a(0, 0);
    double d = 0.0;
    for (int j = 0; j < n; ++j) {
        MatrixD minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = a(r, c);
            }
        }
        d += ((j % 2 == 0) ? 1.0 : -1.0) * a(0, j) * det_cofactor(minor);
    }
    return d;
}

MatrixD random_matrix(int n, widomkit::RngStream& rng) {
    MatrixD a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 2.0 * rng.uniform() - 1.0;
    return a;
}

}  // namespace

TEST_CASE("determinant of identity and diagonal matrices", "[linalg]") {
    CHECK(det_dense(MatrixD::identity(4)) == Catch::Approx(1.0));
    MatrixD d(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = 3.0;
    d(2, 2) = 5.0;
    CHECK(det_dense(d) == Catch::Approx(30.0));
}

TEST_CASE("determinant matches the cofactor oracle", "[linalg]") {
    widomkit::RngStream rng(42, 0);
    for (int rep = 0; rep < 20; ++rep) {
        MatrixD a = random_matrix(3, rng);
        double expected = det_cofactor(a);
        CHECK(det_dense(a) == Catch::Approx(expected).epsilon(1e-12).margin(1e-14));
    }
}

TEST_CASE("multiplicativity det(AB) = det(A)det(B) on random 6x6", "[linalg]") {
    widomkit::RngStream rng(7, 3);
    for (int rep = 0; rep < 10; ++rep) {
        MatrixD a = random_matrix(6, rng);
        MatrixD b = random_matrix(6, rng);
        MatrixD ab(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                double s = 0.0;
                for (int k = 0; k < 6; ++k) s += a(i, k) * b(k, j);
                ab(i, j) = s;
            }
        double lhs = det_dense(ab);
        double rhs = det_dense(a) * det_dense(b);
        CHECK(lhs == Catch::Approx(rhs).epsilon(1e-10).margin(1e-13));
    }
}

TEST_CASE("log determinant agrees with the plain determinant", "[linalg]") {
    widomkit::RngStream rng(11, 1);
    MatrixD a = random_matrix(5, rng);
    double d = det_dense(a);
    auto s = log_det_dense(a);
    CHECK(s.sign == (d > 0 ? 1 : -1));
    CHECK(s.log_abs == Catch::Approx(std::log(std::abs(d))).epsilon(1e-12));
}

TEST_CASE("solve on trivial systems", "[linalg]") {
    std::vector<double> b{4.0};
    MatrixD two(1, 1);
    two(0, 0) = 2.0;
    CHECK(solve_dense(two, b)[0] == Catch::Approx(2.0));

    MatrixD id = MatrixD::identity(3);
    std::vector<double> rhs{1.0, -2.0, 0.5};
    auto x = solve_dense(id, rhs);
    for (int i = 0; i < 3; ++i) CHECK(x[i] == Catch::Approx(rhs[i]));
}

TEST_CASE("solve residual on random 5x5", "[linalg]") {
    widomkit::RngStream rng(123, 9);
    for (int rep = 0; rep < 10; ++rep) {
        MatrixD a = random_matrix(5, rng);
        std::vector<double> b(5);
        for (auto& v : b) v = 2.0 * rng.uniform() - 1.0;
        auto x = solve_dense(a, b);
        double bnorm = 0.0, rnorm = 0.0;
        for (int i = 0; i < 5; ++i) {
            double ax = 0.0;
            for (int j = 0; j < 5; ++j) ax += a(i, j) * x[j];
            rnorm = std::max(rnorm, std::abs(ax - b[i]));
            bnorm = std::max(bnorm, std::abs(b[i]));
        }
        CHECK(rnorm <= 1e-10 * bnorm);
    }
}

TEST_CASE("non-square and mismatched inputs are rejected", "[linalg]") {
    MatrixD bad(2, 3);
    CHECK_THROWS_AS(det_dense(bad), std::invalid_argument);
    CHECK_THROWS_AS(solve_dense(MatrixD::identity(3), std::vector<double>{1.0}),
                    std::invalid_argument);
}

TEST_CASE("complex determinant via the same factorization", "[linalg]") {
    using C = std::complex<double>;
    widomkit::Matrix<C> a(2, 2);
    a(0, 0) = C(1, 1);
    a(0, 1) = C(0, 2);
    a(1, 0) = C(3, 0);
    a(1, 1) = C(1, -1);
    // (1+i)(1-i) - (2i)(3) = 2 - 6i
    C d = det_dense(a);
    CHECK(d.real() == Catch::Approx(2.0).margin(1e-13));
    CHECK(d.imag() == Catch::Approx(-6.0).margin(1e-13));
}

TEST_CASE("tridiagonal solver matches dense solve", "[linalg]") {
    const int n = 8;
    widomkit::RngStream rng(5, 5);
    std::vector<double> lo(n - 1), di(n), up(n - 1), rhs(n);
    MatrixD a(n, n);
    for (int i = 0; i < n; ++i) {
        di[i] = 4.0 + rng.uniform();
        rhs[i] = rng.uniform();
        a(i, i) = di[i];
    }
    for (int i = 0; i + 1 < n; ++i) {
        lo[i] = rng.uniform() - 0.5;
        up[i] = rng.uniform() - 0.5;
        a(i + 1, i) = lo[i];
        a(i, i + 1) = up[i];
    }
    auto x1 = widomkit::solve_tridiagonal(lo, di, up, rhs);
    auto x2 = solve_dense(a, rhs);
    for (int i = 0; i < n; ++i) CHECK(x1[i] == Catch::Approx(x2[i]).epsilon(1e-12));
}
