#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace widomkit {

/// Dense row-major matrix over double or complex<double>.
template <typename T>
struct Matrix {
    int n = 0, m = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(int rows, int cols) : n(rows), m(cols), data(static_cast<std::size_t>(rows) * cols, T{}) {}

    T& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * m + j]; }
    const T& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * m + j]; }

    static Matrix identity(int k) {
        Matrix I(k, k);
        for (int i = 0; i < k; ++i) I(i, i) = T{1};
        return I;
    }
};

using MatrixD = Matrix<double>;
using MatrixC = Matrix<std::complex<double>>;

namespace detail {

inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const std::complex<double>& x) { return std::abs(x); }

/// In-place LU with partial pivoting. Returns the permutation sign, or 0 if a
/// pivot is exactly zero (singular to working precision).
template <typename T>
int lu_factor(Matrix<T>& a, std::vector<int>& piv) {
    if (a.n != a.m) throw std::invalid_argument("lu_factor: matrix must be square");
    const int n = a.n;
    piv.resize(n);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = abs_of(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = abs_of(a(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        piv[k] = p;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        if (a(k, k) == T{}) return 0;
        T inv = T{1} / a(k, k);
        for (int i = k + 1; i < n; ++i) {
            T f = a(i, k) * inv;
            a(i, k) = f;
            if (f == T{}) continue;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return sign;
}

template <typename T>
void lu_solve(const Matrix<T>& lu, const std::vector<int>& piv, std::vector<T>& x) {
    const int n = lu.n;
    for (int k = 0; k < n; ++k)
        if (piv[k] != k) std::swap(x[k], x[piv[k]]);
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i) x[i] -= lu(i, k) * x[k];
    for (int k = n - 1; k >= 0; --k) {
        x[k] /= lu(k, k);
        for (int i = 0; i < k; ++i) x[i] -= lu(i, k) * x[k];
    }
}

}  // namespace detail

/// Determinant via LU with partial pivoting; sign exact, value to roundoff.
template <typename T>
T det_dense(Matrix<T> a) {
    std::vector<int> piv;
    int sign = detail::lu_factor(a, piv);
    if (sign == 0) return T{};
    T d = static_cast<T>(sign);
    for (int k = 0; k < a.n; ++k) d *= a(k, k);
    return d;
}

/// log|det| together with the sign, for determinants that underflow.
struct SignedLogDet {
    double log_abs = 0.0;
    int sign = 1;  // 0 marks an exactly singular factorization
};

inline SignedLogDet log_det_dense(MatrixD a) {
    std::vector<int> piv;
    int sign = detail::lu_factor(a, piv);
    SignedLogDet out;
    out.sign = sign;
    if (sign == 0) {
        out.log_abs = -std::numeric_limits<double>::infinity();
        return out;
    }
    for (int k = 0; k < a.n; ++k) {
        double d = a(k, k);
        if (d < 0) {
            out.sign = -out.sign;
            d = -d;
        }
        out.log_abs += std::log(d);
    }
    return out;
}

/// Solves Ax = b by LU with partial pivoting.
template <typename T>
std::vector<T> solve_dense(Matrix<T> a, std::vector<T> b) {
    if (a.n != a.m) throw std::invalid_argument("solve_dense: matrix must be square");
    if (static_cast<int>(b.size()) != a.n) throw std::invalid_argument("solve_dense: size mismatch");
    std::vector<int> piv;
    if (detail::lu_factor(a, piv) == 0) throw std::runtime_error("solve_dense: singular matrix");
    detail::lu_solve(a, piv, b);
    return b;
}

/// Solves the tridiagonal system (lower, diag, upper) x = rhs by the Thomas
/// algorithm without pivoting; fine for the diagonally dominant systems here.
inline std::vector<double> solve_tridiagonal(std::vector<double> lower, std::vector<double> diag,
                                             std::vector<double> upper, std::vector<double> rhs) {
    const std::size_t n = diag.size();
    if (lower.size() != n - 1 || upper.size() != n - 1 || rhs.size() != n)
        throw std::invalid_argument("solve_tridiagonal: size mismatch");
    for (std::size_t i = 1; i < n; ++i) {
        double w = lower[i - 1] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
    return x;
}

}  // namespace widomkit
