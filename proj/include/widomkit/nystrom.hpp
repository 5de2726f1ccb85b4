#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "widomkit/interval.hpp"
#include "widomkit/kernels.hpp"
#include "widomkit/linalg.hpp"
#include "widomkit/quadrature.hpp"

namespace widomkit {

/// Discretization of 1 - K on a union of intervals: Gauss-Legendre nodes and
/// weights concatenated per interval, and the symmetrized matrix
/// I - W^{1/2} K W^{1/2} (same spectrum as the plain Nystrom matrix, but
/// symmetric for the kernels handled here).
struct NystromSystem {
    std::vector<double> nodes;
    std::vector<double> weights;
    MatrixD matrix;
};

inline NystromSystem build_nystrom(const KernelKind& kind, const IntervalUnion& domain,
                                   int n_per_interval) {
    if (n_per_interval < 4) throw std::invalid_argument("build_nystrom: need n_per_interval >= 4");
    NystromSystem sys;
    for (const auto& [a, b] : domain.intervals()) {
        QuadratureRule rule = gauss_legendre(n_per_interval, a, b);
        sys.nodes.insert(sys.nodes.end(), rule.nodes.begin(), rule.nodes.end());
        sys.weights.insert(sys.weights.end(), rule.weights.begin(), rule.weights.end());
    }
    const int n = static_cast<int>(sys.nodes.size());
    std::vector<double> sw(n);
    for (int i = 0; i < n; ++i) sw[i] = std::sqrt(sys.weights[i]);

    sys.matrix = MatrixD(n, n);
    if (std::holds_alternative<AiryKernel>(kind)) {
        std::vector<double> ai(n), aip(n);
        for (int i = 0; i < n; ++i) {
            auto p = detail::airy_pair(sys.nodes[i]);
            ai[i] = p.ai;
            aip[i] = p.aip;
        }
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double k = detail::airy_kernel_cached(sys.nodes[i], ai[i], aip[i], sys.nodes[j],
                                                      ai[j], aip[j]);
                double v = sw[i] * k * sw[j];
                sys.matrix(i, j) = -v;
                sys.matrix(j, i) = -v;
            }
    } else {
        double x = std::get<SineKernel>(kind).x;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double k = x / M_PI * detail::sinc(x * (sys.nodes[i] - sys.nodes[j]));
                double v = sw[i] * k * sw[j];
                sys.matrix(i, j) = -v;
                sys.matrix(j, i) = -v;
            }
    }
    for (int i = 0; i < n; ++i) sys.matrix(i, i) += 1.0;
    return sys;
}

/// det(1 - K) restricted to the domain. The kernels in scope are nonnegative
/// contractions, so the result lies in (0, 1]; rounding overshoot above 1 is
/// clipped.
inline double nystrom_det(const KernelKind& kind, const IntervalUnion& domain, int n_per_interval) {
    NystromSystem sys = build_nystrom(kind, domain, n_per_interval);
    double d = det_dense(sys.matrix);
    return std::min(d, 1.0);
}

/// ln det(1 - K); sum of log LU pivots, usable where the determinant itself
/// underflows.
inline double nystrom_log_det(const KernelKind& kind, const IntervalUnion& domain,
                              int n_per_interval) {
    NystromSystem sys = build_nystrom(kind, domain, n_per_interval);
    SignedLogDet s = log_det_dense(std::move(sys.matrix));
    if (s.sign <= 0) throw std::runtime_error("nystrom_log_det: nonpositive determinant");
    return s.log_abs;
}

namespace detail {

/// Exact trace of the Airy kernel on (T, infinity):
/// integral of Ai'(z)^2 - z Ai(z)^2 with antiderivative
/// -(2/3)z^2 Ai^2 + (2/3)z Ai'^2 + (1/3) Ai Ai'.
inline double airy_tail_trace(double T) {
    auto [ai, aip] = airy_pair(T);
    return (2.0 * T * T * ai * ai - 2.0 * T * aip * aip - ai * aip) / 3.0;
}

struct SemiInfiniteDefaults {
    int n;
    double L;
};

inline SemiInfiniteDefaults semi_infinite_defaults(double t, int n, double L) {
    if (L <= 0.0) L = std::max(12.0, 14.0 - t);
    if (n <= 0) n = std::max(80, static_cast<int>(std::ceil(8.0 * L)));
    return {n, L};
}

}  // namespace detail

/// Airy-kernel determinant on (t, infinity), truncated to (t, t+L). The
/// neglected tail is bounded by the exact trace beyond t+L and must be below
/// tail_tol. n <= 0 or L <= 0 pick defaults sized for ~1e-10 accuracy on
/// t in [-10, 6].
inline double semi_infinite_det(double t, int n = 0, double L = 0.0, double tail_tol = 1e-11) {
    if (t < -15.0) throw std::invalid_argument("semi_infinite_det: t >= -15 required");
    auto [nn, LL] = detail::semi_infinite_defaults(t, n, L);
    double tail = detail::airy_tail_trace(t + LL);
    if (!(tail < tail_tol))
        throw std::runtime_error("semi_infinite_det: truncation tail above tolerance");
    return nystrom_det(AiryKernel{}, IntervalUnion::single(t, t + LL), nn);
}

/// ln of semi_infinite_det, for deep-left-tail work.
inline double semi_infinite_log_det(double t, int n = 0, double L = 0.0, double tail_tol = 1e-11) {
    if (t < -15.0) throw std::invalid_argument("semi_infinite_log_det: t >= -15 required");
    auto [nn, LL] = detail::semi_infinite_defaults(t, n, L);
    double tail = detail::airy_tail_trace(t + LL);
    if (!(tail < tail_tol))
        throw std::runtime_error("semi_infinite_log_det: truncation tail above tolerance");
    return nystrom_log_det(AiryKernel{}, IntervalUnion::single(t, t + LL), nn);
}

/// tr((1-K)^{-1} K) of the discretized system.
inline double resolvent_trace(const KernelKind& kind, const IntervalUnion& domain,
                              int n_per_interval) {
    NystromSystem sys = build_nystrom(kind, domain, n_per_interval);
    const int n = sys.matrix.n;
    // A = W^{1/2} K W^{1/2} = I - matrix
    MatrixD a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = (i == j ? 1.0 : 0.0) - sys.matrix(i, j);

    MatrixD lu = sys.matrix;
    std::vector<int> piv;
    if (detail::lu_factor(lu, piv) == 0)
        throw std::runtime_error("resolvent_trace: singular 1 - K");
    double logdet = 0.0;
    for (int k = 0; k < n; ++k) logdet += std::log(std::abs(lu(k, k)));
    if (logdet < std::log(1e-300))
        throw std::runtime_error("resolvent_trace: determinant below 1e-300");

    double tr = 0.0;
    std::vector<double> col(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) col[i] = a(i, j);
        detail::lu_solve(lu, piv, col);
        tr += col[j];
    }
    return tr;
}

}  // namespace widomkit
