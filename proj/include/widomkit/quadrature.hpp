#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace widomkit {

/// Nodes and weights of an n-point rule on a finite interval (a, b).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = 0.0;
    double b = 0.0;

    template <typename F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// Gauss-Legendre rule on (a, b): exact for polynomials of degree <= 2n-1.
/// Nodes are Newton-refined roots of P_n started from the Chebyshev guess
/// cos(pi*(i - 1/4)/(n + 1/2)).
inline QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("gauss_legendre: need finite a < b");

    QuadratureRule rule;
    rule.a = a;
    rule.b = b;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const int m = (n + 1) / 2;  // roots come in +/- pairs on (-1, 1)
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // recurrence (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
            double p0 = 1.0, p1 = x;
            for (int k = 1; k < n; ++k) {
                double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15) break;
        }
        // one clean-up step for the weight formula
        double p0 = 1.0, p1 = x;
        for (int k = 1; k < n; ++k) {
            double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x is the i-th root from the top; store ascending
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    if (n % 2 == 1) rule.nodes[m - 1] = mid;  // central node of odd rules is exact
    return rule;
}

}  // namespace widomkit
