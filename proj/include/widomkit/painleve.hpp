#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "widomkit/airy.hpp"
#include "widomkit/linalg.hpp"
#include "widomkit/quadrature.hpp"

namespace widomkit {

/// Grid solution of u'' = t u + 2 u^3 on [-L_left, R_right] with u(-L) =
/// sqrt(L/2) and u(R) = Ai(R): the positive branch selected by those two
/// boundary values. residual_sup is the sup of the collocation residual
/// |u'' - t u - 2 u^3| with u'' estimated by the scheme's fourth-order
/// three-point stencil.
struct HMProfile {
    std::vector<double> grid;
    std::vector<double> u;
    std::vector<double> u_prime;
    double residual_sup = 0.0;

    double left() const { return grid.front(); }
    double right() const { return grid.back(); }
    double step() const { return grid[1] - grid[0]; }
};

namespace detail {

inline double hm_rhs(double t, double u) { return t * u + 2.0 * u * u * u; }
inline double hm_rhs_du(double t, double u) { return t + 6.0 * u * u; }

/// Collocation residual of the Numerov discretization, scaled as a second
/// derivative (division by h^2), so residual_sup reads in ODE units.
inline void hm_residual(const std::vector<double>& t, const std::vector<double>& u, double h,
                        std::vector<double>& r) {
    const std::size_t n = u.size();
    const double inv_h2 = 1.0 / (h * h);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double f_m = hm_rhs(t[i - 1], u[i - 1]);
        double f_0 = hm_rhs(t[i], u[i]);
        double f_p = hm_rhs(t[i + 1], u[i + 1]);
        r[i - 1] = (u[i + 1] - 2.0 * u[i] + u[i - 1]) * inv_h2 - (f_p + 10.0 * f_0 + f_m) / 12.0;
    }
}

inline double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace detail

inline HMProfile solve_hastings_mcleod(double L_left = 12.0, double R_right = 8.0,
                                       int n_points = 4001) {
    if (!(L_left >= 6.0) || !(R_right >= 6.0))
        throw std::invalid_argument("solve_hastings_mcleod: need L_left >= 6 and R_right >= 6");
    if (n_points < 400) throw std::invalid_argument("solve_hastings_mcleod: need n_points >= 400");

    HMProfile prof;
    const int n = n_points;
    const double h = (R_right + L_left) / (n - 1);
    prof.grid.resize(n);
    prof.u.resize(n);
    for (int i = 0; i < n; ++i) prof.grid[i] = -L_left + i * h;
    prof.grid.back() = R_right;

    // initial guess: left asymptote, Airy on the right, C0 ramp across [-1, 1]
    for (int i = 0; i < n; ++i) {
        double t = prof.grid[i];
        double left = t < 0.0 ? std::sqrt(-t / 2.0) : 0.0;
        double right = airy_ai(t);
        if (t <= -1.0)
            prof.u[i] = left;
        else if (t >= 1.0)
            prof.u[i] = right;
        else {
            double w = 0.5 * (t + 1.0);
            prof.u[i] = (1.0 - w) * std::sqrt(std::max(-t, 0.0) / 2.0) + w * right;
        }
    }
    prof.u.front() = std::sqrt(L_left / 2.0);
    prof.u.back() = airy_ai(R_right);

    std::vector<double> res(n - 2), lower(n - 3), diag(n - 2), upper(n - 3), trial(n);
    const double inv_h2 = 1.0 / (h * h);
    detail::hm_residual(prof.grid, prof.u, h, res);
    double res_norm = detail::sup_norm(res);

    bool converged = false;
    for (int iter = 0; iter < 80; ++iter) {
        for (int i = 1; i + 1 < n; ++i) {
            double dm = detail::hm_rhs_du(prof.grid[i - 1], prof.u[i - 1]);
            double d0 = detail::hm_rhs_du(prof.grid[i], prof.u[i]);
            double dp = detail::hm_rhs_du(prof.grid[i + 1], prof.u[i + 1]);
            diag[i - 1] = -2.0 * inv_h2 - 10.0 * d0 / 12.0;
            if (i > 1) lower[i - 2] = inv_h2 - dm / 12.0;
            if (i + 2 < n) upper[i - 1] = inv_h2 - dp / 12.0;
        }
        std::vector<double> rhs(n - 2);
        for (int i = 0; i < n - 2; ++i) rhs[i] = -res[i];
        std::vector<double> step = solve_tridiagonal(lower, diag, upper, rhs);

        double damp = 1.0;
        double new_norm = res_norm;
        for (int halving = 0; halving < 40; ++halving) {
            trial = prof.u;
            for (int i = 1; i + 1 < n; ++i) trial[i] += damp * step[i - 1];
            detail::hm_residual(prof.grid, trial, h, res);
            new_norm = detail::sup_norm(res);
            if (new_norm <= res_norm || res_norm < 1e-13) break;
            damp *= 0.5;
        }
        prof.u = trial;
        res_norm = new_norm;
        double step_norm = damp * detail::sup_norm(step);
        if (step_norm <= 1e-12) {
            converged = true;
            break;
        }
    }
    if (!converged) throw std::runtime_error("solve_hastings_mcleod: Newton did not converge");
    detail::hm_residual(prof.grid, prof.u, h, res);
    prof.residual_sup = detail::sup_norm(res);
    if (prof.residual_sup > 1e-9)
        throw std::runtime_error("solve_hastings_mcleod: residual above 1e-9");

    // u' by fourth-order differences (one-sided at the edges)
    prof.u_prime.resize(n);
    const auto& u = prof.u;
    for (int i = 2; i + 2 < n; ++i)
        prof.u_prime[i] = (u[i - 2] - 8.0 * u[i - 1] + 8.0 * u[i + 1] - u[i + 2]) / (12.0 * h);
    prof.u_prime[0] = (-25.0 * u[0] + 48.0 * u[1] - 36.0 * u[2] + 16.0 * u[3] - 3.0 * u[4]) / (12.0 * h);
    prof.u_prime[1] = (-3.0 * u[0] - 10.0 * u[1] + 18.0 * u[2] - 6.0 * u[3] + u[4]) / (12.0 * h);
    prof.u_prime[n - 2] =
        (3.0 * u[n - 1] + 10.0 * u[n - 2] - 18.0 * u[n - 3] + 6.0 * u[n - 4] - u[n - 5]) / (12.0 * h);
    prof.u_prime[n - 1] =
        (25.0 * u[n - 1] - 48.0 * u[n - 2] + 36.0 * u[n - 3] - 16.0 * u[n - 4] + 3.0 * u[n - 5]) /
        (12.0 * h);
    return prof;
}

namespace detail {

/// Cubic interpolation of grid data at an off-node point.
inline double interp_cubic(const std::vector<double>& grid, const std::vector<double>& y, double x) {
    const int n = static_cast<int>(grid.size());
    double h = grid[1] - grid[0];
    int j = static_cast<int>(std::floor((x - grid[0]) / h));
    j = std::clamp(j, 1, n - 3) - 1;  // stencil j .. j+3
    double r = 1.0;
    double out = 0.0;
    for (int a = 0; a < 4; ++a) {
        double w = 1.0;
        for (int b = 0; b < 4; ++b)
            if (b != a) w *= (x - grid[j + b]) / (grid[j + a] - grid[j + b]);
        out += w * y[j + a];
        (void)r;
    }
    return out;
}

/// integral over [x0, grid end] of grid samples y, fourth order: cubic-stencil
/// cell rule h(-y[i-1] + 13 y[i] + 13 y[i+1] - y[i+2])/24 plus a Gauss patch
/// for the leading partial cell.
template <typename F>
inline double grid_integral_from(const std::vector<double>& grid, const std::vector<double>& y,
                                 double x0, F&& integrand_at) {
    const int n = static_cast<int>(grid.size());
    const double h = grid[1] - grid[0];
    int j0 = static_cast<int>(std::ceil((x0 - grid[0]) / h - 1e-9));
    j0 = std::clamp(j0, 0, n - 1);
    double total = 0.0;
    if (grid[j0] - x0 > 1e-13) {
        static const double gx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                     0.8611363115940526};
        static const double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                     0.3478548451374538};
        double a = x0, b = grid[j0];
        for (int q = 0; q < 4; ++q) {
            double x = 0.5 * (a + b) + 0.5 * (b - a) * gx[q];
            total += 0.5 * (b - a) * gw[q] * integrand_at(x);
        }
    }
    for (int i = j0; i + 1 < n; ++i) {
        int im = std::max(i - 1, 0);
        int ip = std::min(i + 2, n - 1);
        if (i == 0 || i + 2 > n - 1) {
            // shifted cubic stencil at the ends
            double a = grid[i], b = grid[i + 1];
            static const double gx[4] = {-0.8611363115940526, -0.3399810435848563,
                                         0.3399810435848563, 0.8611363115940526};
            static const double gw[4] = {0.3478548451374538, 0.6521451548625461,
                                         0.6521451548625461, 0.3478548451374538};
            for (int q = 0; q < 4; ++q) {
                double x = 0.5 * (a + b) + 0.5 * (b - a) * gx[q];
                total += 0.5 * (b - a) * gw[q] * interp_cubic(grid, y, x);
            }
        } else {
            total += h * (-y[im] + 13.0 * y[i] + 13.0 * y[i + 1] - y[ip]) / 24.0;
        }
    }
    return total;
}

}  // namespace detail

struct TwIntegrals {
    double q2;  // integral of (s - t) u(s)^2 over (t, infinity)
    double q1;  // integral of u(s) over (t, infinity)
};

/// The two Painleve transforms at t. The part beyond the grid is completed
/// with u ~ Ai, integrated by Gauss-Legendre out to where Ai^2 is negligible.
inline TwIntegrals tw_integrals(const HMProfile& prof, double t) {
    if (!(t >= prof.left()) || !(t <= prof.right() - 2.0))
        throw std::invalid_argument("tw_integrals: t outside profile coverage");
    const int n = static_cast<int>(prof.grid.size());
    std::vector<double> w2(n), w1(n);
    for (int i = 0; i < n; ++i) {
        w2[i] = (prof.grid[i] - t) * prof.u[i] * prof.u[i];
        w1[i] = prof.u[i];
    }
    auto u_at = [&](double x) { return detail::interp_cubic(prof.grid, prof.u, x); };
    double q2 = detail::grid_integral_from(prof.grid, w2, t, [&](double x) {
        double u = u_at(x);
        return (x - t) * u * u;
    });
    double q1 = detail::grid_integral_from(prof.grid, w1, t, u_at);

    const double R = prof.right();
    QuadratureRule tail = gauss_legendre(40, R, R + 12.0);
    for (std::size_t q = 0; q < tail.nodes.size(); ++q) {
        double s = tail.nodes[q];
        double ai = airy_ai(s);
        q2 += tail.weights[q] * (s - t) * ai * ai;
        q1 += tail.weights[q] * ai;
    }
    return {q2, q1};
}

/// F2(t) = exp(-q2).
inline double f2_painleve(const HMProfile& prof, double t) {
    return std::exp(-tw_integrals(prof, t).q2);
}

/// ln F2(t) = -q2; usable deep in the left tail.
inline double f2_log_painleve(const HMProfile& prof, double t) { return -tw_integrals(prof, t).q2; }

/// E(t) = exp(-q1/2).
inline double e_factor(const HMProfile& prof, double t) {
    return std::exp(-0.5 * tw_integrals(prof, t).q1);
}

/// F1 = sqrt(F2) E.
inline double f1(const HMProfile& prof, double t) {
    TwIntegrals q = tw_integrals(prof, t);
    return std::exp(-0.5 * q.q2 - 0.5 * q.q1);
}

/// F4 = (E + 1/E)/2 sqrt(F2). No argument rescaling is applied for the
/// beta = 4 law; some references tabulate F4 at a sqrt(2)-scaled argument.
inline double f4(const HMProfile& prof, double t) {
    TwIntegrals q = tw_integrals(prof, t);
    double e = std::exp(-0.5 * q.q1);
    return 0.5 * (e + 1.0 / e) * std::exp(-0.5 * q.q2);
}

}  // namespace widomkit
