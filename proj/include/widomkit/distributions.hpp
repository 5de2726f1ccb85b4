#pragma once

#include <cmath>
#include <stdexcept>

#include "widomkit/constants.hpp"
#include "widomkit/dist_table.hpp"
#include "widomkit/nystrom.hpp"
#include "widomkit/painleve.hpp"

namespace widomkit {

inline constexpr int kSineNodesDefault = 48;

/// P_x = det(1 - K_sine(x)) on the domain; the no-eigenvalue probability of
/// the scaled bulk point process on that union.
inline double sine_gap_probability(double x, const IntervalUnion& domain = IntervalUnion::single(-1.0, 1.0),
                                   int n_per_interval = kSineNodesDefault) {
    if (!(x > 0.0)) throw std::invalid_argument("sine_gap_probability: x must be positive");
    return nystrom_det(SineKernel(x), domain, n_per_interval);
}

inline double sine_gap_log(double x, const IntervalUnion& domain = IntervalUnion::single(-1.0, 1.0),
                           int n_per_interval = kSineNodesDefault) {
    if (!(x > 0.0)) throw std::invalid_argument("sine_gap_log: x must be positive");
    return nystrom_log_det(SineKernel(x), domain, n_per_interval);
}

/// ln P_x + x^2/2 + (1/4) ln x on (-1, 1): converges to c0_sine as x grows.
inline double tail_residual_sine(double x, int n_per_interval = kSineNodesDefault) {
    if (!(x >= 4.0)) throw std::invalid_argument("tail_residual_sine: x >= 4 required");
    double lp = sine_gap_log(x, IntervalUnion::single(-1.0, 1.0), n_per_interval);
    return lp + 0.5 * x * x + 0.25 * std::log(x);
}

/// ln F2(t) - t^3/12 + (1/8) ln(-t): converges to c0_airy as t -> -infinity.
inline double tail_residual_airy(double t) {
    if (!(t <= -6.0)) throw std::invalid_argument("tail_residual_airy: t <= -6 required");
    double lf = semi_infinite_log_det(t);
    return lf - t * t * t / 12.0 + std::log(-t) / 8.0;
}

/// Same residual with ln F2 from the Painleve transform.
inline double tail_residual_airy_painleve(const HMProfile& prof, double t) {
    if (!(t <= -6.0)) throw std::invalid_argument("tail_residual_airy_painleve: t <= -6 required");
    return f2_log_painleve(prof, t) - t * t * t / 12.0 + std::log(-t) / 8.0;
}

/// d/dx ln P_x by central differences (step h, relative step scaled by x).
inline double log_derivative_gap(double x, const IntervalUnion& domain, double h = 1e-3,
                                 int n_per_interval = kSineNodesDefault) {
    if (!(x > 0.0)) throw std::invalid_argument("log_derivative_gap: x must be positive");
    double lp = sine_gap_log(x + h, domain, n_per_interval);
    double lm = sine_gap_log(x - h, domain, n_per_interval);
    return (lp - lm) / (2.0 * h);
}

inline DistTable f2_table_det(const std::vector<double>& grid) {
    DistTable out;
    out.grid = grid;
    out.values.resize(grid.size());
    out.provenance = Provenance::Determinant;
    out.meta = "F2 (Airy-kernel determinant)";
    for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = semi_infinite_det(grid[i]);
    return out;
}

inline DistTable f2_table_painleve(const HMProfile& prof, const std::vector<double>& grid) {
    DistTable out;
    out.grid = grid;
    out.values.resize(grid.size());
    out.provenance = Provenance::Painleve;
    out.meta = "F2 (Painleve transform)";
    for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = f2_painleve(prof, grid[i]);
    return out;
}

inline DistTable f1_table(const HMProfile& prof, const std::vector<double>& grid) {
    DistTable out;
    out.grid = grid;
    out.values.resize(grid.size());
    out.provenance = Provenance::Painleve;
    out.meta = "F1 (Painleve transform)";
    for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = f1(prof, grid[i]);
    return out;
}

inline DistTable f4_table(const HMProfile& prof, const std::vector<double>& grid) {
    DistTable out;
    out.grid = grid;
    out.values.resize(grid.size());
    out.provenance = Provenance::Painleve;
    out.meta = "F4 (Painleve transform)";
    for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = f4(prof, grid[i]);
    return out;
}

}  // namespace widomkit
