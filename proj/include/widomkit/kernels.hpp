#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>

#include "widomkit/airy.hpp"

namespace widomkit {

/// Bulk-scaling kernel sin(x(z-z'))/(pi(z-z')) with frequency parameter x > 0.
struct SineKernel {
    double x;
    explicit SineKernel(double freq) : x(freq) {
        if (!(freq > 0.0) || !std::isfinite(freq))
            throw std::invalid_argument("SineKernel: x must be positive and finite");
    }
};

/// Edge-scaling kernel (Ai(z)Ai'(z') - Ai'(z)Ai(z'))/(z-z').
struct AiryKernel {};

using KernelKind = std::variant<SineKernel, AiryKernel>;

namespace detail {

inline double sinc(double u) {
    if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
    return std::sin(u) / u;
}

/// Airy kernel from cached function values at the two points; falls back to a
/// midpoint Taylor step when z-z' is small enough for the quotient to cancel.
inline double airy_kernel_cached(double z, double ai_z, double aip_z, double zp, double ai_zp,
                                 double aip_zp) {
    double delta = z - zp;
    if (delta == 0.0) return aip_z * aip_z - z * ai_z * ai_z;
    if (std::abs(delta) >= 2e-3) return (ai_z * aip_zp - aip_z * ai_zp) / delta;
    double m = 0.5 * (z + zp);
    double d = 0.5 * delta;
    auto [ai, aip] = airy_pair(m);
    double D = aip * aip - m * ai * ai;
    double P = ai * aip;
    double d2 = d * d;
    return D + d2 * ((2.0 * m * D + P) / 3.0) +
           d2 * d2 * (2.0 * m * m * D / 15.0 + m * P / 15.0 + ai * ai / 20.0);
}

}  // namespace detail

/// Kernel value at (z, z'); the diagonal returns the analytic limit.
inline double kernel_eval(const KernelKind& kind, double z, double zp) {
    if (!std::isfinite(z) || !std::isfinite(zp))
        throw std::invalid_argument("kernel_eval: non-finite argument");
    if (std::holds_alternative<SineKernel>(kind)) {
        double x = std::get<SineKernel>(kind).x;
        return x / M_PI * detail::sinc(x * (z - zp));
    }
    auto [ai_z, aip_z] = detail::airy_pair(z);
    auto [ai_zp, aip_zp] = detail::airy_pair(zp);
    return detail::airy_kernel_cached(z, ai_z, aip_z, zp, ai_zp, aip_zp);
}

}  // namespace widomkit
