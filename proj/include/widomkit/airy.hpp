#pragma once

#include <cmath>
#include <stdexcept>

namespace widomkit {
namespace detail {

// Double-double helpers (error-free transforms; two_prod needs fma). The
// Maclaurin series of Ai loses ~exp((2/3)|z|^{3/2}) in cancellation, so the
// partial sums are carried in ~31 significant digits to keep the final
// absolute error far below 1e-12 across the whole series branch.
struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD dd_div(DD a, double b) {
    double q = a.hi / b;
    DD p = two_prod(q, b);
    return quick_two_sum(q, ((a.hi - p.hi) - p.lo + a.lo) / b);
}

inline DD dd_sub(DD a, DD b) { return dd_add(a, DD{-b.hi, -b.lo}); }

// Ai(0) and -Ai'(0) split into hi/lo pairs (generator: tools/oracles/airy_reference.py).
inline constexpr double kAi0Hi = 3.55028053887817219e-01;
inline constexpr double kAi0Lo = 2.05233632436211994e-17;
inline constexpr double kAip0Hi = -2.58819403792806824e-01;
inline constexpr double kAip0Lo = 2.52224311161083207e-17;

struct AiryPair {
    double ai;
    double aip;
};

// Maclaurin series of Ai and Ai' in double-double arithmetic. Valid for any
// z, used for |z| <= 8 where the cancellation stays within the dd headroom.
inline AiryPair airy_series(double z) {
    DD z2 = two_prod(z, z);
    DD z3 = dd_mul(z2, DD{z, 0.0});

    DD tf{1.0, 0.0};                 // f  = sum, term_0 = 1
    DD tg{z, 0.0};                   // g  = sum, term_0 = z
    DD tfp = dd_div(z2, 2.0);        // f' = sum, term_0 = z^2/2
    DD tgp{1.0, 0.0};                // g' = sum, term_0 = 1
    DD sf = tf, sg = tg, sfp = tfp, sgp = tgp;

    for (int k = 0; k < 400; ++k) {
        double a = 3.0 * k;
        tf = dd_div(dd_mul(tf, z3), (a + 2.0) * (a + 3.0));
        tg = dd_div(dd_mul(tg, z3), (a + 3.0) * (a + 4.0));
        tfp = dd_div(dd_mul(tfp, z3), (a + 3.0) * (a + 5.0));
        tgp = dd_div(dd_mul(tgp, z3), (a + 1.0) * (a + 3.0));
        sf = dd_add(sf, tf);
        sg = dd_add(sg, tg);
        sfp = dd_add(sfp, tfp);
        sgp = dd_add(sgp, tgp);
        double scale = std::abs(sf.hi) + std::abs(sg.hi) + 1.0;
        if (std::abs(tf.hi) < 1e-40 * scale && std::abs(tg.hi) < 1e-40 * scale) break;
    }

    DD c1{kAi0Hi, kAi0Lo};
    DD c2{-kAip0Hi, -kAip0Lo};  // c2 = -Ai'(0) > 0
    DD ai = dd_sub(dd_mul(c1, sf), dd_mul(c2, sg));
    DD aip = dd_sub(dd_mul(c1, sfp), dd_mul(c2, sgp));
    return {ai.hi + ai.lo, aip.hi + aip.lo};
}

// Poincare expansions for |z| > 8 (coefficients u_k, v_k of the standard
// Airy asymptotics; series truncated at the smallest term).
inline AiryPair airy_asymptotic(double z) {
    const double sqrt_pi = 1.7724538509055160273;
    double x = std::abs(z);
    double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    double x4 = std::pow(x, 0.25);

    if (z > 0) {
        double su = 0.0, sv = 0.0;
        double u = 1.0, v = 1.0, pw = 1.0, sign = 1.0;
        double prev = 1e300;
        for (int k = 0; k <= 60; ++k) {
            double tu = u * pw;
            if (std::abs(tu) >= prev) break;  // past the smallest term
            prev = std::abs(tu);
            su += sign * tu;
            sv += sign * v * pw;
            double kk = k + 1.0;
            u = u * (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) /
                (216.0 * kk * (2.0 * kk - 1.0));
            v = -u * (6.0 * kk + 1.0) / (6.0 * kk - 1.0);
            pw /= zeta;
            sign = -sign;
        }
        double e = std::exp(-zeta);
        return {e * su / (2.0 * sqrt_pi * x4), -x4 * e * sv / (2.0 * sqrt_pi)};
    }

    // oscillatory branch, z < 0
    double c = std::cos(zeta - M_PI / 4.0);
    double s = std::sin(zeta - M_PI / 4.0);
    double se = 0.0, so = 0.0, sve = 0.0, svo = 0.0;
    double u = 1.0, v = 1.0, pw = 1.0;
    double prev = 1e300;
    for (int k = 0; k <= 60; ++k) {
        double tu = u * pw;
        if (std::abs(tu) >= prev) break;
        prev = std::abs(tu);
        double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;  // (-1)^floor(k/2)
        if (k % 2 == 0) {
            se += sgn * tu;
            sve += sgn * v * pw;
        } else {
            so += sgn * tu;
            svo += sgn * v * pw;
        }
        double kk = k + 1.0;
        u = u * (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) /
            (216.0 * kk * (2.0 * kk - 1.0));
        v = -u * (6.0 * kk + 1.0) / (6.0 * kk - 1.0);
        pw /= zeta;
    }
    double ai = (c * se + s * so) / (sqrt_pi * x4);
    double aip = x4 * (s * sve - c * svo) / sqrt_pi;
    return {ai, aip};
}

inline AiryPair airy_pair(double z) {
    if (!std::isfinite(z)) throw std::invalid_argument("airy: non-finite argument");
    if (std::abs(z) <= 8.0) return airy_series(z);
    return airy_asymptotic(z);
}

}  // namespace detail

/// Airy function Ai(z); absolute error below 1e-12 on [-20, 20].
inline double airy_ai(double z) { return detail::airy_pair(z).ai; }

/// Derivative Ai'(z), same accuracy contract as airy_ai.
inline double airy_ai_prime(double z) { return detail::airy_pair(z).aip; }

}  // namespace widomkit
