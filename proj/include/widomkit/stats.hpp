#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace widomkit {

/// Kolmogorov-Smirnov sup distance between the empirical CDF of sorted
/// samples and a reference CDF.
inline double ks_distance(const std::vector<double>& sorted_samples,
                          const std::function<double(double)>& cdf) {
    const std::size_t n = sorted_samples.size();
    if (n == 0) throw std::invalid_argument("ks_distance: empty sample set");
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double f = cdf(sorted_samples[i]);
        double lo = static_cast<double>(i) / n;
        double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::abs(f - lo), std::abs(f - hi)));
    }
    return d;
}

/// Two-sample KS distance. Inputs need not be sorted.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample set");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                                 static_cast<double>(j) / b.size()));
    }
    return d;
}

inline double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double variance(const std::vector<double>& v) {
    double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

}  // namespace widomkit
