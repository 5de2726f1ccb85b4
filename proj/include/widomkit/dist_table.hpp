#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace widomkit {

enum class Provenance { Determinant, Painleve, Empirical };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Determinant: return "determinant";
        case Provenance::Painleve: return "painleve";
        case Provenance::Empirical: return "empirical";
    }
    return "?";
}

/// Values of a distribution function (or a density, for pdf_via_diff output)
/// tabulated on a uniform grid.
struct DistTable {
    std::vector<double> grid;
    std::vector<double> values;
    Provenance provenance = Provenance::Determinant;
    std::string meta;

    double step() const { return grid.size() > 1 ? grid[1] - grid[0] : 0.0; }

    /// Piecewise-linear evaluation clamped to the first/last tabulated value.
    double at(double t) const {
        if (grid.empty()) throw std::logic_error("DistTable: empty");
        if (t <= grid.front()) return values.front();
        if (t >= grid.back()) return values.back();
        double h = step();
        std::size_t i = static_cast<std::size_t>((t - grid.front()) / h);
        if (i + 1 >= grid.size()) i = grid.size() - 2;
        double w = (t - grid[i]) / h;
        return (1.0 - w) * values[i] + w * values[i + 1];
    }

    bool is_monotone_cdf(double slack = 1e-9) const {
        for (std::size_t i = 1; i < values.size(); ++i)
            if (values[i] < values[i - 1] - slack) return false;
        return true;
    }
};

inline std::vector<double> uniform_grid(double from, double to, double step) {
    if (!(step > 0.0) || !(to > from)) throw std::invalid_argument("uniform_grid: bad range");
    std::vector<double> g;
    int n = static_cast<int>(std::round((to - from) / step));
    g.reserve(n + 1);
    for (int i = 0; i <= n; ++i) g.push_back(from + i * step);
    return g;
}

/// Central-difference density of a CDF table (one-sided at the ends).
inline DistTable pdf_via_diff(const DistTable& table) {
    const std::size_t n = table.grid.size();
    if (n < 3) throw std::invalid_argument("pdf_via_diff: need at least 3 points");
    const double h = table.step();
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs((table.grid[i] - table.grid[i - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw std::invalid_argument("pdf_via_diff: grid must be uniform");
    DistTable out;
    out.grid = table.grid;
    out.values.resize(n);
    out.provenance = table.provenance;
    out.meta = table.meta + " (density)";
    for (std::size_t i = 1; i + 1 < n; ++i)
        out.values[i] = (table.values[i + 1] - table.values[i - 1]) / (2.0 * h);
    out.values[0] = (table.values[1] - table.values[0]) / h;
    out.values[n - 1] = (table.values[n - 1] - table.values[n - 2]) / h;
    return out;
}

/// Empirical CDF of samples evaluated on a grid.
inline DistTable empirical_table(std::vector<double> samples, std::vector<double> grid,
                                 std::string meta = {}) {
    if (samples.empty()) throw std::invalid_argument("empirical_table: no samples");
    std::sort(samples.begin(), samples.end());
    DistTable out;
    out.grid = std::move(grid);
    out.values.reserve(out.grid.size());
    out.provenance = Provenance::Empirical;
    out.meta = std::move(meta);
    for (double t : out.grid) {
        auto it = std::upper_bound(samples.begin(), samples.end(), t);
        out.values.push_back(static_cast<double>(it - samples.begin()) / samples.size());
    }
    return out;
}

}  // namespace widomkit
