#pragma once

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace widomkit {

/// Ordered union of disjoint finite open intervals (a_k, b_k).
class IntervalUnion {
  public:
    using Interval = std::pair<double, double>;

    IntervalUnion(std::initializer_list<Interval> list) : IntervalUnion(std::vector<Interval>(list)) {}

    explicit IntervalUnion(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
        if (intervals_.empty()) throw std::invalid_argument("IntervalUnion: empty list");
        double prev_b = -std::numeric_limits<double>::infinity();
        for (const auto& [a, b] : intervals_) {
            if (!std::isfinite(a) || !std::isfinite(b))
                throw std::invalid_argument("IntervalUnion: intervals must be finite");
            if (!(a < b)) throw std::invalid_argument("IntervalUnion: need a < b");
            if (!(a >= prev_b)) throw std::invalid_argument("IntervalUnion: intervals must be ordered and disjoint");
            prev_b = b;
        }
    }

    static IntervalUnion single(double a, double b) { return IntervalUnion({{a, b}}); }

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t count() const { return intervals_.size(); }

    double total_length() const {
        double s = 0.0;
        for (const auto& [a, b] : intervals_) s += b - a;
        return s;
    }

    /// Same union with every endpoint multiplied by c > 0.
    IntervalUnion scaled(double c) const {
        std::vector<Interval> out;
        out.reserve(intervals_.size());
        for (const auto& [a, b] : intervals_) out.emplace_back(c * a, c * b);
        return IntervalUnion(std::move(out));
    }

  private:
    std::vector<Interval> intervals_;
};

}  // namespace widomkit
