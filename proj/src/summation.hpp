#pragma once

#include <cmath>

namespace traderank::detail {

// Neumaier compensated summation.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

template <typename Range>
double compensated_sum(const Range& values) {
    CompensatedSum acc;
    for (double v : values) acc.add(v);
    return acc.value();
}

}  // namespace traderank::detail
