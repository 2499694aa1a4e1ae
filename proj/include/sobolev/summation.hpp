#pragma once

#include <cmath>
#include <span>

namespace sobolev {

/// Neumaier's improved Kahan summation. Order-dependent by construction:
/// callers feed terms in ascending index order to keep results reproducible.
class NeumaierSum {
public:
    void add(double term) noexcept
    {
        const double t = sum_ + term;
        if (std::fabs(sum_) >= std::fabs(term)) {
            compensation_ += (sum_ - t) + term;
        } else {
            compensation_ += (term - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

inline double neumaier_sum(std::span<const double> terms) noexcept
{
    NeumaierSum acc;
    for (const double t : terms) {
        acc.add(t);
    }
    return acc.value();
}

} // namespace sobolev
