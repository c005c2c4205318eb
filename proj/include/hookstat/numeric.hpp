#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hookstat {

/// Neumaier-compensated accumulator.
class CompensatedSum {
    double sum_ = 0.0;
    double comp_ = 0.0;

  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }
};

/// ln(m!) table, filled once per use site and then read-only.
class LogFactorials {
    std::vector<double> table_;

  public:
    explicit LogFactorials(std::size_t max_m) {
        table_.resize(max_m + 1);
        for (std::size_t m = 0; m <= max_m; ++m)
            table_[m] = std::lgamma(static_cast<double>(m) + 1.0);
    }

    double operator()(std::int64_t m) const {
        if (m < 0 || static_cast<std::size_t>(m) >= table_.size())
            throw std::out_of_range("LogFactorials: argument outside precomputed range");
        return table_[static_cast<std::size_t>(m)];
    }

    std::int64_t max_argument() const { return static_cast<std::int64_t>(table_.size()) - 1; }
};

/// Streaming log-sum-exp: log(sum_i exp(term_i)) without leaving log space.
/// Single fixed pass, so results are reproducible bit-for-bit.
class LogSumExp {
    double max_ = -std::numeric_limits<double>::infinity();
    CompensatedSum scaled_;
    bool empty_ = true;

  public:
    void add(double log_term) {
        if (log_term == -std::numeric_limits<double>::infinity()) return;
        if (empty_) {
            max_ = log_term;
            scaled_.add(1.0);
            empty_ = false;
            return;
        }
        if (log_term <= max_) {
            scaled_.add(std::exp(log_term - max_));
        } else {
            // rescale the accumulated sum to the new maximum
            double s = scaled_.value() * std::exp(max_ - log_term);
            scaled_ = CompensatedSum();
            scaled_.add(s);
            scaled_.add(1.0);
            max_ = log_term;
        }
    }

    bool empty() const { return empty_; }

    double value() const {
        if (empty_) return -std::numeric_limits<double>::infinity();
        return max_ + std::log(scaled_.value());
    }
};

}  // namespace hookstat
