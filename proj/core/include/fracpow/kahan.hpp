#pragma once

namespace fracpow {

/// Kahan compensated accumulator. Summation order is whatever the caller
/// feeds; combined with a fixed term order this makes results bit-reproducible
/// across runs and worker counts.
class KahanAccumulator {
public:
    void add(double value) {
        const double y = value - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }

    double sum() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace fracpow
