#pragma once

#ifdef __FAST_MATH__
#error "fast-math reassociation defeats compensated summation"
#endif

namespace fup {

/// Running sum with an error-free transformation (Knuth's TwoSum) per
/// addition. The rounding error of every partial sum is accumulated
/// separately and folded back in value().
class CompensatedSum {
 public:
  constexpr CompensatedSum() noexcept = default;
  constexpr explicit CompensatedSum(double initial) noexcept : sum_(initial) {}

  constexpr void add(double x) noexcept {
    const double s = sum_ + x;
    const double bp = s - sum_;
    const double err = (sum_ - (s - bp)) + (x - bp);
    sum_ = s;
    correction_ += err;
  }

  constexpr CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  constexpr CompensatedSum& operator+=(const CompensatedSum& other) noexcept {
    add(other.sum_);
    correction_ += other.correction_;
    return *this;
  }

  [[nodiscard]] constexpr double value() const noexcept { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace fup
