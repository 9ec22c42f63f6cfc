#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fup/errors.hpp"
#include "fup/quadrature.hpp"

namespace fup {
namespace {

TEST(Quadrature, PolynomialsAreExact) {
  const auto r = adaptive_simpson([](double x) { return 3 * x * x * x - x + 2; }, -1.0, 2.0);
  EXPECT_NEAR(r.value, 3.0 * 15.0 / 4.0 - 1.5 + 6.0, 1e-13);
  EXPECT_TRUE(r.converged);
}

TEST(Quadrature, SmoothIntegrals) {
  EXPECT_NEAR(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value, 2.0, 1e-12);
  EXPECT_NEAR(adaptive_simpson([](double x) { return std::exp(-x * x); }, -6.0, 6.0).value,
              std::sqrt(std::numbers::pi), 1e-12);
}

TEST(Quadrature, EmptyAndReversedRanges) {
  EXPECT_EQ(adaptive_simpson([](double) { return 1.0; }, 2.0, 2.0).value, 0.0);
  EXPECT_NEAR(adaptive_simpson([](double x) { return x; }, 1.0, 0.0).value, -0.5, 1e-15);
}

TEST(Quadrature, ReportsNonConvergence) {
  QuadratureOptions opt;
  opt.max_depth = 6;
  opt.abs_tol = 1e-15;
  const auto r = adaptive_simpson([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, opt);
  EXPECT_FALSE(r.converged);
}

TEST(Quadrature, ExponentialTail) {
  const auto r = integrate_exp_tail([](double x) { return std::exp(-2.0 * x) * x; }, 0.0);
  EXPECT_NEAR(r.value, 0.25, 1e-11);
  const auto g = integrate_exp_tail([](double x) { return std::pow(x, 1.5) * std::exp(-x); }, 0.0);
  EXPECT_NEAR(g.value, std::tgamma(2.5), 1e-10);
}

TEST(Quadrature, PowerTail) {
  // Integral of (1+x)^-3 from 1 to infinity is 1/8.
  const auto r = integrate_power_tail([](double x) { return std::pow(1.0 + x, -3.0); }, 1.0, 2.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 0.125, 1e-11);
  for (double p : {0.3, 0.6, 1.0, 1.7, 4.0, 7.3}) {
    // Integral of (1+x)^(-1-p) from 1 to infinity is 2^-p / p.
    const auto q = integrate_power_tail([p](double x) { return std::pow(1.0 + x, -1.0 - p); }, 1.0, p, 1.0);
    EXPECT_TRUE(q.converged) << p;
    EXPECT_NEAR(q.value, std::pow(2.0, -p) / p, 1e-11) << p;
  }
  EXPECT_THROW((void)integrate_power_tail([](double) { return 0.0; }, 0.0, 2.0, 1.0), DomainError);
}

TEST(GoldenSection, LocatesInteriorMaximum) {
  const auto m = golden_section_maximize([](double x) { return -(x - 1.234567) * (x - 1.234567); }, -3.0, 5.0, 1e-10);
  EXPECT_NEAR(m.argmax, 1.234567, 1e-8);
  EXPECT_NEAR(m.maximum, 0.0, 1e-15);
  const double a = golden_section_argmax([](double x, double y) { return std::log(x) - x > std::log(y) - y; }, 0.01, 9.0, 1e-9);
  EXPECT_NEAR(a, 1.0, 1e-6);
}

}  // namespace
}  // namespace fup
