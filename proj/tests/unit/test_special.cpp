#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "fup/errors.hpp"
#include "fup/quadrature.hpp"
#include "fup/special.hpp"
#include "oracles.hpp"

namespace fup {
namespace {

TEST(LnGamma, Examples) {
  EXPECT_EQ(ln_gamma(1.0), 0.0);
  EXPECT_NEAR(ln_gamma(2.0), 0.0, 1e-15);
  EXPECT_NEAR(ln_gamma(5.0), std::log(24.0), 1e-14);
  EXPECT_NEAR(ln_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-14 * 0.5724);
}

TEST(LnGamma, FrozenValues) {
  for (const auto& o : oracle::kLnGamma) {
    EXPECT_NEAR(ln_gamma(o.x), o.value, 1e-14 * std::max(1.0, std::fabs(o.value))) << "x=" << o.x;
  }
  for (const auto& o : oracle::kGamma) {
    EXPECT_NEAR(std::exp(ln_gamma(o.x)), o.value, 1e-13 * o.value) << "x=" << o.x;
  }
}

TEST(LnGamma, DomainErrors) {
  EXPECT_THROW((void)ln_gamma(0.0), DomainError);
  EXPECT_THROW((void)ln_gamma(-2.5), DomainError);
  EXPECT_THROW((void)ln_gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(LnGamma, StirlingRemainderBounds) {
  for (double x : {0.3, 1.0, 2.5, 7.99, 8.0, 20.0, 1e3, 1e8}) {
    const double mu = stirling_correction(x);
    EXPECT_GT(mu, 0.0) << x;
    EXPECT_LE(mu, 1.0 / (12.0 * x)) << x;
  }
  const std::pair<double, double> reference[] = {
      {0.3, 0.23606490074821558839},     {2.5, 0.033162873519936287485},
      {9.0, 0.0092554621827127329177},   {40.0, 0.0020832899383024217487},
      {300.0, 0.00027777767489744594411},
  };
  for (const auto& [x, mu] : reference) EXPECT_NEAR(stirling_correction(x), mu, 1e-14 * mu) << x;
}

TEST(LnGamma, RatioWithoutCancellation) {
  EXPECT_NEAR(ln_gamma_ratio(5.0, 2.0), std::log(30.0), 1e-14);
  EXPECT_NEAR(ln_gamma_ratio(1e15, 0.5), 0.5 * std::log(1e15), 1e-12);
  for (double x : {0.7, 3.0, 50.5, 1e4}) {
    for (double b : {0.2, 1.0, 4.4}) {
      EXPECT_NEAR(ln_gamma_ratio(x, b), std::lgamma(x + b) - std::lgamma(x),
                  1e-13 * std::max(1.0, std::lgamma(x + b)));
    }
  }
}

TEST(Log1pmx, SmallAndLarge) {
  const double d = 1e-5;
  EXPECT_NEAR(log1pmx(d), -d * d / 2 + d * d * d / 3 - d * d * d * d / 4, 1e-25);
  EXPECT_NEAR(log1pmx(1.0), std::log(2.0) - 1.0, 1e-16);
  EXPECT_NEAR(log1pmx(-0.5), std::log(0.5) + 0.5, 1e-16);
  EXPECT_EQ(log1pmx(0.0), 0.0);
}

// Oracle: I_x(a, b) by adaptive quadrature of the beta density. For a < 1 the
// substitution x = s^(1/a) removes the endpoint singularity; for x > 1/2 the
// integral runs over the short side.
double inc_beta_quadrature(double x, double a, double b) {
  const bool flip = x > 0.5;
  const double X = flip ? 1.0 - x : x;
  const double p = flip ? b : a;
  const double q = flip ? a : b;
  const double ln_b = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  QuadratureOptions opt;
  opt.abs_tol = 1e-15;
  double integral = 0.0;
  if (p < 1.0) {
    const RealFunction f = [p, q, ln_b](double s) {
      const double u = std::pow(s, 1.0 / p);
      return std::exp((q - 1.0) * std::log1p(-u) - ln_b) / p;
    };
    integral = adaptive_simpson(f, 0.0, std::pow(X, p), opt).value;
  } else {
    const RealFunction f = [p, q, ln_b](double u) {
      if (u == 0.0) return p == 1.0 ? std::exp(-ln_b) : 0.0;
      return std::exp((p - 1.0) * std::log(u) + (q - 1.0) * std::log1p(-u) - ln_b);
    };
    integral = adaptive_simpson(f, 0.0, X, opt).value;
  }
  return flip ? 1.0 - integral : integral;
}

TEST(IncBeta, Endpoints) {
  for (double a : {0.2, 1.0, 7.5}) {
    for (double b : {0.3, 2.0, 40.0}) {
      EXPECT_EQ(reg_inc_beta(0.0, a, b), 0.0);
      EXPECT_EQ(reg_inc_beta(1.0, a, b), 1.0);
    }
  }
}

TEST(IncBeta, FirstShapeOneClosedForm) {
  for (double b : {0.25, 1.0, 3.3, 60.0}) {
    for (double x : {1e-9, 0.1, 0.5, 0.93}) {
      EXPECT_NEAR(reg_inc_beta(x, 1.0, b), -std::expm1(b * std::log1p(-x)), 1e-15) << b << " " << x;
    }
  }
}

TEST(IncBeta, Reflection) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> shape(0.2, 50.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double a = shape(rng), b = shape(rng), x = unit(rng);
    EXPECT_NEAR(reg_inc_beta(x, a, b) + reg_inc_beta(1.0 - x, b, a), 1.0, 1e-14);
  }
}

TEST(IncBeta, FrozenValues) {
  for (const auto& o : oracle::kIncBeta) {
    const double v = reg_inc_beta(o.x, o.a, o.b);
    EXPECT_NEAR(v, o.value, 1e-13) << o.x << " " << o.a << " " << o.b;
    EXPECT_NEAR(v, o.value, 1e-13 * o.value) << o.x << " " << o.a << " " << o.b;
  }
}

TEST(IncBeta, AgreesWithQuadratureOnRandomGrid) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> shape(0.2, 50.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double a = shape(rng), b = shape(rng), x = unit(rng);
    EXPECT_NEAR(reg_inc_beta(x, a, b), inc_beta_quadrature(x, a, b), 1e-11)
        << "x=" << x << " a=" << a << " b=" << b;
  }
}

TEST(IncBeta, DomainErrors) {
  EXPECT_THROW((void)reg_inc_beta(-0.1, 1.0, 1.0), DomainError);
  EXPECT_THROW((void)reg_inc_beta(1.1, 1.0, 1.0), DomainError);
  EXPECT_THROW((void)reg_inc_beta(0.5, 0.0, 1.0), DomainError);
  EXPECT_THROW((void)reg_inc_beta(0.5, 1.0, -1.0), DomainError);
}

TEST(BetaPrime, ParamsValidation) {
  EXPECT_THROW(BetaPrimeParams(-1, 1.0), DomainError);
  EXPECT_THROW(BetaPrimeParams(0, 0.0), DomainError);
  const BetaPrimeParams p(4, 0.75);
  EXPECT_EQ(p.shape_a(), 5.0);
  EXPECT_EQ(p.shape_b(), 1.5);
  EXPECT_NEAR(p.ln_beta(), std::lgamma(5.0) + std::lgamma(1.5) - std::lgamma(6.5), 1e-14);
}

TEST(BetaPrime, DensityExamples) {
  EXPECT_NEAR(betaprime_pdf(1.0, BetaPrimeParams(0, 0.5)), 0.25, 1e-16);
  for (double alpha : {0.3, 1.0, 2.0}) {
    const BetaPrimeParams p(0, alpha);
    EXPECT_NEAR(betaprime_pdf(1e-12, p), 2.0 * alpha, 1e-10);
    EXPECT_NEAR(std::exp(betaprime_ln_pdf(0.0, p)), 2.0 * alpha, 1e-14);
  }
  EXPECT_THROW((void)betaprime_pdf(0.0, BetaPrimeParams(0, 1.0)), DomainError);
  EXPECT_THROW((void)betaprime_pdf(-1.0, BetaPrimeParams(0, 1.0)), DomainError);
}

TEST(BetaPrime, DensityIsLogSpaceForLargeK) {
  const BetaPrimeParams p(100000, 1.0);
  const double t = p.mode();
  EXPECT_GT(betaprime_pdf(t, p), 0.0);
  EXPECT_TRUE(std::isfinite(betaprime_ln_pdf(t, p)));
}

TEST(BetaPrime, CdfExamples) {
  EXPECT_NEAR(betaprime_cdf(1.0, BetaPrimeParams(0, 0.5)), 0.5, 1e-16);
  for (double alpha : {0.3, 1.0, 2.0}) {
    for (double y : {0.01, 1.0, 17.0}) {
      EXPECT_NEAR(betaprime_cdf(y, BetaPrimeParams(0, alpha)), 1.0 - std::pow(1.0 + y, -2.0 * alpha), 1e-15);
    }
  }
  for (long k : {0L, 5L, 50L}) EXPECT_NEAR(betaprime_cdf(1e14, BetaPrimeParams(k, 1.0)), 1.0, 1e-10);
  EXPECT_EQ(betaprime_cdf(0.0, BetaPrimeParams(3, 1.0)), 0.0);
}

TEST(BetaPrime, FrozenValues) {
  for (const auto& o : oracle::kBetaPrime) {
    const BetaPrimeParams p(o.k, o.alpha);
    // The log-space prefactor has magnitude ~k, which bounds the relative
    // accuracy near k * eps; the absolute contract is 1e-13.
    EXPECT_NEAR(betaprime_cdf(o.y, p), o.cdf, 1e-13) << o.k << " " << o.alpha << " " << o.y;
    EXPECT_NEAR(betaprime_sf(o.y, p), o.sf, 1e-13);
    EXPECT_NEAR(betaprime_cdf(o.y, p), o.cdf, 1e-12 * o.cdf);
    EXPECT_NEAR(betaprime_sf(o.y, p), o.sf, 1e-12 * o.sf);
    const TailPair t = betaprime_tails(o.y, p);
    EXPECT_NEAR(t.lower + t.upper, 1.0, 1e-15);
  }
  EXPECT_NEAR(betaprime_cdf(1e-8, BetaPrimeParams(0, 0.3)), oracle::kBetaPrimeSmallCdf,
              1e-14 * oracle::kBetaPrimeSmallCdf);
  EXPECT_NEAR(betaprime_cdf(10.0, BetaPrimeParams(5000, 1.0)), oracle::kBetaPrimeDeepCdf,
              1e-11 * oracle::kBetaPrimeDeepCdf);
}

TEST(BetaPrime, TripleAgreementAtUnit) {
  const BetaPrimeParams p(1, 1.0);
  const double cdf = betaprime_cdf(1.0, p);
  const double hyp = betaprime_cdf_hypergeometric(1.0, p);
  QuadratureOptions opt;
  opt.abs_tol = 1e-14;
  const double quad = adaptive_simpson([&p](double t) { return std::exp(betaprime_ln_pdf(t, p)); }, 0.0, 1.0, opt).value;
  // g_1 = 6 t (1+t)^-4 for alpha = 1, so F(1) = 1/2 exactly.
  EXPECT_NEAR(cdf, 0.5, 1e-15);
  EXPECT_NEAR(hyp, cdf, 1e-10);
  EXPECT_NEAR(quad, cdf, 1e-10);
}

TEST(BetaPrime, MassMatchesQuadratureOnRandomGrid) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> kdist(0, 200);
  std::uniform_real_distribution<double> adist(0.3, 2.0);
  std::uniform_real_distribution<double> ydist(0.0, 50.0);
  QuadratureOptions opt;
  opt.abs_tol = 1e-13;
  for (int i = 0; i < 60; ++i) {
    const BetaPrimeParams p(kdist(rng), adist(rng));
    double x = ydist(rng), y = ydist(rng);
    if (x > y) std::swap(x, y);
    const double quad = adaptive_simpson([&p](double t) { return std::exp(betaprime_ln_pdf(t, p)); }, x, y, opt).value;
    EXPECT_NEAR(betaprime_cdf(y, p) - betaprime_cdf(x, p), quad, 1e-10) << p.k() << " " << p.alpha() << " " << x << " " << y;
    EXPECT_NEAR(betaprime_mass(x, y, p), quad, 1e-10);
  }
}

TEST(Hypergeometric, ZeroArgument) {
  EXPECT_EQ(gauss_2f1_neg(2.0, 3.0, 4.0, 0.0), 1.0);
  EXPECT_EQ(gauss_2f1_neg(0.1, 30.0, 0.7, 0.0), 1.0);
}

TEST(Hypergeometric, FrozenValues) {
  for (const auto& o : oracle::kHyp2F1) {
    EXPECT_NEAR(gauss_2f1_neg(o.a, o.b, o.c, o.y), o.value, 1e-12 * o.value) << o.a << " " << o.b << " " << o.y;
  }
}

TEST(Hypergeometric, RoutesAgree) {
  for (long k = 0; k <= 20; ++k) {
    for (double alpha : {0.3, 1.0, 2.0}) {
      const BetaPrimeParams p(k, alpha);
      for (double y : {0.0, 0.01, 0.5, 1.0, 3.0, 10.0, 37.0, 100.0}) {
        EXPECT_NEAR(betaprime_cdf_hypergeometric(y, p), betaprime_cdf(y, p), 1e-10) << k << " " << alpha << " " << y;
      }
    }
  }
}

TEST(Hypergeometric, ReportsNonConvergence) {
  EXPECT_THROW((void)gauss_2f1_neg(2.0, 500.0, 1.5, 1e9), ConvergenceError);
}

TEST(IncGamma, Examples) {
  for (double t : {0.0, 1e-6, 0.3, 2.0, 30.0}) EXPECT_NEAR(reg_inc_gamma_lower(1.0, t), -std::expm1(-t), 1e-15);
  for (double s : {0.2, 1.0, 40.0}) EXPECT_EQ(reg_inc_gamma_lower(s, 0.0), 0.0);
  EXPECT_NEAR(reg_inc_gamma_lower(3.0, 2.0), 1.0 - std::exp(-2.0) * 5.0, 1e-15);
}

TEST(IncGamma, FrozenValues) {
  for (const auto& o : oracle::kIncGamma) {
    const TailPair t = reg_inc_gamma_tails(o.s, o.t);
    if (o.lower >= 0.0) EXPECT_NEAR(t.lower, o.lower, 1e-12 * o.lower) << o.s << " " << o.t;
    if (o.upper >= 0.0) EXPECT_NEAR(t.upper, o.upper, 1e-12 * o.upper) << o.s << " " << o.t;
    EXPECT_NEAR(t.lower + t.upper, 1.0, 1e-15);
  }
  EXPECT_THROW((void)reg_inc_gamma_lower(0.0, 1.0), DomainError);
  EXPECT_THROW((void)reg_inc_gamma_lower(1.0, -1.0), DomainError);
}

TEST(DensityBound, ZeroIndexValue) {
  const std::vector<double> grid = {0.0, 0.5, 3.0, 100.0};
  for (double alpha : {0.3, 1.0, 2.0}) {
    EXPECT_NEAR(density_bound_constant(alpha, 0, grid), 2.0 * alpha, 1e-15);
  }
}

TEST(DensityBound, ProfileIsFiniteAndStabilizes) {
  std::vector<double> grid;
  for (int i = 0; i <= 4000; ++i) grid.push_back(std::expm1(i * std::log1p(1e4) / 4000.0));
  const auto prof = density_bound_profile(1.0, 2000, grid);
  ASSERT_EQ(prof.size(), 2001u);
  double early = 0.0, late = 0.0;
  for (std::size_t k = 0; k < prof.size(); ++k) {
    ASSERT_TRUE(std::isfinite(prof[k]) && prof[k] > 0.0) << k;
    (k <= 1000 ? early : late) = std::max(k <= 1000 ? early : late, prof[k]);
  }
  EXPECT_LE(late, early);
}

TEST(DensityBound, InverseBetaPowerRatioStable) {
  for (double alpha : {0.3, 1.0, 2.0}) {
    // Gamma(k+1+2a) / (Gamma(k+1) k^(2a)) = 1 + a(2a+1)/k + O(1/k^2), so the
    // ratio tends to 1/Gamma(2a) with the gap shrinking like 1/k.
    const double limit = 1.0 / std::tgamma(2.0 * alpha);
    double prev_gap = INFINITY;
    for (long k : {10L, 100L, 1000L, 10000L, 100000L, 1000000L}) {
      const double r = inverse_beta_power_ratio(k, alpha);
      const double gap = std::fabs(r - limit);
      EXPECT_LT(gap, prev_gap) << alpha << " " << k;
      EXPECT_NEAR(gap / limit, alpha * (2 * alpha + 1) / k, 2.0 * alpha * alpha * (2 * alpha + 1) * (2 * alpha + 1) / (double(k) * k))
          << alpha << " " << k;
      prev_gap = gap;
    }
  }
}

TEST(DensityBound, PowerGeometricMaximum) {
  for (double alpha : {0.3, 1.0, 2.0}) {
    for (double y : {0.1, 0.5, 0.9, 0.99}) {
      const ScalarMaximum m = power_geometric_maximum(alpha, y);
      const double t0 = 2.0 * alpha / (-std::log(y));
      EXPECT_NEAR(m.argmax, t0, 1e-14 * t0);
      EXPECT_NEAR(m.maximum, std::pow(t0, 2.0 * alpha) * std::exp(-2.0 * alpha), 1e-14 * m.maximum);
      // Sign of ln f(a) - ln f(b) = (a - b) (2 alpha log1p(d / b) / d + ln y).
      const auto prefer = [&](double a, double b) {
        const double d = a - b;
        return d != 0.0 && d * (2.0 * alpha * std::log1p(d / b) / d + std::log(y)) > 0.0;
      };
      const double found = golden_section_argmax(prefer, 1e-9, 20.0 * t0, 1e-9);
      EXPECT_NEAR(found, t0, 1e-6);
    }
  }
}

}  // namespace
}  // namespace fup
