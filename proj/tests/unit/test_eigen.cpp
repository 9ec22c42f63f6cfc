#include <gtest/gtest.h>

#include <cmath>

#include "fup/eigen.hpp"
#include "fup/errors.hpp"
#include "fup/quadrature.hpp"
#include "fup/special.hpp"
#include "fup/summation.hpp"
#include "oracles.hpp"

namespace fup {
namespace {

CantorSpec disc(int n, double R) { return CantorSpec(n, R, Domain::Disc); }

TEST(Eigen, SmallExamples) {
  EXPECT_NEAR(eigenvalue(0, disc(0, 1.0), 0.5), 0.5, 1e-15);
  EXPECT_NEAR(eigenvalue(0, disc(1, 1.0), 0.5), 0.35, 1e-15);
}

TEST(Eigen, FrozenValues) {
  for (const auto& o : oracle::kDiscEigen) {
    EXPECT_NEAR(eigenvalue(o.k, disc(o.n, o.R), o.alpha), o.value, 1e-13 * o.value)
        << "n=" << o.n << " R=" << o.R << " alpha=" << o.alpha << " k=" << o.k;
  }
}

TEST(Eigen, ClosedFormAtDepthZero) {
  for (double alpha : {0.3, 0.5, 1.0, 2.0}) {
    for (double R : {0.1, 1.0, 7.0, 300.0}) {
      EXPECT_NEAR(eigenvalue(0, disc(0, R), alpha), 1.0 - std::pow(1.0 + R, -2.0 * alpha), 1e-14);
      for (long k : {0L, 1L, 4L, 12L}) {
        const double hyp = std::exp((k + 1) * std::log(R) - std::log(k + 1.0) -
                                    (std::lgamma(k + 1.0) + std::lgamma(2 * alpha) - std::lgamma(k + 1.0 + 2 * alpha))) *
                           gauss_2f1_neg(k + 1 + 2 * alpha, k + 1.0, k + 2.0, R);
        EXPECT_NEAR(eigenvalue_closed_form_n0(k, R, alpha), hyp, 1e-10) << alpha << " " << R << " " << k;
        EXPECT_NEAR(eigenvalue(k, disc(0, R), alpha), hyp, 1e-10);
      }
    }
  }
}

TEST(Eigen, BoundsAndPositivity) {
  for (int n : {0, 3, 7}) {
    for (double R : {0.2, 3.0, std::pow(3.0, n) * 5}) {
      for (double alpha : {0.5, 2.0}) {
        for (long k : {0L, 2L, 30L, 400L}) {
          const double lam = eigenvalue(k, disc(n, R), alpha);
          EXPECT_GT(lam, 0.0);
          EXPECT_LE(lam, 1.0);
          EXPECT_LE(lam, betaprime_cdf(R, BetaPrimeParams(k, alpha)) * (1 + 1e-14));
        }
      }
    }
  }
}

TEST(Eigen, MonotoneUnderNesting) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double R : {1.0, 20.0}) {
      for (long k : {0L, 5L, 60L}) {
        for (int n = 0; n < 9; ++n) {
          EXPECT_GE(eigenvalue(k, disc(n, R), alpha), eigenvalue(k, disc(n + 1, R), alpha) * (1 - 1e-14));
          // C_n(R) is contained in C_n(3R) for the middle-thirds construction.
          EXPECT_LE(eigenvalue(k, disc(n, R), alpha), eigenvalue(k, disc(n, 3 * R), alpha) * (1 + 1e-14));
        }
      }
    }
  }
}

TEST(Eigen, QuadratureAgreesWithCdfSum) {
  for (int n : {0, 2, 5, 8}) {
    for (double R : {0.5, std::pow(3.0, n / 2.0)}) {
      for (double alpha : {0.3, 1.0, 2.0}) {
        for (long k : {0L, 1L, 10L, 200L}) {
          const CantorSpec spec = disc(n, R);
          EXPECT_NEAR(eigenvalue_quadrature(k, spec, alpha, 1e-14), eigenvalue(k, spec, alpha), 1e-10)
              << n << " " << R << " " << alpha << " " << k;
        }
      }
    }
  }
  EXPECT_NEAR(eigenvalue_quadrature(3, disc(0, 2.0), 1.0, 1e-14), betaprime_cdf(2.0, BetaPrimeParams(3, 1.0)), 1e-12);
  EXPECT_THROW((void)eigenvalue_quadrature(0, disc(1, 1.0), 1.0, 0.0), DomainError);
}

TEST(Eigen, MonteCarloExamples) {
  const auto a = eigenvalue_montecarlo(0, disc(0, 1.0), 0.5, 1'000'000, 12345);
  EXPECT_NEAR(a.estimate, 0.5, 3 * a.std_error);
  EXPECT_EQ(a.samples, 1'000'000);
  const auto b = eigenvalue_montecarlo(0, disc(1, 1.0), 0.5, 1'000'000, 12345);
  EXPECT_NEAR(b.estimate, 0.35, 3 * b.std_error);
  // Dilating far past the bulk of the density captures essentially all mass.
  const auto c = eigenvalue_montecarlo(2, disc(1, 3.0 * 1e6), 1.0, 100'000, 5);
  EXPECT_GT(c.estimate, 0.999);
  EXPECT_THROW((void)eigenvalue_montecarlo(0, disc(0, 1.0), 0.5, 999, 1), DomainError);
}

TEST(Eigen, MonteCarloIsDeterministic) {
  const auto a = eigenvalue_montecarlo(4, disc(3, 5.0), 1.0, 20'000, 77);
  const auto b = eigenvalue_montecarlo(4, disc(3, 5.0), 1.0, 20'000, 77);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(Spectrum, FixedRange) {
  const Spectrum s = spectrum(disc(3, 2.0), 0.7, KMax{40});
  ASSERT_EQ(s.entries.size(), 41u);
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    EXPECT_EQ(s.entries[i].k, static_cast<std::int64_t>(i));
    EXPECT_EQ(s.entries[i].lambda, eigenvalue(s.entries[i].k, disc(3, 2.0), 0.7));
  }
  EXPECT_FALSE(s.stopping_k.has_value());
}

TEST(Spectrum, TruncationStopsAndDecreases) {
  const Spectrum s = spectrum(disc(0, 1.0), 1.0, TruncationTol{1e-10});
  ASSERT_TRUE(s.stopping_k.has_value());
  EXPECT_EQ(static_cast<std::int64_t>(s.entries.size()), *s.stopping_k + 1);
  for (std::size_t i = 1; i < s.entries.size(); ++i) EXPECT_LT(s.entries[i].lambda, s.entries[i - 1].lambda);
  double lmax = 0.0;
  for (const auto& e : s.entries) lmax = std::max(lmax, e.lambda);
  EXPECT_LT(betaprime_cdf(1.0, BetaPrimeParams(*s.stopping_k, 1.0)), 1e-10 * lmax);
}

TEST(Spectrum, TraceAtDepthZero) {
  // sum_k g_k(t) = 2 alpha for every t, since 1/B(k+1, b) = b C(k+b, k) and
  // sum_k C(k+b, k) x^k = (1-x)^-(b+1). The trace over [0, R] is 2 alpha R.
  for (double alpha : {0.5, 1.0, 1.5}) {
    const double R = 2.0;
    const Spectrum s = spectrum(disc(0, R), alpha, TruncationTol{1e-15});
    CompensatedSum trace;
    for (const auto& e : s.entries) trace += e.lambda;
    EXPECT_NEAR(trace.value(), 2.0 * alpha * R, 1e-9) << alpha;
  }
}

TEST(Spectrum, ThreadCountDoesNotChangeResults) {
  SpectrumOptions one;
  one.threads = 1;
  SpectrumOptions many;
  many.threads = 8;
  const Spectrum a = spectrum(disc(6, 30.0), 1.5, TruncationTol{1e-9}, one);
  const Spectrum b = spectrum(disc(6, 30.0), 1.5, TruncationTol{1e-9}, many);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  EXPECT_EQ(a.stopping_k, b.stopping_k);
  for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_EQ(a.entries[i].lambda, b.entries[i].lambda);

  one.method = many.method = Method::MonteCarlo;
  one.samples = many.samples = 20'000;
  const Spectrum c = spectrum(disc(2, 3.0), 1.0, KMax{12}, one);
  const Spectrum d = spectrum(disc(2, 3.0), 1.0, KMax{12}, many);
  for (std::size_t i = 0; i < c.entries.size(); ++i) EXPECT_EQ(c.entries[i].lambda, d.entries[i].lambda);
}

TEST(Spectrum, Errors) {
  EXPECT_THROW((void)spectrum(disc(1, 1.0), 1.0, KMax{kSpectrumCap + 1}), CapExceeded);
  EXPECT_THROW((void)spectrum(disc(1, 1.0), 1.0, KMax{-1}), DomainError);
  EXPECT_THROW((void)spectrum(disc(1, 1.0), 0.0, KMax{3}), DomainError);
  EXPECT_THROW((void)spectrum(CantorSpec(1, 1.0), 1.0, KMax{3}), DomainError);
  EXPECT_THROW((void)eigenvalue(-1, disc(1, 1.0), 1.0), DomainError);
}

TEST(Spectrum, MethodNames) {
  EXPECT_EQ(parse_method("cdfsum"), Method::CdfSum);
  EXPECT_EQ(parse_method("quadrature"), Method::Quadrature);
  EXPECT_EQ(parse_method("montecarlo"), Method::MonteCarlo);
  EXPECT_FALSE(parse_method("simpson").has_value());
  for (Method m : {Method::CdfSum, Method::Quadrature, Method::MonteCarlo}) EXPECT_EQ(parse_method(to_string(m)), m);
}

}  // namespace
}  // namespace fup
