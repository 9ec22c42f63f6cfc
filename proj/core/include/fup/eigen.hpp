#pragma once

// Eigenvalues of the Bergman-space localization operator on a disc Cantor
// set. The operator is diagonal in the monomial basis and
//
//   lambda_k = integral over C_n(R) of g_k(t; alpha) dt
//            = sum over the 2^n line intervals of F(hi) - F(lo),
//
// with F the Beta-prime(k + 1, 2 alpha) CDF. Quadrature and Monte Carlo
// routes are provided as independent checks.

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fup/cantor.hpp"

namespace fup {

enum class Method { CdfSum, Quadrature, MonteCarlo };

[[nodiscard]] std::string_view to_string(Method m) noexcept;
/// Accepts "cdf", "cdfsum", "quadrature", "quad", "montecarlo", "mc".
[[nodiscard]] std::optional<Method> parse_method(std::string_view text) noexcept;

inline constexpr std::int64_t kSpectrumCap = 10'000'000;

/// lambda_k of a Disc spec by CDF differences with compensated summation.
[[nodiscard]] double eigenvalue(std::int64_t k, const CantorSpec& spec, double alpha);

/// lambda_k(C_0(R)) from the hypergeometric closed form
///   R^(k+1) / ((k+1) B(k+1, 2a)) 2F1(k+1+2a, k+1; k+2; -R).
[[nodiscard]] double eigenvalue_closed_form_n0(std::int64_t k, double R, double alpha);

/// lambda_k by adaptive Simpson over each interval with absolute tolerance
/// `tol` per interval. Throws ConvergenceError if a panel fails to settle.
[[nodiscard]] double eigenvalue_quadrature(std::int64_t k, const CantorSpec& spec, double alpha,
                                           double tol);

struct MonteCarloEstimate {
  double estimate;
  double std_error;
  std::int64_t samples;
};

/// Fraction of X ~ Beta-prime(k+1, 2a) samples landing in C_n(R), with
/// X = G1 / G2 for independent Gamma(k+1) and Gamma(2a) variates.
/// Needs samples >= 1000; deterministic for a given seed.
[[nodiscard]] MonteCarloEstimate eigenvalue_montecarlo(std::int64_t k, const CantorSpec& spec,
                                                       double alpha, std::int64_t samples,
                                                       std::uint64_t seed);

struct KMax {
  std::int64_t value;
};
struct TruncationTol {
  double value;
};
using SpectrumLimit = std::variant<KMax, TruncationTol>;

struct SpectrumEntry {
  std::int64_t k;
  double lambda;
};

struct SpectrumOptions {
  Method method = Method::CdfSum;
  unsigned threads = 0;
  double quadrature_tol = 1e-13;
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 12345;
};

struct Spectrum {
  double alpha;
  CantorSpec spec;
  Method method;
  std::vector<SpectrumEntry> entries;
  /// Largest k computed (the requested k_max, or the stopping k).
  std::int64_t k_max;
  /// Truncation tolerance, or 0 when k_max was given.
  double truncation_tol;
  /// Present when the truncation rule fired.
  std::optional<std::int64_t> stopping_k;
};

/// Number of consecutive k whose tail majorant F_k(R) must fall below
/// tol * max(lambda) before the truncated spectrum stops.
inline constexpr int kTruncationRun = 10;

/// Eigenvalues for k = 0..k_max, or for increasing k until the majorant
/// F_k(R) >= lambda_k stays below tol * (running max) for kTruncationRun
/// consecutive k. Distinct k run in parallel; results are ordered by k.
/// Throws CapExceeded beyond k = 10^7.
[[nodiscard]] Spectrum spectrum(const CantorSpec& spec, double alpha, SpectrumLimit limit,
                                const SpectrumOptions& options = {});

}  // namespace fup
