#pragma once

// Special functions behind the eigenvalue formulas.
//
// The eigenvalue density g_k(t; alpha) is the Beta-prime density with shapes
// (k + 1, 2 alpha):
//
//   g_k(t) = B(k+1, 2a)^-1 (t / (1+t))^k (1+t)^-(1+2a),   t > 0,
//
// and its CDF is the regularized incomplete beta function evaluated at
// u = t / (1 + t). Everything is computed in log space; (t/(1+t))^k
// underflows long before k reaches the sizes the operator norm scans.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace fup {

// ---------------------------------------------------------------------------
// Gamma and Beta

/// Stirling remainder mu(x) in
///   Gamma(x) = sqrt(2 pi / x) (x / e)^x exp(mu(x)),   0 <= mu(x) <= 1/(12 x).
/// Series for x >= 8, upward recurrence below.
[[nodiscard]] double stirling_correction(double x);

/// ln Gamma(x) for x > 0 from Stirling's form plus the remainder mu(x).
[[nodiscard]] double ln_gamma(double x);

/// ln Gamma(x + b) - ln Gamma(x), without cancellation for large x.
[[nodiscard]] double ln_gamma_ratio(double x, double b);

[[nodiscard]] double ln_beta(double a, double b);

/// log(1 + d) - d, accurate near d = 0.
[[nodiscard]] double log1pmx(double d);

// ---------------------------------------------------------------------------
// Incomplete beta and gamma

/// Lower and upper regularized tails; the one produced by the continued
/// fraction carries full relative accuracy, the other is its complement.
struct TailPair {
  double lower;
  double upper;
};

/// I_x(a, b) for x in [0, 1], a, b > 0. Modified Lentz continued fraction
/// with the symmetry switch at x > (a + 1) / (a + b + 2).
[[nodiscard]] double reg_inc_beta(double x, double a, double b);

/// I_x(a,b) and 1 - I_x(a,b) with x and 1 - x supplied separately, plus
/// their logarithms, so callers holding t = x / (1 - x) lose no digits.
/// `ln_beta_ab` may carry a cached ln B(a, b); NaN means compute it.
[[nodiscard]] TailPair reg_inc_beta_tails(double x, double y, double log_x, double log_y, double a,
                                          double b, double ln_beta_ab = std::nan(""));

/// Regularized lower incomplete gamma P(s, t), s > 0, t >= 0.
[[nodiscard]] double reg_inc_gamma_lower(double s, double t);

/// P(s, t) and Q(s, t) = 1 - P(s, t).
[[nodiscard]] TailPair reg_inc_gamma_tails(double s, double t);

/// ln of t^s e^-t / Gamma(s), the common prefactor of P and Q.
[[nodiscard]] double ln_gamma_prefactor(double s, double t);

// ---------------------------------------------------------------------------
// Beta-prime distribution

/// Shape pair (k + 1, 2 alpha) of the eigenvalue density g_k.
class BetaPrimeParams {
 public:
  /// Throws DomainError unless k >= 0 and alpha is finite and > 0.
  BetaPrimeParams(std::int64_t k, double alpha);

  [[nodiscard]] std::int64_t k() const noexcept { return k_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double shape_a() const noexcept { return static_cast<double>(k_) + 1.0; }
  [[nodiscard]] double shape_b() const noexcept { return 2.0 * alpha_; }
  /// ln B(k + 1, 2 alpha), cached.
  [[nodiscard]] double ln_beta() const noexcept { return ln_beta_; }
  /// Mode of g_k: k / (1 + 2 alpha).
  [[nodiscard]] double mode() const noexcept { return static_cast<double>(k_) / (1.0 + 2.0 * alpha_); }

 private:
  std::int64_t k_;
  double alpha_;
  double ln_beta_;
};

/// ln g_k(t) for t >= 0 (returns -inf at t = 0 when k > 0).
[[nodiscard]] double betaprime_ln_pdf(double t, const BetaPrimeParams& p);

/// g_k(t; alpha); t > 0.
[[nodiscard]] double betaprime_pdf(double t, const BetaPrimeParams& p);

/// F_{k,alpha}(y) = I_{y/(1+y)}(k + 1, 2 alpha); y >= 0, y = +inf allowed.
[[nodiscard]] double betaprime_cdf(double y, const BetaPrimeParams& p);

/// 1 - F_{k,alpha}(y), computed directly in the upper tail.
[[nodiscard]] double betaprime_sf(double y, const BetaPrimeParams& p);

/// Both tails at y.
[[nodiscard]] TailPair betaprime_tails(double y, const BetaPrimeParams& p);

/// Integral of g_k over [lo, hi], differencing whichever tail is small there.
[[nodiscard]] double betaprime_mass(double lo, double hi, const BetaPrimeParams& p);

/// 2F1(a, b; c; -y) for y >= 0 through the Pfaff transformation
///   2F1(a, b; c; -y) = (1 + y)^-b 2F1(c - a, b; c; y / (1 + y)),
/// whose series converges on [0, 1). Throws ConvergenceError naming the
/// parameters if the series has not settled after 10^6 terms.
[[nodiscard]] double gauss_2f1_neg(double a, double b, double c, double y);

/// F_{k,alpha}(y) rebuilt from the hypergeometric closed form
///   y^(k+1) / ((k+1) B(k+1, 2a)) 2F1(k+1+2a, k+1; k+2; -y).
/// Cross-check oracle only.
[[nodiscard]] double betaprime_cdf_hypergeometric(double y, const BetaPrimeParams& p);

// ---------------------------------------------------------------------------
// Uniform density bound

/// For each k in [0, k_max]: sup over the grid of g_k(x) (1 + x).
[[nodiscard]] std::vector<double> density_bound_profile(double alpha, std::int64_t k_max,
                                                        std::span<const double> x_grid);

/// sup over k in [0, k_max] and the grid of g_k(x) (1 + x): an empirical
/// value for the constant C(alpha) in g_k(x) <= C (1 + x)^-1.
[[nodiscard]] double density_bound_constant(double alpha, std::int64_t k_max,
                                            std::span<const double> x_grid);

/// B(k+1, 2 alpha)^-1 / k^(2 alpha) for k >= 1; bounded in k.
[[nodiscard]] double inverse_beta_power_ratio(std::int64_t k, double alpha);

struct ScalarMaximum {
  double argmax;
  double maximum;
};

/// Maximum of t -> t^(2 alpha) y^t on [0, inf) for y in (0, 1):
/// t0 = 2 alpha / ln(1/y), value (2 alpha / ln(1/y))^(2 alpha) e^(-2 alpha).
[[nodiscard]] ScalarMaximum power_geometric_maximum(double alpha, double y);

}  // namespace fup
