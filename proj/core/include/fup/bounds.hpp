#pragma once

// Operator norms of the localization operators, the three-regime envelope
// they are compared against, and log-log scaling fits.
//
//   envelope(n, R) = (2/3)^n R             for R <= 1
//                    (2/3)^n R^(1 - d)     for 1 <= R <= 3^n
//                    1                     for R >= 3^n
//
// with d = ln 2 / ln 3 the dimension of the middle-thirds Cantor set.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fup/cantor.hpp"

namespace fup {

inline constexpr double kCantorDimension = 0.63092975357145743710;  // ln 2 / ln 3

enum class Regime { SmallR, MidR, LargeR };

[[nodiscard]] std::string_view to_string(Regime r) noexcept;

struct EnvelopeValue {
  int n;
  double R;
  Regime regime;
  double value;
};

/// Envelope case value. At the breakpoints R = 1 and R = 3^n the lower
/// regime is reported.
[[nodiscard]] EnvelopeValue envelope(int n, double R);

/// One branch formula evaluated regardless of which regime R falls in.
[[nodiscard]] double envelope_branch(Regime regime, int n, double R);

struct OperatorNorm {
  double norm = 0.0;
  std::int64_t argmax_k = 0;
  double lambda0 = 0.0;
  /// Every k <= k_scanned was either evaluated or bounded below the max.
  std::int64_t k_scanned = 0;
  /// Beyond this index the eigenvalues are nonincreasing in k.
  std::int64_t monotone_cutoff = 0;
  /// Present when the truncation majorant stopped the scan first.
  std::optional<std::int64_t> truncated_at;
  std::int64_t exact_evaluations = 0;
};

inline constexpr double kDefaultNormTol = 1e-12;

/// sup_k lambda_k for a Disc spec.
///
/// The density ratio g_{k+1} / g_k = u (k + 1 + 2a) / (k + 1) with
/// u = t / (1 + t) is at most 1 on [0, R] once k + 1 >= 2 a R, so lambda_k
/// is nonincreasing from k0 = ceil(2 a R) - 1 on and the supremum is a max
/// over k <= k0. The scan additionally stops once F_k(R) < tol * max, and
/// skips k whose density bound over the Cantor set is already below the
/// running max.
[[nodiscard]] OperatorNorm operator_norm(const CantorSpec& spec, double alpha,
                                         double tol = kDefaultNormTol);

// ---------------------------------------------------------------------------
// Grids

/// R = coef * 3^(exponent * n).
struct RadiusRule {
  double coef = 1.0;
  double exponent = 0.0;

  [[nodiscard]] double at(int n) const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const RadiusRule&, const RadiusRule&) = default;
};

/// Parses "0.25", "3^n", "10*3^n", "3^(n/2)", "2*3^(0.25*n)" and the like.
[[nodiscard]] std::optional<RadiusRule> parse_radius_rule(std::string_view text);

/// {0.25, 1, 3^(n/2), 3^n, 10 * 3^n}: every regime is represented.
[[nodiscard]] std::vector<RadiusRule> default_radius_grid();

// ---------------------------------------------------------------------------
// Sandwich

struct SandwichPoint {
  int n;
  double R;
  double alpha;
  Regime regime;
  double norm;
  std::int64_t argmax_k;
  double lambda0;
  double envelope;
  double ratio;          // norm / envelope
  double lambda0_ratio;  // lambda_0 / envelope
};

struct SandwichReport {
  double alpha;
  std::vector<SandwichPoint> points;  // ordered by (n, grid position)
  double min_ratio;                   // empirical lower constant
  double max_ratio;                   // empirical upper constant
  double min_lambda0_ratio;
  double max_lambda0_ratio;

  /// 0 < min ratio <= max ratio < inf, and the same for lambda_0.
  [[nodiscard]] bool bounded() const noexcept;
};

[[nodiscard]] SandwichReport verify_sandwich(double alpha, int n_lo, int n_hi,
                                             std::span<const RadiusRule> grid, unsigned threads = 0,
                                             double tol = kDefaultNormTol);

// ---------------------------------------------------------------------------
// Scaling

struct LinearFit {
  double slope;
  double intercept;
  double max_residual;
};

/// Ordinary least squares y = slope x + intercept; needs at least 4 points.
[[nodiscard]] LinearFit least_squares(std::span<const double> x, std::span<const double> y);

struct ScalingPoint {
  int n;
  double R;
  double ln_R;
  double ln_value;
  std::int64_t argmax_k;
};

struct ScalingFit {
  std::string quantity;
  double alpha;  // 0 where alpha does not enter
  std::vector<ScalingPoint> points;
  double slope;
  double intercept;
  double max_residual;
  double target_slope;
};

/// ln of the norm against ln R along R = 3^(n/2), n in [n_lo, n_hi] within
/// [4, 14]. Target slope d - 1.
[[nodiscard]] ScalingFit scaling_fit(double alpha, int n_lo, int n_hi, unsigned threads = 0,
                                     double tol = kDefaultNormTol);

/// Length (2/3)^n R of C_n(R).
[[nodiscard]] double fourier_volume(int n, double R);

/// ln fourier_volume against ln R along R = 3^(n/2). Target slope 2d - 1.
[[nodiscard]] ScalingFit fourier_volume_scaling(int n_lo, int n_hi);

}  // namespace fup
