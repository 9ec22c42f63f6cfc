#pragma once

// One-dimensional adaptive quadrature and golden-section search, used as
// independent oracles for the closed-form special-function routes.

#include <functional>

#include "fup/special.hpp"

namespace fup {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  /// Levels subdivided unconditionally before the error test applies, so a
  /// narrow peak cannot hide between the first five nodes.
  int min_depth = 4;
  int max_depth = 50;
};

using RealFunction = std::function<double(double)>;

/// Adaptive Simpson with Richardson correction on [a, b]. The result carries
/// converged = false if some panel hit max_depth before meeting its share of
/// the tolerance.
[[nodiscard]] QuadratureResult adaptive_simpson(const RealFunction& f, double a, double b,
                                                const QuadratureOptions& opt = {});

/// Integral over [a, inf) of an exponentially decaying f, through
/// t = a + v / (1 - v) on v in [0, 1).
[[nodiscard]] QuadratureResult integrate_exp_tail(const RealFunction& f, double a,
                                                  const QuadratureOptions& opt = {});

/// Integral over [a, inf), a > 0, of f with f(t) ~ coef * t^(-1-p). The map
/// t = a v^(-m/p), m = max(1, ceil(p)), turns the tail into an integrand on
/// (0, 1] that is smooth at v = 0, where it equals coef a^-p / p if m = 1
/// and 0 otherwise.
[[nodiscard]] QuadratureResult integrate_power_tail(const RealFunction& f, double a, double p,
                                                    double coef, const QuadratureOptions& opt = {});

/// Golden-section search for the maximizer of a unimodal function on
/// [lo, hi]. `prefer(x, y)` returns true when the function is larger at x
/// than at y; passing an exact comparison (for instance a log-ratio) lets the
/// search resolve the argmax well below sqrt(machine epsilon).
[[nodiscard]] double golden_section_argmax(const std::function<bool(double, double)>& prefer,
                                           double lo, double hi, double xtol);

/// Golden-section maximization of f by plain value comparison.
[[nodiscard]] ScalarMaximum golden_section_maximize(const RealFunction& f, double lo, double hi,
                                                    double xtol);

}  // namespace fup
