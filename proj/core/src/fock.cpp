#include "fup/fock.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fup/errors.hpp"
#include "fup/parallel.hpp"
#include "fup/quadrature.hpp"
#include "norm_search.hpp"

namespace fup {

namespace {

CantorSpec plane_line(int n, double R) {
  const CantorSpec spec(n, R, Domain::Plane);
  if (n > kMaxStreamDepth) throw DepthExceeded("Cantor depth exceeds the streaming cap");
  return spec.line();
}

ScalingFit fit_points(std::string quantity, std::vector<ScalingPoint> points, double target) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const ScalingPoint& p : points) {
    xs.push_back(p.ln_R);
    ys.push_back(p.ln_value);
  }
  const LinearFit fit = least_squares(xs, ys);
  return {std::move(quantity), 0.0, std::move(points), fit.slope, fit.intercept, fit.max_residual,
          target};
}

}  // namespace

double fock_eigenvalue(std::int64_t k, int n, double R) {
  if (k < 0) throw DomainError("eigenvalue index k must be non-negative");
  const CantorSpec line = plane_line(n, R);
  const detail::GammaProfile profile{std::numbers::pi};
  return std::clamp(detail::cantor_mass(profile.at(k), line), 0.0, 1.0);
}

double fock_eigenvalue_quadrature(std::int64_t k, int n, double R, double tol) {
  if (k < 0) throw DomainError("eigenvalue index k must be non-negative");
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const CantorSpec line = plane_line(n, R);
  const detail::GammaEval ev = detail::GammaProfile{std::numbers::pi}.at(k);
  const RealFunction density = [&ev](double s) { return std::exp(ev.ln_pdf(s)); };
  QuadratureOptions opt;
  opt.abs_tol = tol;
  CompensatedSum total;
  for (const Interval& iv : IntervalRange(line)) {
    const QuadratureResult r = adaptive_simpson(density, iv.lo, iv.hi, opt);
    if (!r.converged) throw ConvergenceError("Fock eigenvalue quadrature did not converge");
    total += r.value;
  }
  return total.value();
}

OperatorNorm fock_norm(int n, double R, double tol) {
  if (!(tol >= 0.0) || !(tol < 1.0)) throw DomainError("truncation tolerance must lie in [0, 1)");
  return detail::search_supremum(detail::GammaProfile{std::numbers::pi}, plane_line(n, R), tol);
}

double fock_critical_radius(int n) {
  if (n < 0) throw DomainError("n must be non-negative");
  return std::sqrt(std::pow(3.0, 0.5 * n) / std::numbers::pi);
}

ScalingFit fock_norm_scaling(int n_lo, int n_hi, unsigned threads, double tol) {
  if (n_lo < 4 || n_hi > 16 || n_hi < n_lo) throw DomainError("n range must lie within [4, 16]");
  const auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<ScalingPoint> points(count);
  parallel_for(count, threads, [&](std::size_t i) {
    const int n = n_lo + static_cast<int>(i);
    const double R = fock_critical_radius(n);
    const OperatorNorm norm = fock_norm(n, R, tol);
    points[i] = {n, R, std::log(R), std::log(norm.norm), norm.argmax_k};
  });
  return fit_points("fock_norm", std::move(points), -2.0 + 2.0 * kCantorDimension);
}

double planar_volume(int n, double R) {
  if (n < 0) throw DomainError("n must be non-negative");
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("R must be finite and positive");
  return std::numbers::pi * R * R * fourier_volume(n, 1.0);
}

ScalingFit planar_volume_scaling(int n_lo, int n_hi) {
  if (n_lo < 0 || n_hi < n_lo) throw DomainError("n range must satisfy 0 <= n_lo <= n_hi");
  std::vector<ScalingPoint> points;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double R = fock_critical_radius(n);
    points.push_back({n, R, std::log(R), std::log(planar_volume(n, R)), 0});
  }
  return fit_points("planar_volume", std::move(points), -2.0 + 4.0 * kCantorDimension);
}

}  // namespace fup
