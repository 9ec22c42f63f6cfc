#include "fup/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fup/errors.hpp"
#include "fup/quadrature.hpp"
#include "fup/special.hpp"

namespace fup {

namespace {

constexpr complex kI{0.0, 1.0};

void require_disc(complex w) {
  if (!(std::norm(w) < 1.0)) throw DomainError("point must lie in the open unit disc");
}

void require_halfplane(complex z) {
  if (!(z.imag() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("point must lie in the upper half-plane");
  }
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and positive");
}

}  // namespace

complex cayley(complex z) {
  require_halfplane(z);
  return (z - kI) / (z + kI);
}

complex cayley_inv(complex w) {
  require_disc(w);
  return kI * (1.0 + w) / (1.0 - w);
}

complex bergman_kernel(complex z, complex w, double alpha) {
  require_disc(z);
  require_disc(w);
  require_alpha(alpha);
  return std::pow(1.0 - z * std::conj(w), -(2.0 * alpha + 1.0));
}

double gamma_coefficient(std::int64_t k, double alpha) {
  if (k < 0) throw DomainError("monomial index must be non-negative");
  require_alpha(alpha);
  const double b = 2.0 * alpha;
  const double kd = static_cast<double>(k);
  return std::exp(ln_gamma_ratio(kd + 1.0, b) - ln_gamma(1.0 + b));
}

double gamma_coefficient_via_beta(std::int64_t k, double alpha) {
  if (k < 0) throw DomainError("monomial index must be non-negative");
  require_alpha(alpha);
  const double b = 2.0 * alpha;
  return std::exp(-ln_beta(static_cast<double>(k) + 1.0, b)) / b;
}

complex monomial(std::int64_t k, complex z, double alpha) {
  require_disc(z);
  const double gamma = gamma_coefficient(k, alpha);
  if (k == 0) return {std::sqrt(gamma), 0.0};
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0};
  const double kd = static_cast<double>(k);
  const double magnitude = std::exp(0.5 * std::log(gamma) + kd * std::log(r));
  return std::polar(magnitude, kd * std::arg(z));
}

complex bergman_partial_sum(complex z, complex w, double alpha, std::int64_t K) {
  if (K < 0) throw DomainError("partial sum order must be non-negative");
  complex sum{0.0, 0.0};
  for (std::int64_t k = 0; k <= K; ++k) sum += monomial(k, z, alpha) * std::conj(monomial(k, w, alpha));
  return sum;
}

complex wavelet_kernel(complex z, complex w, double alpha) {
  require_halfplane(z);
  require_halfplane(w);
  require_alpha(alpha);
  // -i (z - conj(w)) = (Im z + Im w) - i (Re z - Re w)
  const complex denom = -kI * (z - std::conj(w));
  if (!(denom.real() > 0.0)) throw ConvergenceError("wavelet kernel base left the right half-plane");
  const double p = 2.0 * alpha + 1.0;
  // (2 sqrt(Im z Im w) / denom)^p, with the factor 2^p folded into the base.
  const double modulus = 2.0 * std::sqrt(z.imag() * w.imag()) / std::abs(denom);
  const double angle = -std::arg(denom);
  return alpha * std::polar(std::pow(modulus, p), p * angle);
}

WaveletParams admissibility(double alpha) {
  require_alpha(alpha);
  const double b = 2.0 * alpha;
  const double c_psi = std::exp(ln_gamma(b) - b * std::numbers::ln2);
  const double norm2 = std::exp(ln_gamma(b + 1.0) - (b + 1.0) * std::numbers::ln2);
  return {alpha, c_psi, norm2};
}

namespace {

// int_0^inf xi^p e^(-2 xi) dxi for p > -1 by quadrature. On [0, 1] the graded
// substitution xi = s^m with m (p + 1) >= 5 turns the endpoint power into
// s^(m (p+1) - 1), smooth enough for Simpson; the tail is integrated directly.
double power_exp_integral(double p, double abs_tol) {
  const double m = std::max(1.0, std::ceil(5.0 / (p + 1.0)));
  QuadratureOptions opt;
  opt.abs_tol = abs_tol;
  const auto head = adaptive_simpson(
      [p, m](double s) {
        if (s == 0.0) return 0.0;
        const double sm = std::pow(s, m);
        return m * std::exp((m * (p + 1.0) - 1.0) * std::log(s) - 2.0 * sm);
      },
      0.0, 1.0, opt);
  const auto tail = integrate_exp_tail([p](double xi) { return std::exp(p * std::log(xi) - 2.0 * xi); }, 1.0, opt);
  if (!head.converged || !tail.converged) throw ConvergenceError("admissibility quadrature did not converge");
  return head.value + tail.value;
}

}  // namespace

WaveletParams admissibility_quadrature(double alpha, double abs_tol) {
  require_alpha(alpha);
  const double b = 2.0 * alpha;
  return {alpha, power_exp_integral(b - 1.0, abs_tol), power_exp_integral(b, abs_tol)};
}

bool halfplane_member(complex z, const CantorSpec& spec) {
  if (spec.domain() != Domain::HalfPlane) throw DomainError("halfplane_member needs a HalfPlane spec");
  require_halfplane(z);
  return member(spec, z);
}

}  // namespace fup
