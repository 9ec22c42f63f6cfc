#pragma once

// Reproducing kernels of the weighted Bergman space on the disc and of the
// analytic-wavelet space on the upper half-plane, the normalized monomial
// basis, and the Cayley transform between the two domains.

#include <complex>
#include <cstdint>

#include "fup/cantor.hpp"

namespace fup {

using complex = std::complex<double>;

/// xi(z) = (z - i) / (z + i), upper half-plane onto the unit disc.
[[nodiscard]] complex cayley(complex z);

/// xi^-1(w) = i (1 + w) / (1 - w), unit disc onto the upper half-plane.
[[nodiscard]] complex cayley_inv(complex w);

/// K(z, w) = (1 - z conj(w))^-(2 alpha + 1) for |z|, |w| < 1.
[[nodiscard]] complex bergman_kernel(complex z, complex w, double alpha);

/// gamma_k = Gamma(k + 1 + 2a) / (Gamma(k + 1) Gamma(1 + 2a)).
[[nodiscard]] double gamma_coefficient(std::int64_t k, double alpha);

/// gamma_k through the Beta function: B(k + 1, 2a)^-1 / (2a).
[[nodiscard]] double gamma_coefficient_via_beta(std::int64_t k, double alpha);

/// e_k(z) = sqrt(gamma_k) z^k, evaluated in polar form so large k neither
/// overflows sqrt(gamma_k) nor underflows z^k prematurely.
[[nodiscard]] complex monomial(std::int64_t k, complex z, double alpha);

/// sum_{k <= K} e_k(z) conj(e_k(w)).
[[nodiscard]] complex bergman_partial_sum(complex z, complex w, double alpha, std::int64_t K);

/// 2^(2a+1) a (sqrt(Im z Im w) / (-i (z - conj(w))))^(2a+1), principal branch.
/// The base has real part (Im z + Im w) / |.|^2 > 0, so the power never meets
/// the branch cut; this is checked on every call.
[[nodiscard]] complex wavelet_kernel(complex z, complex w, double alpha);

struct WaveletParams {
  double alpha;
  double admissibility;  // C_psi = Gamma(2a) / 2^(2a)
  double norm_squared;   // ||psi||^2 = Gamma(2a + 1) / 2^(2a + 1)

  [[nodiscard]] double ratio() const noexcept { return norm_squared / admissibility; }
};

/// Closed-form constants of the analytic wavelet with Fourier transform
/// xi^a e^-xi.
[[nodiscard]] WaveletParams admissibility(double alpha);

/// The same constants by quadrature of xi^(2a-1) e^(-2 xi) and
/// xi^(2a) e^(-2 xi) over (0, inf).
[[nodiscard]] WaveletParams admissibility_quadrature(double alpha, double abs_tol = 1e-13);

/// Membership of z (Im z > 0) in the Cayley preimage of the disc Cantor set.
[[nodiscard]] bool halfplane_member(complex z, const CantorSpec& spec);

}  // namespace fup
