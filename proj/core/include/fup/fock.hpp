#pragma once

// Localization to the planar Cantor set {z : |z|^2 in C_n(R^2)} in the Fock
// space with kernel e^(pi z conj(w)). The operator is diagonal in the
// monomials; |z^k|^2 e^(-pi |z|^2) dz pushed to s = |z|^2 is pi times a
// Gamma(k + 1) density in pi s, so
//
//   lambda_k = sum over intervals [lo, hi] of C_n(R^2) of
//              P(k + 1, pi hi) - P(k + 1, pi lo).

#include <cstdint>

#include "fup/bounds.hpp"

namespace fup {

struct FockSpectrumEntry {
  std::int64_t k;
  double lambda;
};

[[nodiscard]] double fock_eigenvalue(std::int64_t k, int n, double R);

/// The same sum by adaptive Simpson of the Gamma density per interval.
[[nodiscard]] double fock_eigenvalue_quadrature(std::int64_t k, int n, double R, double tol);

/// sup_k lambda_k. The ratio of consecutive Gamma densities is
/// pi s / (k + 1) <= 1 on [0, R^2] once k + 1 >= pi R^2, so the scan stops
/// at ceil(pi R^2) - 1, with the same pruning as operator_norm.
[[nodiscard]] OperatorNorm fock_norm(int n, double R, double tol = kDefaultNormTol);

/// ln fock_norm against ln R along pi R^2 = 3^(n/2), n in [n_lo, n_hi]
/// within [4, 16]. Target slope -2 + 2d.
[[nodiscard]] ScalingFit fock_norm_scaling(int n_lo, int n_hi, unsigned threads = 0,
                                           double tol = kDefaultNormTol);

/// Area pi R^2 (2/3)^n of the planar Cantor set.
[[nodiscard]] double planar_volume(int n, double R);

/// ln planar_volume against ln R along pi R^2 = 3^(n/2). Target slope -2 + 4d.
[[nodiscard]] ScalingFit planar_volume_scaling(int n_lo, int n_hi);

/// R with pi R^2 = 3^(n/2).
[[nodiscard]] double fock_critical_radius(int n);

}  // namespace fup
