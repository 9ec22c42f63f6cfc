#pragma once

// Supremum of a radial eigenvalue sequence over a line Cantor set.
//
// A profile supplies, for each k, a unimodal density on [0, inf) and its
// interval masses; lambda_k is the mass of the density on C_n(T). The search
// walks k upward from 0 and evaluates lambda_k exactly unless an upper bound
// already falls below the running maximum:
//
//   block bound   sup over k in [k1, k2] and t in [0, T] of the density,
//                 times |C_n(T)|; block sizes double while this succeeds.
//   level bound   sum over the 2^m intervals I of C_m(T) of sup_I density,
//                 times the Cantor measure 2^(n-m) T / 3^n inside each I.
//
// Both are rigorous, so the reported max and argmax equal those of the
// fully evaluated sequence.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "fup/bounds.hpp"
#include "fup/cantor.hpp"
#include "fup/special.hpp"
#include "fup/summation.hpp"

namespace fup::detail {

template <class Eval>
double cantor_mass(const Eval& ev, const CantorSpec& line) {
  CompensatedSum total;
  for (const Interval& iv : IntervalRange(line)) total += ev.mass(iv.lo, iv.hi);
  return total.value();
}

template <class Eval>
double level_bound(const Eval& ev, const CantorSpec& line, int m) {
  const double T = line.dilation();
  const int n = line.depth();
  const double mode = ev.mode();
  double sum = 0.0;
  for (const Interval& iv : IntervalRange(CantorSpec(m, T))) {
    sum += std::exp(ev.ln_pdf(std::clamp(mode, iv.lo, iv.hi)));
  }
  const double inner = std::ldexp(1.0, n - m) * (T / static_cast<double>(kPow3[n]));
  return sum * inner;
}

template <class Profile>
OperatorNorm search_supremum(const Profile& profile, const CantorSpec& line, double tol) {
  const int n = line.depth();
  const double T = line.dilation();
  const double measure = line_measure(line);
  constexpr double kMargin = 1.0 - 1e-7;

  OperatorNorm out;
  out.monotone_cutoff = profile.monotone_cutoff(T);
  out.lambda0 = cantor_mass(profile.at(0), line);
  out.norm = out.lambda0;
  out.argmax_k = 0;
  out.exact_evaluations = 1;

  std::vector<int> levels;
  for (int m : {6, 10, n}) {
    if (m >= 1 && m <= n && (levels.empty() || m > levels.back())) levels.push_back(m);
  }

  std::int64_t k = 1;
  std::int64_t block = 1;
  std::int64_t next_check = 1;
  while (k <= out.monotone_cutoff) {
    if (tol > 0.0 && k >= next_check) {
      next_check = 2 * k;
      if (profile.at(k).cdf(T) < tol * out.norm) {
        out.truncated_at = k;
        break;
      }
    }

    const std::int64_t k2 = std::min(out.monotone_cutoff, k + block - 1);
    if (std::exp(profile.block_ln_sup(k, k2, T)) * measure < out.norm * kMargin) {
      k = k2 + 1;
      block *= 2;
      continue;
    }
    block = 1;

    const auto ev = profile.at(k);
    bool pruned = false;
    for (int m : levels) {
      if (level_bound(ev, line, m) < out.norm * kMargin) {
        pruned = true;
        break;
      }
    }
    if (!pruned) {
      const double lambda = cantor_mass(ev, line);
      ++out.exact_evaluations;
      if (lambda > out.norm) {
        out.norm = lambda;
        out.argmax_k = k;
      }
    }
    ++k;
  }
  out.k_scanned = out.truncated_at ? *out.truncated_at - 1 : out.monotone_cutoff;
  return out;
}

// ---------------------------------------------------------------------------
// Beta-prime profile of the disc operator

struct BetaPrimeEval {
  BetaPrimeParams params;

  [[nodiscard]] double mass(double lo, double hi) const { return betaprime_mass(lo, hi, params); }
  [[nodiscard]] double ln_pdf(double t) const { return betaprime_ln_pdf(t, params); }
  [[nodiscard]] double mode() const { return params.mode(); }
  [[nodiscard]] double cdf(double t) const { return betaprime_cdf(t, params); }
};

struct BetaPrimeProfile {
  double alpha;

  [[nodiscard]] BetaPrimeEval at(std::int64_t k) const { return {BetaPrimeParams(k, alpha)}; }

  [[nodiscard]] std::int64_t monotone_cutoff(double T) const {
    return std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(2.0 * alpha * T)) - 1);
  }

  // g_k = B(k+1, b)^-1 u^k (1-u)^(b+1) with u = t/(1+t). Over the block,
  // B(k+1, b)^-1 is largest at k2 and u^k largest at k1; the remaining
  // u^k1 (1-u)^(b+1) peaks at u = k1 / (k1 + b + 1), clamped to [0, T/(1+T)].
  [[nodiscard]] double block_ln_sup(std::int64_t k1, std::int64_t k2, double T) const {
    const double b = 2.0 * alpha;
    const double kd = static_cast<double>(k1);
    const double u = std::min(kd / (kd + b + 1.0), T / (1.0 + T));
    const double power = k1 == 0 ? 0.0 : kd * std::log(u);
    return -ln_beta(static_cast<double>(k2) + 1.0, b) + power + (b + 1.0) * std::log1p(-u);
  }
};

// ---------------------------------------------------------------------------
// Gamma profile of the Fock operator: density of x = scale * t with
// x ~ Gamma(k + 1), expressed in the line coordinate t.

struct GammaEval {
  double shape;  // k + 1
  double scale;

  [[nodiscard]] double mass(double lo, double hi) const {
    const double xl = scale * lo;
    const double xh = scale * hi;
    double m;
    if (xl >= shape) {
      m = reg_inc_gamma_tails(shape, xl).upper - reg_inc_gamma_tails(shape, xh).upper;
    } else {
      m = reg_inc_gamma_tails(shape, xh).lower - reg_inc_gamma_tails(shape, xl).lower;
    }
    return std::max(m, 0.0);
  }

  [[nodiscard]] double ln_pdf(double t) const {
    const double x = scale * t;
    if (x == 0.0) return shape == 1.0 ? std::log(scale) : -INFINITY;
    return std::log(scale) + ln_gamma_prefactor(shape, x) - std::log(x);
  }

  [[nodiscard]] double mode() const { return (shape - 1.0) / scale; }
  [[nodiscard]] double cdf(double t) const { return reg_inc_gamma_tails(shape, scale * t).lower; }
};

struct GammaProfile {
  double scale;

  [[nodiscard]] GammaEval at(std::int64_t k) const { return {static_cast<double>(k) + 1.0, scale}; }

  [[nodiscard]] std::int64_t monotone_cutoff(double T) const {
    return std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(scale * T)) - 1);
  }

  // x^k e^-x / k! has ratio x / (k + 1) between consecutive k and its peak
  // value k^k e^-k / k! decreases in k, so the block is dominated by k1:
  // at its mode when that lies in range, else at the range end x = scale T.
  [[nodiscard]] double block_ln_sup(std::int64_t k1, std::int64_t /*k2*/, double T) const {
    const GammaEval ev = at(k1);
    return ev.ln_pdf(std::min(ev.mode(), T));
  }
};

}  // namespace fup::detail
