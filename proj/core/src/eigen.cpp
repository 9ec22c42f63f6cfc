#include "fup/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "fup/errors.hpp"
#include "fup/parallel.hpp"
#include "fup/quadrature.hpp"
#include "fup/special.hpp"
#include "fup/summation.hpp"
#include "norm_search.hpp"

namespace fup {

namespace {

CantorSpec disc_line(const CantorSpec& spec) {
  if (spec.domain() != Domain::Disc) throw DomainError("eigenvalues are defined for Disc specs");
  if (spec.depth() > kMaxStreamDepth) {
    throw DepthExceeded("Cantor depth " + std::to_string(spec.depth()) + " exceeds cap " +
                        std::to_string(kMaxStreamDepth));
  }
  return spec.line();
}

double compute_one(std::int64_t k, const CantorSpec& spec, double alpha, const SpectrumOptions& opt) {
  switch (opt.method) {
    case Method::CdfSum:
      return eigenvalue(k, spec, alpha);
    case Method::Quadrature:
      return eigenvalue_quadrature(k, spec, alpha, opt.quadrature_tol);
    case Method::MonteCarlo:
      return eigenvalue_montecarlo(k, spec, alpha, opt.samples,
                                   opt.seed + static_cast<std::uint64_t>(k) * 0x9E3779B97F4A7C15ull)
          .estimate;
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::CdfSum:
      return "cdfsum";
    case Method::Quadrature:
      return "quadrature";
    case Method::MonteCarlo:
      return "montecarlo";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) noexcept {
  if (text == "cdf" || text == "cdfsum") return Method::CdfSum;
  if (text == "quad" || text == "quadrature") return Method::Quadrature;
  if (text == "mc" || text == "montecarlo") return Method::MonteCarlo;
  return std::nullopt;
}

double eigenvalue(std::int64_t k, const CantorSpec& spec, double alpha) {
  const CantorSpec line = disc_line(spec);
  const detail::BetaPrimeEval ev{BetaPrimeParams(k, alpha)};
  return std::clamp(detail::cantor_mass(ev, line), 0.0, 1.0);
}

double eigenvalue_closed_form_n0(std::int64_t k, double R, double alpha) {
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("R must be finite and positive");
  return betaprime_cdf_hypergeometric(R, BetaPrimeParams(k, alpha));
}

double eigenvalue_quadrature(std::int64_t k, const CantorSpec& spec, double alpha, double tol) {
  const CantorSpec line = disc_line(spec);
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const BetaPrimeParams p(k, alpha);
  const RealFunction density = [&p](double t) { return std::exp(betaprime_ln_pdf(t, p)); };
  QuadratureOptions opt;
  opt.abs_tol = tol;
  CompensatedSum total;
  for (const Interval& iv : IntervalRange(line)) {
    const QuadratureResult r = adaptive_simpson(density, iv.lo, iv.hi, opt);
    if (!r.converged) {
      throw ConvergenceError("eigenvalue quadrature did not converge on [" + std::to_string(iv.lo) +
                             ", " + std::to_string(iv.hi) + "] for k=" + std::to_string(k));
    }
    total += r.value;
  }
  return total.value();
}

MonteCarloEstimate eigenvalue_montecarlo(std::int64_t k, const CantorSpec& spec, double alpha,
                                         std::int64_t samples, std::uint64_t seed) {
  const CantorSpec line = disc_line(spec);
  if (samples < 1000) throw DomainError("Monte Carlo needs at least 1000 samples");
  if (k < 0) throw DomainError("eigenvalue index k must be non-negative");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and positive");

  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> numerator(static_cast<double>(k) + 1.0, 1.0);
  std::gamma_distribution<double> denominator(2.0 * alpha, 1.0);
  const double upper = line.dilation();
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double g1 = numerator(rng);
    const double g2 = denominator(rng);
    // X = g1 / g2 > R needs no digit descent; g2 == 0 means X = inf.
    if (g2 == 0.0 || g1 > upper * g2) continue;
    if (member(line, g1 / g2)) ++hits;
  }
  const double n = static_cast<double>(samples);
  const double mean = static_cast<double>(hits) / n;
  return {mean, std::sqrt(mean * (1.0 - mean) / (n - 1.0)), samples};
}

Spectrum spectrum(const CantorSpec& spec, double alpha, SpectrumLimit limit,
                  const SpectrumOptions& options) {
  const CantorSpec line = disc_line(spec);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and positive");

  Spectrum out{alpha, spec, options.method, {}, 0, 0.0, std::nullopt};

  if (const auto* km = std::get_if<KMax>(&limit)) {
    if (km->value < 0) throw DomainError("k_max must be non-negative");
    if (km->value > kSpectrumCap) throw CapExceeded("k_max exceeds the spectrum cap of 1e7");
    const auto count = static_cast<std::size_t>(km->value) + 1;
    out.entries.resize(count);
    parallel_for(count, options.threads, [&](std::size_t i) {
      const auto k = static_cast<std::int64_t>(i);
      out.entries[i] = {k, compute_one(k, spec, alpha, options)};
    });
    out.k_max = km->value;
    return out;
  }

  const double tol = std::get<TruncationTol>(limit).value;
  if (!(tol > 0.0) || !(tol < 1.0)) throw DomainError("truncation tolerance must lie in (0, 1)");
  out.truncation_tol = tol;

  // Batches of k run in parallel; the stopping rule is then applied in k
  // order, so the result does not depend on the thread count.
  const std::size_t batch = std::max<std::size_t>(64, 4 * resolve_threads(options.threads));
  const double R = line.dilation();
  double running_max = 0.0;
  int run = 0;
  std::int64_t next = 0;
  while (true) {
    if (next > kSpectrumCap) {
      throw CapExceeded("truncated spectrum did not stop before the cap k = 1e7");
    }
    const auto count = static_cast<std::size_t>(
        std::min<std::int64_t>(static_cast<std::int64_t>(batch), kSpectrumCap + 1 - next));
    std::vector<SpectrumEntry> fresh(count);
    std::vector<double> majorant(count);
    parallel_for(count, options.threads, [&](std::size_t i) {
      const std::int64_t k = next + static_cast<std::int64_t>(i);
      fresh[i] = {k, compute_one(k, spec, alpha, options)};
      majorant[i] = betaprime_cdf(R, BetaPrimeParams(k, alpha));
    });
    for (std::size_t i = 0; i < count; ++i) {
      out.entries.push_back(fresh[i]);
      running_max = std::max(running_max, fresh[i].lambda);
      run = majorant[i] < tol * running_max ? run + 1 : 0;
      if (run == kTruncationRun) {
        out.stopping_k = fresh[i].k;
        out.k_max = fresh[i].k;
        return out;
      }
    }
    next += static_cast<std::int64_t>(count);
  }
}

}  // namespace fup
