#include "fup/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "fup/errors.hpp"
#include "fup/parallel.hpp"
#include "norm_search.hpp"

namespace fup {

namespace {

void require_envelope_args(int n, double R) {
  if (n < 0) throw DomainError("n must be non-negative");
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("R must be finite and positive");
}

// 3^e, exact for integer e in [0, 33].
double pow3(double e) {
  if (e >= 0.0 && e <= kMaxExactDepth && e == std::floor(e)) {
    return static_cast<double>(kPow3[static_cast<std::size_t>(e)]);
  }
  return std::pow(3.0, e);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Exponent of 3 as a multiple of n: "n", "n/2", "(n/2)", "(0.25*n)", "(0.25n)".
std::optional<double> parse_exponent(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s == "n") return 1.0;
  if (s.starts_with("n/")) {
    const auto d = parse_number(s.substr(2));
    if (!d || *d == 0.0) return std::nullopt;
    return 1.0 / *d;
  }
  if (s.ends_with("*n")) return parse_number(s.substr(0, s.size() - 2));
  if (s.ends_with("n")) return parse_number(s.substr(0, s.size() - 1));
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::SmallR:
      return "small";
    case Regime::MidR:
      return "mid";
    case Regime::LargeR:
      return "large";
  }
  return "unknown";
}

double envelope_branch(Regime regime, int n, double R) {
  require_envelope_args(n, R);
  const double scale = std::ldexp(1.0, n) / pow3(n);
  switch (regime) {
    case Regime::SmallR:
      return scale * R;
    case Regime::MidR:
      return scale * std::pow(R, 1.0 - kCantorDimension);
    case Regime::LargeR:
      return 1.0;
  }
  return 0.0;
}

EnvelopeValue envelope(int n, double R) {
  require_envelope_args(n, R);
  Regime regime = Regime::MidR;
  if (R <= 1.0) {
    regime = Regime::SmallR;
  } else if (R > pow3(n)) {
    regime = Regime::LargeR;
  }
  return {n, R, regime, envelope_branch(regime, n, R)};
}

OperatorNorm operator_norm(const CantorSpec& spec, double alpha, double tol) {
  if (spec.domain() != Domain::Disc) throw DomainError("operator_norm needs a Disc spec");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and positive");
  if (!(tol >= 0.0) || !(tol < 1.0)) throw DomainError("truncation tolerance must lie in [0, 1)");
  if (spec.depth() > kMaxStreamDepth) throw DepthExceeded("Cantor depth exceeds the streaming cap");
  return detail::search_supremum(detail::BetaPrimeProfile{alpha}, spec.line(), tol);
}

// ---------------------------------------------------------------------------

double RadiusRule::at(int n) const { return coef * pow3(exponent * n); }

std::string RadiusRule::to_string() const {
  std::ostringstream out;
  out.precision(17);
  if (exponent == 0.0) {
    out << coef;
    return out.str();
  }
  if (coef != 1.0) out << coef << '*';
  if (exponent == 1.0) {
    out << "3^n";
  } else if (exponent == 0.5) {
    out << "3^(n/2)";
  } else {
    out << "3^(" << exponent << "*n)";
  }
  return out.str();
}

std::optional<RadiusRule> parse_radius_rule(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  const auto caret = text.find("3^");
  if (caret == std::string_view::npos) {
    const auto v = parse_number(text);
    if (!v || !(*v > 0.0)) return std::nullopt;
    return RadiusRule{*v, 0.0};
  }
  double coef = 1.0;
  std::string_view head = trim(text.substr(0, caret));
  if (!head.empty()) {
    if (head.back() != '*') return std::nullopt;
    const auto c = parse_number(head.substr(0, head.size() - 1));
    if (!c || !(*c > 0.0)) return std::nullopt;
    coef = *c;
  }
  const auto e = parse_exponent(text.substr(caret + 2));
  if (!e) return std::nullopt;
  return RadiusRule{coef, *e};
}

std::vector<RadiusRule> default_radius_grid() {
  return {{0.25, 0.0}, {1.0, 0.0}, {1.0, 0.5}, {1.0, 1.0}, {10.0, 1.0}};
}

// ---------------------------------------------------------------------------

bool SandwichReport::bounded() const noexcept {
  const auto ok = [](double lo, double hi) {
    return lo > 0.0 && std::isfinite(lo) && std::isfinite(hi) && lo <= hi;
  };
  return !points.empty() && ok(min_ratio, max_ratio) && ok(min_lambda0_ratio, max_lambda0_ratio);
}

SandwichReport verify_sandwich(double alpha, int n_lo, int n_hi, std::span<const RadiusRule> grid,
                               unsigned threads, double tol) {
  if (n_lo < 0 || n_hi < n_lo) throw DomainError("n range must satisfy 0 <= n_lo <= n_hi");
  if (grid.empty()) throw DomainError("radius grid must be nonempty");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and positive");

  const std::size_t per_n = grid.size();
  const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1) * per_n;
  std::vector<SandwichPoint> points(count);
  parallel_for(count, threads, [&](std::size_t i) {
    const int n = n_lo + static_cast<int>(i / per_n);
    const double R = grid[i % per_n].at(n);
    const OperatorNorm norm = operator_norm(CantorSpec(n, R, Domain::Disc), alpha, tol);
    const EnvelopeValue env = envelope(n, R);
    points[i] = {n,         R,         alpha,     env.regime, norm.norm, norm.argmax_k, norm.lambda0,
                 env.value, norm.norm / env.value, norm.lambda0 / env.value};
  });

  SandwichReport report{alpha, std::move(points), std::numeric_limits<double>::infinity(), 0.0,
                        std::numeric_limits<double>::infinity(), 0.0};
  for (const SandwichPoint& p : report.points) {
    report.min_ratio = std::min(report.min_ratio, p.ratio);
    report.max_ratio = std::max(report.max_ratio, p.ratio);
    report.min_lambda0_ratio = std::min(report.min_lambda0_ratio, p.lambda0_ratio);
    report.max_lambda0_ratio = std::max(report.max_lambda0_ratio, p.lambda0_ratio);
  }
  return report;
}

// ---------------------------------------------------------------------------

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("least squares needs equally many x and y");
  if (x.size() < 4) throw DomainError("least squares needs at least 4 points");
  const double m = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("least squares needs at least two distinct x values");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max(worst, std::fabs(y[i] - (slope * x[i] + intercept)));
  }
  return {slope, intercept, worst};
}

namespace {

ScalingFit finish_fit(std::string quantity, double alpha, std::vector<ScalingPoint> points,
                      double target) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const ScalingPoint& p : points) {
    xs.push_back(p.ln_R);
    ys.push_back(p.ln_value);
  }
  const LinearFit fit = least_squares(xs, ys);
  return {std::move(quantity), alpha, std::move(points), fit.slope, fit.intercept, fit.max_residual,
          target};
}

void require_n_range(int n_lo, int n_hi, int lo, int hi) {
  if (n_lo < lo || n_hi > hi || n_hi < n_lo) {
    throw DomainError("n range must lie within [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "]");
  }
}

}  // namespace

ScalingFit scaling_fit(double alpha, int n_lo, int n_hi, unsigned threads, double tol) {
  require_n_range(n_lo, n_hi, 4, 14);
  const auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<ScalingPoint> points(count);
  parallel_for(count, threads, [&](std::size_t i) {
    const int n = n_lo + static_cast<int>(i);
    const double R = pow3(0.5 * n);
    const OperatorNorm norm = operator_norm(CantorSpec(n, R, Domain::Disc), alpha, tol);
    points[i] = {n, R, std::log(R), std::log(norm.norm), norm.argmax_k};
  });
  return finish_fit("bergman_norm", alpha, std::move(points), kCantorDimension - 1.0);
}

double fourier_volume(int n, double R) {
  require_envelope_args(n, R);
  return std::ldexp(1.0, n) / pow3(n) * R;
}

ScalingFit fourier_volume_scaling(int n_lo, int n_hi) {
  require_n_range(n_lo, n_hi, 0, kMaxExactDepth);
  std::vector<ScalingPoint> points;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double R = pow3(0.5 * n);
    points.push_back({n, R, std::log(R), std::log(fourier_volume(n, R)), 0});
  }
  return finish_fit("fourier_volume", 0.0, std::move(points), 2.0 * kCantorDimension - 1.0);
}

}  // namespace fup
