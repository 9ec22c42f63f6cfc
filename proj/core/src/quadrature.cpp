#include "fup/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "fup/errors.hpp"
#include "fup/summation.hpp"

namespace fup {

namespace {

struct SimpsonState {
  const RealFunction& f;
  const QuadratureOptions& opt;
  CompensatedSum total;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;

  double eval(double x) {
    ++evaluations;
    return f(x);
  }

  void panel(double a, double b, double fa, double fm, double fb, double whole, double tol,
             int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;

    const bool settled = depth >= opt.min_depth && std::fabs(delta) <= 15.0 * tol;
    if (settled || depth >= opt.max_depth) {
      if (!settled) converged = false;
      total += left + right + delta / 15.0;
      error += std::fabs(delta) / 15.0;
      return;
    }
    panel(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
    panel(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

QuadratureResult adaptive_simpson(const RealFunction& f, double a, double b,
                                  const QuadratureOptions& opt) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("quadrature bounds must be finite");
  if (!(opt.abs_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (a == b) return {0.0, 0.0, 0, true};
  const double sign = b > a ? 1.0 : -1.0;
  if (b < a) std::swap(a, b);

  SimpsonState st{f, opt, {}, 0.0, 0, true};
  const double fa = st.eval(a);
  const double fb = st.eval(b);
  const double fm = st.eval(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  st.panel(a, b, fa, fm, fb, whole, opt.abs_tol, 0);
  return {sign * st.total.value(), st.error, st.evaluations, st.converged};
}

QuadratureResult integrate_exp_tail(const RealFunction& f, double a, const QuadratureOptions& opt) {
  auto mapped = [&](double v) {
    if (v >= 1.0) return 0.0;
    const double w = 1.0 - v;
    return f(a + v / w) / (w * w);
  };
  return adaptive_simpson(mapped, 0.0, 1.0, opt);
}

QuadratureResult integrate_power_tail(const RealFunction& f, double a, double p, double coef,
                                      const QuadratureOptions& opt) {
  if (!(a > 0.0) || !(p > 0.0)) throw DomainError("power tail needs a > 0 and p > 0");
  // t = a v^-s with s = m / p for an integer m >= p: the mapped integrand is
  // coef a^-p s v^(m-1) (1 + O(v^s)), smooth at v = 0 since s >= 1.
  const double m = std::max(1.0, std::ceil(p));
  const double s = m / p;
  const double limit = m == 1.0 ? coef * std::pow(a, -p) * s : 0.0;
  auto mapped = [&](double v) {
    if (v <= 0.0) return limit;
    const double t = a * std::pow(v, -s);
    if (!std::isfinite(t)) return limit;
    // dt/dv = s t / v
    return f(t) * s * t / v;
  };
  return adaptive_simpson(mapped, 0.0, 1.0, opt);
}

double golden_section_argmax(const std::function<bool(double, double)>& prefer, double lo,
                             double hi, double xtol) {
  if (!(hi > lo)) throw DomainError("golden-section bracket must satisfy lo < hi");
  if (!(xtol > 0.0)) throw DomainError("golden-section tolerance must be positive");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  for (int it = 0; it < 500 && hi - lo > xtol; ++it) {
    if (prefer(c, d)) {
      hi = d;
      d = c;
      c = hi - inv_phi * (hi - lo);
    } else {
      lo = c;
      c = d;
      d = lo + inv_phi * (hi - lo);
    }
  }
  return 0.5 * (lo + hi);
}

ScalarMaximum golden_section_maximize(const RealFunction& f, double lo, double hi, double xtol) {
  const double x = golden_section_argmax([&](double a, double b) { return f(a) > f(b); }, lo, hi, xtol);
  return {x, f(x)};
}

}  // namespace fup
