#include "fup/cantor.hpp"

#include <cmath>
#include <string>

#include "fup/errors.hpp"
#include "fup/kernels.hpp"
#include "fup/summation.hpp"

namespace fup {

namespace {

void require_depth(const CantorSpec& spec, int cap) {
  if (spec.depth() > cap) {
    throw DepthExceeded("Cantor depth " + std::to_string(spec.depth()) + " exceeds cap " +
                        std::to_string(cap));
  }
}

// (2/3)^n as the exact ratio 2^n / 3^n, rounded once.
double two_thirds_power(int n) {
  if (n <= kMaxExactDepth) return std::ldexp(1.0, n) / static_cast<double>(kPow3[n]);
  return std::pow(2.0 / 3.0, n);
}

}  // namespace

namespace detail {

void require_streamable(const CantorSpec& spec, Domain expected_a, Domain expected_b) {
  if (spec.domain() != expected_a && spec.domain() != expected_b) {
    throw DomainError("operation not defined for this Cantor domain");
  }
  require_depth(spec, kMaxStreamDepth);
}

}  // namespace detail

CantorSpec::CantorSpec(int depth, double dilation, Domain domain)
    : depth_(depth), dilation_(dilation), domain_(domain) {
  if (depth < 0) throw DomainError("Cantor depth must be non-negative");
  if (!(dilation > 0.0) || !std::isfinite(dilation)) {
    throw DomainError("Cantor dilation must be finite and positive");
  }
}

CantorSpec CantorSpec::line() const {
  if (domain_ == Domain::Plane) return CantorSpec(depth_, dilation_ * dilation_, Domain::Line);
  return CantorSpec(depth_, dilation_, Domain::Line);
}

DigitIndex::DigitIndex(std::vector<int> digits) : digits_(std::move(digits)) {
  if (digits_.size() > static_cast<std::size_t>(kMaxExactDepth)) {
    throw DomainError("digit vector longer than 33 digits");
  }
  for (int d : digits_) {
    if (d != 0 && d != 2) throw DomainError("Cantor digits must be 0 or 2");
  }
}

std::uint64_t DigitIndex::numerator() const noexcept {
  std::uint64_t num = 0;
  for (int d : digits_) num = 3 * num + static_cast<std::uint64_t>(d);
  return num;
}

std::optional<int> DigitIndex::order() const noexcept {
  for (std::size_t j = 0; j < digits_.size(); ++j) {
    if (digits_[j] != 0) return static_cast<int>(j) + 1;
  }
  return std::nullopt;
}

double endpoint(const DigitIndex& a) {
  return static_cast<double>(a.numerator()) / static_cast<double>(kPow3[a.size()]);
}

std::uint64_t order_class_size(int n, int m) {
  if (m < 1 || m > n || n > 63) throw DomainError("order must lie in [1, n]");
  return std::uint64_t{1} << (n - m);
}

IntervalRange intervals(const CantorSpec& spec) {
  detail::require_streamable(spec, Domain::Line, Domain::Line);
  return IntervalRange(spec);
}

std::vector<Interval> materialize_intervals(const CantorSpec& spec) {
  require_depth(spec, kMaxMaterializeDepth);
  const IntervalRange range = intervals(spec);
  std::vector<Interval> out;
  out.reserve(range.size());
  for (const Interval& iv : range) out.push_back(iv);
  return out;
}

double line_measure(const CantorSpec& spec) {
  if (spec.domain() != Domain::Line) throw DomainError("line_measure needs a Line spec");
  return two_thirds_power(spec.depth()) * spec.dilation();
}

double phi(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("phi is defined on [0, 1)");
  return r * r / ((1.0 - r) * (1.0 + r));
}

double phi_inv(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("phi_inv is defined on [0, inf)");
  return std::sqrt(t / (1.0 + t));
}

Annulus annulus_over(const Interval& iv, Domain domain) {
  switch (domain) {
    case Domain::Disc:
      return {phi_inv(iv.lo), phi_inv(iv.hi), iv.lo, iv.hi};
    case Domain::Plane:
      return {std::sqrt(iv.lo), std::sqrt(iv.hi), iv.lo, iv.hi};
    default:
      throw DomainError("annuli exist only for Disc and Plane specs");
  }
}

double hyperbolic_measure(const CantorSpec& spec) {
  if (spec.domain() != Domain::Disc) throw DomainError("hyperbolic measure needs a Disc spec");
  return two_thirds_power(spec.depth()) * spec.dilation();
}

double hyperbolic_measure_from_annuli(const CantorSpec& spec) {
  if (spec.domain() != Domain::Disc) throw DomainError("hyperbolic measure needs a Disc spec");
  CompensatedSum total;
  for (const Annulus& a : annuli(spec)) total += annulus_hyperbolic_measure(a);
  return total.value();
}

bool member(const CantorSpec& spec, double t) {
  if (spec.domain() != Domain::Line) {
    throw DomainError("real-point membership needs a Line spec");
  }
  require_depth(spec, kMaxStreamDepth);
  if (!(t >= 0.0)) throw DomainError("line membership needs t >= 0");

  const int n = spec.depth();
  if (t > spec.scaled_endpoint(kPow3[n])) return false;

  // Descend one ternary digit per level. `left` is the numerator over 3^n of
  // the current interval's left end; the children are [left, left + third]
  // and [left + 2 third, left + 3 third].
  std::uint64_t left = 0;
  for (int j = 1; j <= n; ++j) {
    const std::uint64_t third = kPow3[n - j];
    if (t <= spec.scaled_endpoint(left + third)) continue;
    if (t >= spec.scaled_endpoint(left + 2 * third)) {
      left += 2 * third;
      continue;
    }
    return false;
  }
  return true;
}

bool member(const CantorSpec& spec, std::complex<double> point) {
  switch (spec.domain()) {
    case Domain::Line:
      throw DomainError("complex-point membership needs a Disc, Plane or HalfPlane spec");
    case Domain::Disc: {
      const double r2 = std::norm(point);
      if (!(r2 < 1.0)) throw DomainError("disc membership needs |w| < 1");
      return member(spec.line(), r2 / (1.0 - r2));
    }
    case Domain::Plane:
      if (!std::isfinite(std::norm(point))) throw DomainError("plane point must be finite");
      return member(spec.line(), std::norm(point));
    case Domain::HalfPlane: {
      if (!(point.imag() > 0.0)) throw DomainError("half-plane membership needs Im z > 0");
      const CantorSpec disc(spec.depth(), spec.dilation(), Domain::Disc);
      return member(disc, cayley(point));
    }
  }
  return false;
}

}  // namespace fup
