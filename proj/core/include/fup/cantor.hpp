#pragma once

// Middle-thirds Cantor iterates on the half-line, the unit disc, the plane
// and the upper half-plane.
//
// C_n(R) on the line is the union over digit vectors a in {0,2}^n of
//   R * [b_a, b_a + 3^-n],   b_a = sum_j a_j 3^-j.
// Every endpoint is an integer numerator over 3^n (exact in 64 bits up to
// n = 33) scaled by R with a single rounding, so intervals, membership and
// measures all agree bit for bit.
//
// The disc set is {w : phi(|w|) in C_n(R)} with phi(r) = r^2 / (1 - r^2),
// the plane set is {z : |z|^2 in C_n(R^2)}, and the half-plane set is the
// Cayley preimage of the disc set.

#include <array>
#include <complex>
#include <cstdint>
#include <iterator>
#include <optional>
#include <ranges>
#include <vector>

namespace fup {

enum class Domain { Line, Disc, Plane, HalfPlane };

inline constexpr int kMaxStreamDepth = 30;
inline constexpr int kMaxMaterializeDepth = 24;
inline constexpr int kMaxExactDepth = 33;

/// 3^j for j in [0, 33]; every entry is exact in a double as well.
inline constexpr std::array<std::uint64_t, kMaxExactDepth + 1> kPow3 = [] {
  std::array<std::uint64_t, kMaxExactDepth + 1> p{};
  p[0] = 1;
  for (std::size_t j = 1; j < p.size(); ++j) p[j] = 3 * p[j - 1];
  return p;
}();

/// Identifies the n-th iterate of a Cantor-type set dilated by R.
class CantorSpec {
 public:
  /// Throws DomainError unless depth >= 0 and dilation is finite and > 0.
  CantorSpec(int depth, double dilation, Domain domain = Domain::Line);

  [[nodiscard]] int depth() const noexcept { return depth_; }
  [[nodiscard]] double dilation() const noexcept { return dilation_; }
  [[nodiscard]] Domain domain() const noexcept { return domain_; }

  /// The line iterate the set is built from: C_n(R) for Disc, Line and
  /// HalfPlane, C_n(R^2) for Plane.
  [[nodiscard]] CantorSpec line() const;

  /// R * num / 3^n, the single rounding shared by every consumer.
  [[nodiscard]] double scaled_endpoint(std::uint64_t numerator) const noexcept {
    return dilation_ * (static_cast<double>(numerator) / static_cast<double>(kPow3[depth_]));
  }

  friend bool operator==(const CantorSpec&, const CantorSpec&) = default;

 private:
  int depth_;
  double dilation_;
  Domain domain_;
};

struct Interval {
  double lo;
  double hi;

  [[nodiscard]] double length() const noexcept { return hi - lo; }
  [[nodiscard]] bool contains(double t) const noexcept { return lo <= t && t <= hi; }
};

/// Digit vector a in {0,2}^n.
class DigitIndex {
 public:
  /// Throws DomainError for digits outside {0,2} or more than 33 digits.
  explicit DigitIndex(std::vector<int> digits);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(digits_.size()); }
  [[nodiscard]] const std::vector<int>& digits() const noexcept { return digits_; }

  /// sum_j a_j 3^(n-j), the endpoint numerator over 3^n.
  [[nodiscard]] std::uint64_t numerator() const noexcept;

  /// Smallest 1-based position holding a nonzero digit; empty for a = 0.
  [[nodiscard]] std::optional<int> order() const noexcept;

 private:
  std::vector<int> digits_;
};

/// b_a = sum_j a_j 3^-j, converted to floating point once.
[[nodiscard]] double endpoint(const DigitIndex& a);

/// Number of digit vectors of length n with order m, i.e. 2^(n-m).
[[nodiscard]] std::uint64_t order_class_size(int n, int m);

// ---------------------------------------------------------------------------
// Interval streams

/// Forward iterator over the 2^n intervals of a line iterate, ascending.
/// Digit vectors are visited in lexicographic order; the numerator is
/// updated incrementally (amortized O(1) per step).
class IntervalIterator {
 public:
  using value_type = Interval;
  using difference_type = std::ptrdiff_t;
  using iterator_concept = std::forward_iterator_tag;

  IntervalIterator() = default;
  explicit IntervalIterator(const CantorSpec& spec) : spec_(spec), count_(std::uint64_t{1} << spec.depth()) {}

  [[nodiscard]] Interval operator*() const noexcept {
    return {spec_.scaled_endpoint(numerator_), spec_.scaled_endpoint(numerator_ + 1)};
  }

  /// Integer numerator of the left endpoint over 3^n.
  [[nodiscard]] std::uint64_t numerator() const noexcept { return numerator_; }
  [[nodiscard]] std::uint64_t index() const noexcept { return index_; }

  IntervalIterator& operator++() noexcept {
    // Incrementing the binary index clears the trailing ones and sets the
    // next zero; digit position p (from the right) has weight 2 * 3^p.
    std::uint64_t bits = index_;
    int p = 0;
    while (bits & 1u) {
      numerator_ -= 2 * kPow3[p];
      bits >>= 1;
      ++p;
    }
    numerator_ += 2 * kPow3[p];
    ++index_;
    return *this;
  }

  IntervalIterator operator++(int) noexcept {
    IntervalIterator tmp = *this;
    ++*this;
    return tmp;
  }

  friend bool operator==(const IntervalIterator& a, const IntervalIterator& b) noexcept {
    return a.index_ == b.index_;
  }
  friend bool operator==(const IntervalIterator& it, std::default_sentinel_t) noexcept {
    return it.index_ >= it.count_;
  }

 private:
  CantorSpec spec_{0, 1.0};
  std::uint64_t count_ = 1;
  std::uint64_t index_ = 0;
  std::uint64_t numerator_ = 0;
};

static_assert(std::forward_iterator<IntervalIterator>);

class IntervalRange : public std::ranges::view_interface<IntervalRange> {
 public:
  IntervalRange() = default;
  explicit IntervalRange(const CantorSpec& spec) : spec_(spec) {}

  [[nodiscard]] IntervalIterator begin() const { return IntervalIterator(spec_); }
  [[nodiscard]] std::default_sentinel_t end() const noexcept { return {}; }
  [[nodiscard]] std::uint64_t size() const noexcept { return std::uint64_t{1} << spec_.depth(); }
  [[nodiscard]] const CantorSpec& spec() const noexcept { return spec_; }

 private:
  CantorSpec spec_{0, 1.0};
};

/// Stream of the 2^n intervals of a Line spec. Throws DomainError for other
/// domains and DepthExceeded above kMaxStreamDepth.
[[nodiscard]] IntervalRange intervals(const CantorSpec& spec);

/// Materialized intervals; DepthExceeded above kMaxMaterializeDepth.
[[nodiscard]] std::vector<Interval> materialize_intervals(const CantorSpec& spec);

/// Lebesgue measure (2/3)^n R of a Line spec.
[[nodiscard]] double line_measure(const CantorSpec& spec);

// ---------------------------------------------------------------------------
// Disc and plane

/// phi(r) = r^2 / (1 - r^2) on [0, 1).
[[nodiscard]] double phi(double r);

/// Inverse of phi: sqrt(t / (1 + t)) for t >= 0.
[[nodiscard]] double phi_inv(double t);

/// Radial annulus. Besides the radii it carries the radial measure
/// coordinate of each edge (phi(r) on the disc, r^2 on the plane); radii
/// within 1e-6 of the unit circle cannot resolve an annulus of hyperbolic
/// measure one in double precision.
struct Annulus {
  double r_inner;
  double r_outer;
  double u_inner;
  double u_outer;
};

/// Annulus over a line interval for a Disc or Plane spec.
[[nodiscard]] Annulus annulus_over(const Interval& line_interval, Domain domain);

namespace detail {
void require_streamable(const CantorSpec& spec, Domain expected_a, Domain expected_b);
}

/// Stream of the 2^n annuli of a Disc or Plane spec, ascending in radius.
[[nodiscard]] inline auto annuli(const CantorSpec& spec) {
  detail::require_streamable(spec, Domain::Disc, Domain::Plane);
  const Domain domain = spec.domain();
  return IntervalRange(spec.line()) |
         std::views::transform([domain](const Interval& iv) { return annulus_over(iv, domain); });
}

/// Hyperbolic measure (2/3)^n R of a Disc spec (closed form).
[[nodiscard]] double hyperbolic_measure(const CantorSpec& spec);

/// Hyperbolic measure of one annulus, phi(r_outer) - phi(r_inner).
[[nodiscard]] inline double annulus_hyperbolic_measure(const Annulus& a) noexcept {
  return a.u_outer - a.u_inner;
}

/// Sum of per-annulus hyperbolic measures over a Disc spec.
[[nodiscard]] double hyperbolic_measure_from_annuli(const CantorSpec& spec);

// ---------------------------------------------------------------------------
// Membership

/// Membership of t >= 0 in a Line iterate, by base-3 digit descent in O(n)
/// against the same endpoints the interval stream produces (closed intervals).
[[nodiscard]] bool member(const CantorSpec& spec, double t);

/// Membership of a complex point: Disc needs |w| < 1, Plane accepts any
/// point, HalfPlane needs Im z > 0. Throws DomainError otherwise.
[[nodiscard]] bool member(const CantorSpec& spec, std::complex<double> point);

}  // namespace fup
