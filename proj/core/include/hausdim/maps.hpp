#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace hausdim {

using Complex = std::complex<double>;

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] double length() const noexcept { return hi - lo; }
  [[nodiscard]] bool contains(double x, double slack = 0.0) const noexcept {
    return x >= lo - slack && x <= hi + slack;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// theta_m(x) = 1/(x + m), the inverse branch of the Gauss map for digit m.
struct MoebiusDigit {
  int m = 1;
};

/// (x + lambda x^{7/2}) / (3 + 2 lambda), shifted by (2 + lambda)/(3 + 2 lambda)
/// on branch 2. lambda = 0 is the middle-thirds system.
struct PerturbedCantor {
  int branch = 1;
  double lambda = 0.0;
};

/// One branch of a one-dimensional IFS on [0,1]. Immutable value type.
class ContractionMap1D {
 public:
  using Kind = std::variant<MoebiusDigit, PerturbedCantor>;

  static ContractionMap1D moebius_digit(int m);
  static ContractionMap1D perturbed_cantor(int branch, double lambda);

  [[nodiscard]] const Kind& kind() const noexcept { return kind_; }

  /// theta(x). No domain check; see eval_map_1d for the checked form.
  [[nodiscard]] double operator()(double x) const noexcept;
  [[nodiscard]] double derivative(double x) const noexcept;
  [[nodiscard]] double second_derivative(double x) const noexcept;
  /// |theta'(x)|^s.
  [[nodiscard]] double weight(double x, double s) const noexcept;

  /// Image of [0,1] (the maps are increasing or decreasing, so this is the
  /// hull of the endpoint images).
  [[nodiscard]] Interval image(const Interval& domain) const noexcept;

  [[nodiscard]] std::string describe() const;

 private:
  explicit ContractionMap1D(Kind kind) : kind_(kind) {}
  Kind kind_;
};

/// Checked evaluation: x must lie in [0,1].
[[nodiscard]] double eval_map_1d(const ContractionMap1D& map, double x);
/// Checked |theta'(x)|^s: x in [0,1], s >= 0.
[[nodiscard]] double weight_1d(const ContractionMap1D& map, double x, double s);

/// theta_b(z) = 1/(z + b). Requires Re(b) >= 1 and z in the closed disk
/// |z - 1/2| <= 1/2 (checked up to a small slack).
[[nodiscard]] Complex eval_map_2d(Complex b, Complex z);
/// |theta_b'(z)|^s = |z + b|^{-2s}.
[[nodiscard]] double weight_2d(Complex b, Complex z, double s);

enum class DigitSetKind { kExplicit, kI1, kI2, kI3 };

/// Digit set for the complex continued-fraction maps theta_b.
///  I1 = {m + ni : m >= 1, n in Z}
///  I2 = {m + ni : m >= 1, n >= 0}
///  I3 = {m + ni : m in {1,2}, n in {0, +-1, +-2}}
struct DigitSetSpec {
  DigitSetKind kind = DigitSetKind::kI3;
  std::vector<Complex> explicit_digits;
  double truncation_radius = 0.0;  // ignored for finite sets

  [[nodiscard]] bool is_infinite() const noexcept {
    return kind == DigitSetKind::kI1 || kind == DigitSetKind::kI2;
  }
  /// True when the set equals its complex conjugate, which makes the
  /// eigenfunction symmetric about the real axis.
  [[nodiscard]] bool conjugation_closed() const;
  [[nodiscard]] std::string name() const;
};

[[nodiscard]] DigitSetKind parse_digit_set(const std::string& name);

/// Lattice points of the set with |b| <= R (every point for finite sets),
/// sorted lexicographically by (Re b, Im b), no duplicates.
[[nodiscard]] std::vector<Complex> enumerate_digits(const DigitSetSpec& spec);

/// A one-dimensional problem instance: a finite family of maps on a union of
/// intervals. gamma is the smallest digit for continued-fraction families.
struct IfsProblem1D {
  std::string label;
  std::vector<ContractionMap1D> maps;
  double gamma = 1.0;
  std::vector<Interval> domain{{0.0, 1.0}};
  Interval s_domain_hint{0.0, 1.0};
};

/// A two-dimensional problem instance on the disk |z - 1/2| <= 1/2.
struct IfsProblem2D {
  std::string label;
  DigitSetSpec digits;
  double gamma = 1.0;
  Interval s_domain_hint{1.0, 2.0};
};

/// E[m_1, ..., m_p]: digits must be distinct positive integers.
[[nodiscard]] IfsProblem1D continued_fraction_problem(std::vector<int> digits);
/// Both branches of the perturbed middle-thirds system, 0 <= lambda <= 1.
[[nodiscard]] IfsProblem1D perturbed_cantor_problem(double lambda);
[[nodiscard]] IfsProblem2D complex_problem(DigitSetSpec digits);

/// max |theta(x) - x'| over a uniform grid of sample points, where x' is the
/// nearest point of the domain; zero when every sampled image stays inside.
[[nodiscard]] double forward_invariance_defect(const IfsProblem1D& problem,
                                               int samples_per_interval);

}  // namespace hausdim
