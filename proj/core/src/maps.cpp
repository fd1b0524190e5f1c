#include "hausdim/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "hausdim/error.hpp"

namespace hausdim {

namespace {

constexpr double kDiskSlack = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double perturbed_scale(double lambda) { return 1.0 / (3.0 + 2.0 * lambda); }

}  // namespace

ContractionMap1D ContractionMap1D::moebius_digit(int m) {
  if (m < 1) {
    throw InputError("continued-fraction digit must be a positive integer, got " +
                     std::to_string(m));
  }
  return ContractionMap1D(MoebiusDigit{m});
}

ContractionMap1D ContractionMap1D::perturbed_cantor(int branch, double lambda) {
  if (branch != 1 && branch != 2) {
    throw InputError("perturbed Cantor branch must be 1 or 2");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InputError("perturbed Cantor lambda must lie in [0,1]");
  }
  return ContractionMap1D(PerturbedCantor{branch, lambda});
}

double ContractionMap1D::operator()(double x) const noexcept {
  return std::visit(
      Overloaded{
          [x](const MoebiusDigit& d) { return 1.0 / (x + d.m); },
          [x](const PerturbedCantor& p) {
            const double c = perturbed_scale(p.lambda);
            const double base = c * (x + p.lambda * std::pow(x, 3.5));
            return p.branch == 1 ? base : base + (2.0 + p.lambda) * c;
          },
      },
      kind_);
}

double ContractionMap1D::derivative(double x) const noexcept {
  return std::visit(
      Overloaded{
          [x](const MoebiusDigit& d) {
            const double t = x + d.m;
            return -1.0 / (t * t);
          },
          [x](const PerturbedCantor& p) {
            return perturbed_scale(p.lambda) *
                   (1.0 + 3.5 * p.lambda * std::pow(x, 2.5));
          },
      },
      kind_);
}

double ContractionMap1D::second_derivative(double x) const noexcept {
  return std::visit(
      Overloaded{
          [x](const MoebiusDigit& d) {
            const double t = x + d.m;
            return 2.0 / (t * t * t);
          },
          [x](const PerturbedCantor& p) {
            return perturbed_scale(p.lambda) * 8.75 * p.lambda * std::pow(x, 1.5);
          },
      },
      kind_);
}

double ContractionMap1D::weight(double x, double s) const noexcept {
  return std::visit(
      Overloaded{
          [x, s](const MoebiusDigit& d) { return std::pow(x + d.m, -2.0 * s); },
          [this, x, s](const PerturbedCantor&) {
            return std::pow(std::abs(derivative(x)), s);
          },
      },
      kind_);
}

Interval ContractionMap1D::image(const Interval& domain) const noexcept {
  const double a = (*this)(domain.lo);
  const double b = (*this)(domain.hi);
  return {std::min(a, b), std::max(a, b)};
}

std::string ContractionMap1D::describe() const {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&os](const MoebiusDigit& d) { os << "1/(x+" << d.m << ")"; },
                 [&os](const PerturbedCantor& p) {
                   os << "cantor[" << p.branch << ", lambda=" << p.lambda << "]";
                 },
             },
             kind_);
  return os.str();
}

double eval_map_1d(const ContractionMap1D& map, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InputError("eval_map_1d: x must lie in [0,1]");
  }
  return map(x);
}

double weight_1d(const ContractionMap1D& map, double x, double s) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InputError("weight_1d: x must lie in [0,1]");
  }
  if (!(s >= 0.0)) {
    throw InputError("weight_1d: s must be nonnegative");
  }
  return map.weight(x, s);
}

Complex eval_map_2d(Complex b, Complex z) {
  if (!(b.real() >= 1.0)) {
    throw InputError("eval_map_2d: digit must satisfy Re(b) >= 1");
  }
  if (std::abs(z - 0.5) > 0.5 + kDiskSlack) {
    throw InputError("eval_map_2d: z must lie in the disk |z - 1/2| <= 1/2");
  }
  return 1.0 / (z + b);
}

double weight_2d(Complex b, Complex z, double s) {
  return std::pow(std::norm(z + b), -s);
}

bool DigitSetSpec::conjugation_closed() const {
  switch (kind) {
    case DigitSetKind::kI1:
    case DigitSetKind::kI3:
      return true;
    case DigitSetKind::kI2:
      return false;
    case DigitSetKind::kExplicit: {
      for (const Complex& b : explicit_digits) {
        const Complex c = std::conj(b);
        const bool found = std::any_of(explicit_digits.begin(), explicit_digits.end(),
                                       [&c](const Complex& d) { return d == c; });
        if (!found) return false;
      }
      return true;
    }
  }
  return false;
}

std::string DigitSetSpec::name() const {
  switch (kind) {
    case DigitSetKind::kI1:
      return "I1";
    case DigitSetKind::kI2:
      return "I2";
    case DigitSetKind::kI3:
      return "I3";
    case DigitSetKind::kExplicit:
      return "explicit";
  }
  return "?";
}

DigitSetKind parse_digit_set(const std::string& name) {
  if (name == "I1" || name == "i1") return DigitSetKind::kI1;
  if (name == "I2" || name == "i2") return DigitSetKind::kI2;
  if (name == "I3" || name == "i3") return DigitSetKind::kI3;
  throw InputError("unknown digit set '" + name + "' (expected I1, I2 or I3)");
}

std::vector<Complex> enumerate_digits(const DigitSetSpec& spec) {
  std::set<std::pair<long, long>> lattice;
  switch (spec.kind) {
    case DigitSetKind::kI3:
      for (long m = 1; m <= 2; ++m) {
        for (long n = -2; n <= 2; ++n) lattice.emplace(m, n);
      }
      break;
    case DigitSetKind::kI1:
    case DigitSetKind::kI2: {
      const double radius = spec.truncation_radius;
      if (!(radius >= 2.0) || !std::isfinite(radius)) {
        throw ConfigError("digit enumeration needs a finite truncation radius R >= 2");
      }
      const double r2 = radius * radius;
      const long bound = static_cast<long>(std::floor(radius));
      const long n_min = spec.kind == DigitSetKind::kI1 ? -bound : 0;
      for (long m = 1; m <= bound; ++m) {
        for (long n = n_min; n <= bound; ++n) {
          if (static_cast<double>(m * m + n * n) <= r2) lattice.emplace(m, n);
        }
      }
      break;
    }
    case DigitSetKind::kExplicit: {
      std::vector<Complex> out;
      for (const Complex& b : spec.explicit_digits) {
        if (!(b.real() >= 1.0)) {
          throw InputError("explicit digits must satisfy Re(b) >= 1");
        }
        out.push_back(b);
      }
      std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
      });
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  std::vector<Complex> out;
  out.reserve(lattice.size());
  for (const auto& [m, n] : lattice) {
    out.emplace_back(static_cast<double>(m), static_cast<double>(n));
  }
  return out;
}

IfsProblem1D continued_fraction_problem(std::vector<int> digits) {
  if (digits.empty()) throw InputError("digit list is empty");
  std::sort(digits.begin(), digits.end());
  if (std::adjacent_find(digits.begin(), digits.end()) != digits.end()) {
    throw InputError("continued-fraction digits must be distinct");
  }
  IfsProblem1D problem;
  std::ostringstream label;
  label << "E[";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    problem.maps.push_back(ContractionMap1D::moebius_digit(digits[i]));
    label << (i ? "," : "") << digits[i];
  }
  label << "]";
  problem.label = label.str();
  problem.gamma = digits.front();
  problem.domain = {{0.0, 1.0}};
  problem.s_domain_hint = {0.0, 1.0};
  return problem;
}

IfsProblem1D perturbed_cantor_problem(double lambda) {
  IfsProblem1D problem;
  problem.maps = {ContractionMap1D::perturbed_cantor(1, lambda),
                  ContractionMap1D::perturbed_cantor(2, lambda)};
  std::ostringstream label;
  label << "cantor(lambda=" << lambda << ")";
  problem.label = label.str();
  problem.gamma = 1.0;
  problem.domain = {{0.0, 1.0}};
  problem.s_domain_hint = {std::log(2.0) / std::log(5.0), 1.0};
  return problem;
}

IfsProblem2D complex_problem(DigitSetSpec digits) {
  IfsProblem2D problem;
  problem.label = digits.name();
  problem.gamma = 1.0;
  if (digits.kind == DigitSetKind::kExplicit) {
    const auto list = enumerate_digits(digits);
    if (list.empty()) throw InputError("explicit digit set is empty");
    double gamma = list.front().real();
    for (const Complex& b : list) gamma = std::min(gamma, b.real());
    problem.gamma = gamma;
  }
  // the tail bound for infinite sets needs s > 1; start the search inside
  problem.s_domain_hint = digits.is_infinite() ? Interval{1.2, 2.0} : Interval{1.0, 2.0};
  problem.digits = std::move(digits);
  return problem;
}

double forward_invariance_defect(const IfsProblem1D& problem, int samples_per_interval) {
  double defect = 0.0;
  for (const Interval& iv : problem.domain) {
    for (int k = 0; k <= samples_per_interval; ++k) {
      const double x = iv.lo + iv.length() * k / samples_per_interval;
      for (const ContractionMap1D& map : problem.maps) {
        const double y = map(x);
        double best = std::numeric_limits<double>::infinity();
        for (const Interval& target : problem.domain) {
          const double d = y < target.lo ? target.lo - y : (y > target.hi ? y - target.hi : 0.0);
          best = std::min(best, d);
        }
        defect = std::max(defect, best);
      }
    }
  }
  return defect;
}

}  // namespace hausdim
