#include "hausdim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hausdim/error.hpp"

namespace hausdim {

double cf_derivative_bound(double s, double gamma, int p) {
  if (p < 1 || p > 4) throw InputError("cf_derivative_bound: order must be in 1..4");
  if (!(s > 0.0)) throw InputError("cf_derivative_bound: s must be positive");
  if (!(gamma > 0.0)) throw InputError("cf_derivative_bound: gamma must be positive");
  double rising = 1.0;
  for (int k = 0; k < p; ++k) rising *= 2.0 * s + k;
  return rising / std::pow(gamma, p);
}

double cf_lipschitz_factor(double s, double gamma, double dist) {
  if (!(dist >= 0.0)) throw InputError("cf_lipschitz_factor: distance must be nonnegative");
  return std::exp(2.0 * s * dist / gamma);
}

BoundProfile1D cf_profile(double s, double gamma) {
  BoundProfile1D p;
  p.s = s;
  p.d1_abs = cf_derivative_bound(s, gamma, 1);
  p.d2_lower = 0.0;
  p.d2_upper = cf_derivative_bound(s, gamma, 2);
  p.log_slope = 2.0 * s / gamma;
  p.convexity_certified = true;
  p.err_curvature = 0.5 * p.d2_upper;
  return p;
}

PerturbedConstants perturbed_constants(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InputError("perturbed_constants: lambda must lie in [0,1]");
  }
  const double a = 3.5 * lambda;  // (7/2) lambda
  PerturbedConstants c;
  // sup over [0,1] of (5/2) a u^3 / (1 + a u^5); interior maximum once a > 3/2.
  c.c1 = lambda <= 3.0 / 7.0 ? 2.5 * a / (1.0 + a) : a * std::pow(3.0 / (7.0 * lambda), 0.6);
  // sup of (15/4) a u / (1 + a u^5); interior maximum once a > 1/4.
  c.c2 = lambda <= 1.0 / 14.0 ? 3.75 * a / (1.0 + a)
                              : 3.0 * std::pow(0.25, 0.2) * std::pow(a, 0.8);
  c.m0 = 35.0 * lambda / (4.0 * (3.0 + 2.0 * lambda));
  c.kappa = (2.0 + 7.0 * lambda) / (6.0 + 4.0 * lambda);
  return c;
}

EpsilonSeries perturbed_epsilon_series(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InputError("perturbed_epsilon_series: lambda must lie in [0,1]");
  }
  const double num = 6.0 + 4.0 * lambda;
  EpsilonSeries e;
  e.sum_eps = num / (4.0 - 3.0 * lambda);
  e.sum_eps_sq = num * num / ((4.0 - 3.0 * lambda) * (8.0 + 11.0 * lambda));
  return e;
}

double perturbed_s_min() { return std::log(2.0) / std::log(5.0); }

bool perturbed_convexity_check(double s, double lambda, int grid_points, double slack) {
  if (grid_points < 2) throw InputError("perturbed_convexity_check: need at least 2 points");
  const auto branch = ContractionMap1D::perturbed_cantor(1, lambda);
  const double c = 1.0 / (3.0 + 2.0 * lambda);
  for (int k = 0; k < grid_points; ++k) {
    const double x = static_cast<double>(k) / (grid_points - 1);
    // b = theta', so b' = theta'' and b'' = theta'''.
    const double b = branch.derivative(x);
    const double db = branch.second_derivative(x);
    const double ddb = c * 13.125 * lambda * std::sqrt(x);
    if (b < 0.0 || db < 0.0 || ddb < 0.0) return false;
    if (ddb * b - (1.0 - s) * db * db < -slack) return false;
  }
  return true;
}

BoundProfile1D perturbed_profile(double s, double lambda) {
  if (!(s >= perturbed_s_min() - 1e-15)) {
    throw InputError("perturbed_profile: bounds are only available for s >= log 2 / log 5");
  }
  const PerturbedConstants c = perturbed_constants(lambda);
  const EpsilonSeries e = perturbed_epsilon_series(lambda);

  BoundProfile1D p;
  p.s = s;
  p.d1_abs = s * c.c1 * e.sum_eps;
  p.log_slope = p.d1_abs;
  p.d2_upper = s * s * c.c1 * c.c1 * e.sum_eps +
               s * e.sum_eps_sq * (c.c2 + c.c1 * c.m0 * e.sum_eps);
  p.convexity_certified = perturbed_convexity_check(s, lambda);
  p.d2_lower = p.convexity_certified
                   ? 0.0
                   : -s * e.sum_eps_sq * ((c.c2 + c.c1 * c.c1) + c.c1 * c.m0 * e.sum_eps);
  p.err_curvature = p.d2_upper;
  return p;
}

BoundProfile1D general_profile_1d(double c1, double c2, double m0, const EpsilonSeries& eps,
                                  double s) {
  if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(m0)) {
    throw InputError("general_profile_1d: constants must be finite");
  }
  if (!(eps.sum_eps >= 1.0) || !(eps.sum_eps_sq >= 1.0) || !std::isfinite(eps.sum_eps) ||
      !std::isfinite(eps.sum_eps_sq)) {
    throw InputError("general_profile_1d: epsilon sums must be finite and >= 1");
  }
  const double se = eps.sum_eps;
  const double se2 = eps.sum_eps_sq;
  BoundProfile1D p;
  p.s = s;
  p.d1_abs = s * c1 * se;
  p.log_slope = p.d1_abs;
  p.d2_upper = s * s * c1 * c1 * se * se + s * se2 * (c2 + c1 * m0 * se);
  p.d2_lower = -s * se2 * ((c2 + c1 * c1) + c1 * m0 * se);
  p.convexity_certified = p.d2_lower == 0.0;
  p.err_curvature = 0.5 * p.d2_upper;
  return p;
}

BoundProfile2D profile_2d(double s, double gamma) {
  if (!(s > 0.0)) throw InputError("profile_2d: s must be positive");
  if (!(gamma >= 1.0)) throw InputError("profile_2d: gamma must be >= 1");
  const double g = gamma;
  const double g2 = g * g;
  const double g3 = g2 * g;
  const double g4 = g3 * g;
  const double t = 2.0 * s;

  BoundProfile2D p;
  p.s = s;
  p.gamma = gamma;
  p.dx_lower = {-t / g, -s / (4.0 * g2 * (s + 1.0)), -t * (t + 1.0) * (t + 2.0) / g3,
                -t * (t + 2.0) * (3.0 * s + 3.0) / g4};
  p.dx_upper = {0.0, t * (t + 1.0) / g2, t * (t + 2.0) / (g3 * (s + 2.0) * (s + 2.0)),
                t * (t + 1.0) * (t + 2.0) * (t + 3.0) / g4};
  const double y3 = t * (t + 2.0) / g3 *
                    std::max(25.0 * std::sqrt(5.0) / 72.0, (t + 1.0) / 8.0);
  p.dy_lower = {-s / g, -t / g2, -y3, -t * (t + 2.0) * (3.0 * s + 3.0) / g4};
  p.dy_upper = {s / g, t * (t + 1.0) / (4.0 * g2), y3,
                t * (t + 1.0) * (t + 2.0) * (t + 3.0) / g4};
  p.dxx_lower = p.dx_lower[1];
  p.dxx_upper = p.dx_upper[1];
  p.dyy_lower = p.dy_lower[1];
  p.dyy_upper = p.dy_upper[1];
  p.log_slope = std::sqrt(5.0) * s / g;
  return p;
}

double tail_constant(DigitSetKind set, double s, double radius) {
  if (set != DigitSetKind::kI1 && set != DigitSetKind::kI2) {
    throw InputError("tail_constant: only I1 and I2 have an infinite tail");
  }
  if (!(s > 1.0)) throw InputError("tail_constant: the tail estimate requires s > 1");
  if (!(radius >= 3.0) || !std::isfinite(radius)) {
    throw ConfigError("tail_constant: truncation radius must satisfy R >= 3");
  }
  const double r = radius;
  const double k = set == DigitSetKind::kI1 ? std::numbers::pi / 2.0 : std::numbers::pi / 4.0;
  const double prefactor = std::exp(2.0 * s / std::sqrt(r * r - r)) * std::pow(r / (r - 1.0), s);
  const double axis = std::pow(1.0 / (r - 1.0), 2.0 * s - 1.0) / (2.0 * s - 1.0);
  const double quadrants = k / (s - 1.0) * std::pow(1.0 / (r - std::numbers::sqrt2), 2.0 * s - 2.0);
  return prefactor * (axis + quadrants);
}

}  // namespace hausdim
