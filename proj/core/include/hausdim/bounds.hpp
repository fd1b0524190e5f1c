#pragma once

#include <array>

#include "hausdim/maps.hpp"

namespace hausdim {

/// A priori bounds on the positive eigenfunction v_s of a one-dimensional
/// transfer operator, all relative to v_s itself:
///   |Dv/v| <= d1_abs,   d2_lower <= D^2 v / v <= d2_upper,
///   v(x2) <= v(x1) exp(log_slope |x2 - x1|).
///
/// err_curvature is the coefficient c that multiplies (x_r - u)(u - x_l) in
/// the interpolation correction. The sharp value is d2_upper / 2; the
/// perturbed-Cantor profile charges the full d2_upper, the convention its
/// reference brackets were computed with.
struct BoundProfile1D {
  double s = 0.0;
  double d1_abs = 0.0;
  double d2_lower = 0.0;
  double d2_upper = 0.0;
  double log_slope = 0.0;
  bool convexity_certified = false;
  double err_curvature = 0.0;
};

/// Bounds on D_xx v / v and D_yy v / v for the complex Moebius family, plus the
/// derivative table up to order four (index j-1 holds order j).
struct BoundProfile2D {
  double s = 0.0;
  double gamma = 1.0;
  double dxx_lower = 0.0;
  double dxx_upper = 0.0;
  double dyy_lower = 0.0;
  double dyy_upper = 0.0;
  double log_slope = 0.0;
  std::array<double, 4> dx_lower{};
  std::array<double, 4> dx_upper{};
  std::array<double, 4> dy_lower{};
  std::array<double, 4> dy_upper{};
};

/// Sums over nu >= 0 of the contraction ratios eps_nu and eps_nu^2 (eps_0 = 1).
struct EpsilonSeries {
  double sum_eps = 1.0;
  double sum_eps_sq = 1.0;
};

struct PerturbedConstants {
  double c1 = 0.0;     // sup |b'|/b
  double c2 = 0.0;     // sup |b''|/b
  double m0 = 0.0;     // sup |theta''|
  double kappa = 0.0;  // sup b = contraction ratio of one branch
};

/// (2s)(2s+1)...(2s+p-1) / gamma^p, p in 1..4: the bound on |D^p v| / v for
/// real continued-fraction maps. (-1)^p D^p v > 0 holds as well.
[[nodiscard]] double cf_derivative_bound(double s, double gamma, int p);

/// exp(2 s dist / gamma): ratio bound v(x2)/v(x1) for |x2 - x1| = dist.
[[nodiscard]] double cf_lipschitz_factor(double s, double gamma, double dist);

/// Profile for E[m_1..m_p] with gamma = min m_j. Convexity is always
/// certified here (D^2 v > 0).
[[nodiscard]] BoundProfile1D cf_profile(double s, double gamma);

[[nodiscard]] PerturbedConstants perturbed_constants(double lambda);
/// Geometric closed forms with ratio kappa(lambda).
[[nodiscard]] EpsilonSeries perturbed_epsilon_series(double lambda);

/// Smallest s for which the perturbed-Cantor bounds are stated.
[[nodiscard]] double perturbed_s_min();

/// Checks b''b - (1-s)(b')^2 >= -slack on a uniform grid of [0,1], together
/// with the sign conditions on b', b'', theta', theta''.
[[nodiscard]] bool perturbed_convexity_check(double s, double lambda, int grid_points = 10000,
                                             double slack = 1e-12);

/// Profile for the perturbed middle-thirds family. d2_upper is the
/// family-specific closed form, which does not square sum_eps; see
/// general_profile_1d for the generic two-sided bound.
[[nodiscard]] BoundProfile1D perturbed_profile(double s, double lambda);

/// Generic two-sided bounds from C1, C2, M0 and the epsilon sums.
[[nodiscard]] BoundProfile1D general_profile_1d(double c1, double c2, double m0,
                                                const EpsilonSeries& eps, double s);

[[nodiscard]] BoundProfile2D profile_2d(double s, double gamma);

/// Certified bound c_{R,s} on the discarded tail sum over |b| > R, relative to
/// v_s(0). Requires s > 1 and R >= 3.
[[nodiscard]] double tail_constant(DigitSetKind set, double s, double radius);

}  // namespace hausdim
