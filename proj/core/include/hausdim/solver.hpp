#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hausdim/bounds.hpp"
#include "hausdim/collocation.hpp"
#include "hausdim/maps.hpp"
#include "hausdim/mesh.hpp"
#include "hausdim/spectral.hpp"

namespace hausdim {

/// s -> (A_s, B_s). Every call assembles fresh matrices.
using MatrixFamily = std::function<BracketMatrices(double)>;

/// Bound profile matching the map family of a 1D problem (continued-fraction
/// or perturbed Cantor; mixed families are rejected).
[[nodiscard]] BoundProfile1D profile_for(const IfsProblem1D& problem, double s);

[[nodiscard]] MatrixFamily family_1d(const IfsProblem1D& problem, const Mesh1D& mesh,
                                     const AssemblyOptions& options = {});
[[nodiscard]] MatrixFamily family_2d(const IfsProblem2D& problem, const Mesh2D& mesh,
                                     const AssemblyOptions& options = {});

/// Range of s on which the problem's a priori bounds are available.
[[nodiscard]] Interval valid_s_range(const IfsProblem1D& problem);
[[nodiscard]] Interval valid_s_range(const IfsProblem2D& problem);

enum class Side { kLower, kUpper };

struct Certificate {
  bool ok = false;
  double s = 0.0;
  double value = 0.0;  // cw_lower(A_s) for kLower, cw_upper(B_s) for kUpper
  long iterations = 0;
};

/// kUpper: cw_upper(B_s) <= 1 proves s* <= s. kLower: cw_lower(A_s) >= 1
/// proves s* >= s.
[[nodiscard]] Certificate certify(const MatrixFamily& family, double s, Side side,
                                  const PowerOptions& power = {});

struct SolverOptions {
  double tol_s = 1e-12;
  double tol_eig = 1e-12;
  long max_iter = 100000;
  int max_doublings = 40;
  int max_root_steps = 200;
  std::optional<Interval> s_init;
};

struct Evaluation {
  double s = 0.0;
  double lambda_a = 0.0;  // NaN when A was not iterated at this s
  double lambda_b = 0.0;  // NaN when B was not iterated at this s
};

struct DimensionBracket {
  double s_lower = 0.0;
  double s_upper = 0.0;
  Certificate cert_lower;
  Certificate cert_upper;
  double root_a = 0.0;  // estimated root of log r(A_s)
  double root_b = 0.0;  // estimated root of log r(B_s)
  double h = 0.0;
  std::optional<double> radius;
  std::optional<double> tail_constant;  // c_{R,s} at s_upper
  int evaluations = 0;
  double seconds = 0.0;
  std::vector<Evaluation> trace;

  [[nodiscard]] double width() const noexcept { return s_upper - s_lower; }
};

/// Locates the roots of log r(B_s) and log r(A_s) by safeguarded secant
/// steps, then moves outward from each in doubling steps (starting at tol_s)
/// until the endpoint certifies. `valid` bounds every evaluated s.
/// Throws CertificationError when no bracket can be certified.
[[nodiscard]] DimensionBracket find_bracket(const MatrixFamily& family, const Interval& valid,
                                            const SolverOptions& options = {});

struct MeshParams1D {
  double h = 1e-4;
  int depth = 0;
};

struct MeshParams2D {
  double h = 0.02;
  int margin_rings = 1;
};

[[nodiscard]] DimensionBracket solve_1d(const IfsProblem1D& problem, const MeshParams1D& mesh,
                                        const SolverOptions& options = {},
                                        const AssemblyOptions& assembly = {});
[[nodiscard]] DimensionBracket solve_2d(const IfsProblem2D& problem, const MeshParams2D& mesh,
                                        const SolverOptions& options = {},
                                        const AssemblyOptions& assembly = {});

}  // namespace hausdim
