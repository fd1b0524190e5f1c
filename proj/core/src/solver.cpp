#include "hausdim/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "hausdim/error.hpp"

namespace hausdim {

BoundProfile1D profile_for(const IfsProblem1D& problem, double s) {
  if (problem.maps.empty()) throw ConfigError("problem has no maps");
  bool moebius = true;
  bool cantor = true;
  double lambda = -1.0;
  for (const ContractionMap1D& map : problem.maps) {
    if (const auto* p = std::get_if<PerturbedCantor>(&map.kind())) {
      moebius = false;
      if (lambda >= 0.0 && p->lambda != lambda) cantor = false;
      lambda = p->lambda;
    } else {
      cantor = false;
    }
  }
  if (moebius) return cf_profile(s, problem.gamma);
  if (cantor) return perturbed_profile(s, lambda);
  throw ConfigError("no a priori bounds for a mixed map family");
}

MatrixFamily family_1d(const IfsProblem1D& problem, const Mesh1D& mesh,
                       const AssemblyOptions& options) {
  auto shared = std::make_shared<const Mesh1D>(mesh);
  return [problem, shared, options](double s) {
    return assemble_1d(problem, *shared, s, profile_for(problem, s), options);
  };
}

MatrixFamily family_2d(const IfsProblem2D& problem, const Mesh2D& mesh,
                       const AssemblyOptions& options) {
  auto shared = std::make_shared<const Mesh2D>(mesh);
  return [problem, shared, options](double s) {
    return assemble_2d(problem, *shared, s, profile_2d(s, problem.gamma), options);
  };
}

Interval valid_s_range(const IfsProblem1D& problem) {
  for (const ContractionMap1D& map : problem.maps) {
    if (std::holds_alternative<PerturbedCantor>(map.kind())) return {perturbed_s_min(), 1.0};
  }
  return {1e-6, 2.0};
}

Interval valid_s_range(const IfsProblem2D& problem) {
  // the tail estimate needs s > 1
  if (problem.digits.is_infinite()) return {1.0 + 1e-6, 2.5};
  return {1e-6, 2.5};
}

Certificate certify(const MatrixFamily& family, double s, Side side, const PowerOptions& power) {
  const BracketMatrices m = family(s);
  const SpectralResult r = power_iterate(side == Side::kUpper ? m.B : m.A, power);
  Certificate c;
  c.s = s;
  c.iterations = r.iterations;
  c.value = side == Side::kUpper ? r.cw_upper : r.cw_lower;
  c.ok = side == Side::kUpper ? r.cw_upper <= 1.0 : r.cw_lower >= 1.0;
  return c;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Assembles on demand (one cached s), runs warm-started power iterations and
// remembers the best certificates seen so far.
class Evaluator {
 public:
  Evaluator(const MatrixFamily& family, const SolverOptions& options, DimensionBracket& out)
      : family_(family), out_(out) {
    power_.tol = options.tol_eig;
    power_.max_iter = options.max_iter;
  }

  // log of the spectral-radius estimate of A_s or B_s
  double log_radius(double s, Side side) {
    return std::log(run(s, side).lambda_est);
  }

  Certificate certificate(double s, Side side) {
    const SpectralResult& r = run(s, side);
    Certificate c;
    c.s = s;
    c.iterations = r.iterations;
    c.value = side == Side::kUpper ? r.cw_upper : r.cw_lower;
    c.ok = side == Side::kUpper ? r.cw_upper <= 1.0 : r.cw_lower >= 1.0;
    return c;
  }

  [[nodiscard]] const std::optional<Certificate>& best(Side side) const {
    return side == Side::kUpper ? best_upper_ : best_lower_;
  }

  [[nodiscard]] const BracketMatrices& matrices(double s) {
    if (!cached_ || cached_->s != s) {
      cached_ = family_(s);
      ++out_.evaluations;
    }
    return *cached_;
  }

 private:
  const SpectralResult& run(double s, Side side) {
    const BracketMatrices& m = matrices(s);
    std::optional<std::vector<double>>& seed = side == Side::kUpper ? seed_b_ : seed_a_;
    PowerOptions opts = power_;
    if (seed && seed->size() == m.A.size()) opts.seed = seed;
    last_ = power_iterate(side == Side::kUpper ? m.B : m.A, opts);
    seed = last_.witness;

    if (out_.trace.empty() || out_.trace.back().s != s) out_.trace.push_back({s, kNaN, kNaN});
    (side == Side::kUpper ? out_.trace.back().lambda_b : out_.trace.back().lambda_a) =
        last_.lambda_est;

    if (side == Side::kUpper && last_.cw_upper <= 1.0 && (!best_upper_ || s < best_upper_->s)) {
      best_upper_ = Certificate{true, s, last_.cw_upper, last_.iterations};
      out_.h = m.h_eff;
      if (m.tail) {
        out_.radius = m.tail->radius;
        out_.tail_constant = m.tail->constant;
      }
    }
    if (side == Side::kLower && last_.cw_lower >= 1.0 && (!best_lower_ || s > best_lower_->s)) {
      best_lower_ = Certificate{true, s, last_.cw_lower, last_.iterations};
    }
    return last_;
  }

  const MatrixFamily& family_;
  DimensionBracket& out_;
  PowerOptions power_;
  std::optional<BracketMatrices> cached_;
  std::optional<std::vector<double>> seed_a_;
  std::optional<std::vector<double>> seed_b_;
  std::optional<Certificate> best_upper_;
  std::optional<Certificate> best_lower_;
  SpectralResult last_;
};

struct Root {
  double s = 0.0;
  double slope = 0.0;  // secant slope of the last step, < 0
};

// f is decreasing with f(a) > 0 > f(b). Secant steps from the two most recent
// iterates, bisection whenever a step leaves the bracket.
template <class F>
Root secant_root(F&& f, double a, double fa, double b, double fb, double tol, int max_steps) {
  double x0 = a, f0 = fa, x1 = b, f1 = fb;
  double slope = (fb - fa) / (b - a);
  for (int step = 0; step < max_steps && b - a > tol; ++step) {
    double c = f1 != f0 ? x1 - f1 * (x1 - x0) / (f1 - f0) : 0.5 * (a + b);
    if (!(c > a && c < b)) c = 0.5 * (a + b);
    const double fc = f(c);
    if (c != x1 && fc != f1) slope = (fc - f1) / (c - x1);
    const bool done = std::abs(c - x1) <= 0.25 * tol || fc == 0.0;
    x0 = x1;
    f0 = f1;
    x1 = c;
    f1 = fc;
    if (fc > 0.0) {
      a = c;
    } else {
      b = c;
    }
    if (done) break;
  }
  return {x1, slope < 0.0 ? slope : -1.0};
}

}  // namespace

DimensionBracket find_bracket(const MatrixFamily& family, const Interval& valid,
                              const SolverOptions& options) {
  if (!(options.tol_s > 0.0)) throw ConfigError("tol_s must be positive");
  if (!(options.tol_eig > 0.0)) throw ConfigError("tol_eig must be positive");
  if (!(valid.hi > valid.lo)) throw ConfigError("empty s range");
  const auto started = std::chrono::steady_clock::now();

  DimensionBracket out;
  Evaluator eval(family, options, out);
  const auto f_b = [&](double s) { return eval.log_radius(s, Side::kUpper); };
  const auto f_a = [&](double s) { return eval.log_radius(s, Side::kLower); };

  Interval start = options.s_init.value_or(valid);
  double lo = std::clamp(start.lo, valid.lo, valid.hi);
  double hi = std::clamp(start.hi, valid.lo, valid.hi);
  if (!(hi > lo)) throw ConfigError("initial s interval is empty inside the valid range");

  // sign change for B: f_b(lo) > 0 > f_b(hi), widening geometrically
  double width = hi - lo;
  double f_lo = f_b(lo);
  while (!(f_lo > 0.0)) {
    if (lo <= valid.lo) {
      throw CertificationError("no sign change of log r(B_s) inside the valid s range", lo);
    }
    hi = lo;
    lo = std::max(valid.lo, lo - width);
    width *= 2.0;
    f_lo = f_b(lo);
  }
  double f_hi = f_b(hi);
  while (!(f_hi < 0.0)) {
    if (hi >= valid.hi) {
      throw CertificationError("no sign change of log r(B_s) inside the valid s range", hi);
    }
    lo = hi;
    f_lo = f_hi;
    hi = std::min(valid.hi, hi + width);
    width *= 2.0;
    f_hi = f_b(hi);
  }
  // roots are located well inside tol_s so the nudged endpoints keep most of it
  const double root_tol = 0.1 * options.tol_s;
  const Root rb = secant_root(f_b, lo, f_lo, hi, f_hi, root_tol, options.max_root_steps);
  out.root_b = rb.s;

  // r(A_s) <= r(B_s), so the A root lies at or below the B root
  double a_hi = rb.s;
  double fa_hi = f_a(a_hi);
  double step = std::max(root_tol, 1.5 * std::abs(fa_hi / rb.slope));
  while (!(fa_hi < 0.0)) {
    if (a_hi >= valid.hi) throw CertificationError("log r(A_s) has no root in range", rb.s);
    a_hi = std::min(valid.hi, a_hi + step);
    step *= 2.0;
    fa_hi = f_a(a_hi);
  }
  double a_lo = std::max(valid.lo, a_hi - step);
  double fa_lo = f_a(a_lo);
  while (!(fa_lo > 0.0)) {
    if (a_lo <= valid.lo) throw CertificationError("log r(A_s) has no root in range", rb.s);
    a_hi = a_lo;
    fa_hi = fa_lo;
    step *= 2.0;
    a_lo = std::max(valid.lo, a_lo - step);
    fa_lo = f_a(a_lo);
  }
  const Root ra = secant_root(f_a, a_lo, fa_lo, a_hi, fa_hi, root_tol, options.max_root_steps);
  out.root_a = ra.s;

  // outward nudges from each root until the endpoint certifies
  const auto nudge = [&](double root, Side side) {
    const double dir = side == Side::kUpper ? 1.0 : -1.0;
    double delta = root_tol;
    double s = root;
    for (int k = 0; k <= options.max_doublings; ++k) {
      if (const auto& best = eval.best(side); best && dir * (best->s - s) <= 0.0) return;
      if (s < valid.lo || s > valid.hi) return;
      if (eval.certificate(s, side).ok) return;
      s = root + dir * delta;
      delta *= 2.0;
    }
  };
  nudge(rb.s, Side::kUpper);
  nudge(ra.s, Side::kLower);

  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  const auto& up = eval.best(Side::kUpper);
  const auto& down = eval.best(Side::kLower);
  if (!up || !down) {
    throw CertificationError(
        std::string("mesh too coarse for requested tolerance: could not certify the ") +
            (!up ? "upper" : "lower") + " endpoint",
        0.5 * (rb.s + ra.s));
  }
  if (down->s > up->s) {
    throw CertificationError("inconsistent certificates (lower endpoint above upper)",
                             0.5 * (rb.s + ra.s));
  }
  out.cert_upper = *up;
  out.cert_lower = *down;
  out.s_upper = up->s;
  out.s_lower = down->s;
  return out;
}

DimensionBracket solve_1d(const IfsProblem1D& problem, const MeshParams1D& params,
                          const SolverOptions& options, const AssemblyOptions& assembly) {
  const Mesh1D mesh = build_mesh_1d(refine_domain_1d(problem.maps, params.depth), params.h);
  SolverOptions opts = options;
  if (!opts.s_init) opts.s_init = problem.s_domain_hint;
  DimensionBracket out = find_bracket(family_1d(problem, mesh, assembly), valid_s_range(problem), opts);
  out.h = params.h;
  return out;
}

DimensionBracket solve_2d(const IfsProblem2D& problem, const MeshParams2D& params,
                          const SolverOptions& options, const AssemblyOptions& assembly) {
  const Mesh2D mesh =
      build_mesh_2d(params.h, params.margin_rings, problem.digits.conjugation_closed());
  SolverOptions opts = options;
  if (!opts.s_init) opts.s_init = problem.s_domain_hint;
  return find_bracket(family_2d(problem, mesh, assembly), valid_s_range(problem), opts);
}

}  // namespace hausdim
