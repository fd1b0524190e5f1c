#include "hausdim/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "hausdim/error.hpp"

namespace hausdim {

namespace {

CwBounds ratios(const std::vector<double>& mw, const std::vector<double>& w) {
  CwBounds b{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double r = mw[k] / w[k];
    b.lower = std::min(b.lower, r);
    b.upper = std::max(b.upper, r);
  }
  return b;
}

}  // namespace

CwBounds collatz_wielandt(const SparseNonnegMatrix& m, const std::vector<double>& w) {
  if (w.size() != m.size()) throw InputError("collatz_wielandt: dimension mismatch");
  if (w.empty()) throw InputError("collatz_wielandt: empty matrix");
  for (double x : w) {
    if (!(x > 0.0)) throw InputError("collatz_wielandt: witness must be strictly positive");
  }
  return ratios(apply(m, w), w);
}

SpectralResult power_iterate(const SparseNonnegMatrix& m, const PowerOptions& options) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("power_iterate: empty matrix");
  if (!(options.tol > 0.0)) throw InputError("power_iterate: tol must be positive");
  if (options.max_iter < 1) throw InputError("power_iterate: max_iter must be positive");

  std::vector<double> w(n, 1.0);
  if (options.seed) {
    if (options.seed->size() != n) throw InputError("power_iterate: seed has the wrong size");
    w = *options.seed;
    const double top = *std::max_element(w.begin(), w.end());
    for (double& x : w) {
      if (!(x > 0.0)) throw InputError("power_iterate: seed must be strictly positive");
      x /= top;
    }
  }

  SpectralResult res;
  std::vector<double> mw(n);
  for (long it = 1;; ++it) {
    apply_into(m, w, mw);
    const CwBounds cw = ratios(mw, w);
    const double top = *std::max_element(mw.begin(), mw.end());
    if (!(cw.lower > 0.0) || !std::isfinite(top)) {
      throw AssemblyError("power_iterate: iterate lost positivity (zero row or underflow)");
    }
    if (options.record_gaps) res.gap_trace.push_back(cw.upper - cw.lower);
    res.iterations = it;
    res.cw_lower = cw.lower;
    res.cw_upper = cw.upper;
    res.lambda_est = top;
    res.converged = cw.upper - cw.lower <= options.tol * cw.lower;
    if (res.converged || it >= options.max_iter) break;
    for (std::size_t k = 0; k < n; ++k) w[k] = mw[k] / top;
  }
  res.witness = std::move(w);
  return res;
}

std::vector<double> to_dense(const SparseNonnegMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = m.row_ptr()[r]; k < m.row_ptr()[r + 1]; ++k) {
      d[r * n + m.col_idx()[k]] = m.values()[k];
    }
  }
  return d;
}

double dense_spectral_radius(const std::vector<double>& row_major, std::size_t n) {
  if (n == 0 || n > 400) throw InputError("dense_spectral_radius: size must be in 1..400");
  if (row_major.size() != n * n) throw InputError("dense_spectral_radius: size mismatch");
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> a(
      row_major.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const Eigen::MatrixXd copy = a;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(copy, false);
  if (solver.info() != Eigen::Success) throw Error("dense_spectral_radius: eigensolver failed");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double dense_spectral_radius(const SparseNonnegMatrix& m) {
  return dense_spectral_radius(to_dense(m), m.size());
}

}  // namespace hausdim
