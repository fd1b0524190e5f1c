#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hausdim/collocation.hpp"

namespace hausdim {

struct CwBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// min_k and max_k of (Mw)_k / w_k. For a strictly positive w these bracket
/// r(M) whatever w is.
[[nodiscard]] CwBounds collatz_wielandt(const SparseNonnegMatrix& m, const std::vector<double>& w);

struct SpectralResult {
  double lambda_est = 0.0;  // ||Mw||_inf for the witness, ||w||_inf = 1
  double cw_lower = 0.0;
  double cw_upper = 0.0;
  std::vector<double> witness;
  long iterations = 0;
  bool converged = false;
  std::vector<double> gap_trace;  // cw_upper - cw_lower per iterate, when requested
};

struct PowerOptions {
  double tol = 1e-12;  // relative: stop when upper - lower <= tol * lower
  long max_iter = 100000;
  std::optional<std::vector<double>> seed;
  bool record_gaps = false;
};

/// Plain power iteration w <- Mw / ||Mw||_inf from the all-ones vector (or the
/// seed). Certificates always come from the last iterate.
[[nodiscard]] SpectralResult power_iterate(const SparseNonnegMatrix& m, const PowerOptions& options = {});

/// Row-major dense copy.
[[nodiscard]] std::vector<double> to_dense(const SparseNonnegMatrix& m);

/// Largest eigenvalue modulus of a dense n x n row-major matrix via a full
/// eigendecomposition. Test oracle only; n <= 400.
[[nodiscard]] double dense_spectral_radius(const std::vector<double>& row_major, std::size_t n);
[[nodiscard]] double dense_spectral_radius(const SparseNonnegMatrix& m);

}  // namespace hausdim
