#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "hausdim/bounds.hpp"
#include "hausdim/maps.hpp"
#include "hausdim/mesh.hpp"

namespace hausdim {

/// Square row-compressed matrix with nonnegative values, nonempty rows and
/// strictly increasing column indices within each row.
class SparseNonnegMatrix {
 public:
  using Entry = std::pair<std::size_t, double>;

  SparseNonnegMatrix() = default;
  /// Builds from per-row (col, value) lists. Duplicate columns are summed.
  /// Throws AssemblyError on a negative or non-finite value or an empty row.
  explicit SparseNonnegMatrix(std::vector<std::vector<Entry>> rows);

  [[nodiscard]] std::size_t size() const noexcept { return row_ptr_.empty() ? 0 : row_ptr_.size() - 1; }
  [[nodiscard]] std::size_t nnz() const noexcept { return values_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& row_ptr() const noexcept { return row_ptr_; }
  [[nodiscard]] const std::vector<std::size_t>& col_idx() const noexcept { return col_idx_; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  /// Stored value at (row, col), zero when absent.
  [[nodiscard]] double at(std::size_t row, std::size_t col) const;

  friend bool operator==(const SparseNonnegMatrix&, const SparseNonnegMatrix&) = default;

 private:
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> col_idx_;
  std::vector<double> values_;
};

[[nodiscard]] std::vector<double> apply(const SparseNonnegMatrix& m, const std::vector<double>& w);
void apply_into(const SparseNonnegMatrix& m, const std::vector<double>& w, std::vector<double>& out);

/// True when every entry satisfies 0 <= a_ij <= b_ij (same dimension, any
/// sparsity pattern).
[[nodiscard]] bool entrywise_le(const SparseNonnegMatrix& a, const SparseNonnegMatrix& b);

/// Writes "row col value" lines with 17 significant digits.
void dump_matrix(const SparseNonnegMatrix& m, std::ostream& out);

struct TailTerm {
  double radius = 0.0;
  double constant = 0.0;  // c_{R,s}
};

struct BracketMatrices {
  SparseNonnegMatrix A;
  SparseNonnegMatrix B;
  double s = 0.0;
  double h_eff = 0.0;
  double max_correction = 0.0;
  std::optional<TailTerm> tail;
};

struct AssemblyOptions {
  int threads = 1;
  /// Corrections are multiplied by this factor, B entries scaled up by it and
  /// A entries down by it.
  double safety_factor = 1.0 + 1e-12;
};

/// (xr - u)(u - xl) * err_curvature * exp(log_slope * (xr - xl)). Requires a
/// profile with certified convexity.
[[nodiscard]] double err_1d(double xl, double xr, double u, double s, const BoundProfile1D& profile);

struct TwoSidedError {
  double low = 0.0;   // from |d2_lower|, inflates B
  double high = 0.0;  // from d2_upper, deflates A
};

[[nodiscard]] TwoSidedError err_1d_two_sided(double xl, double xr, double u, double s,
                                             const BoundProfile1D& profile);

/// Row k of B: sum_j |theta_j'(x_k)|^s times the interpolation stencil of
/// theta_j(x_k), inflated by (1 + err_low) when convexity is not certified.
/// Row k of A: the same terms scaled by (1 - err_high).
[[nodiscard]] BracketMatrices assemble_1d(const IfsProblem1D& problem, const Mesh1D& mesh, double s,
                                          const BoundProfile1D& profile,
                                          const AssemblyOptions& options = {});

/// The uncorrected collocation matrix (interpolated transfer operator).
[[nodiscard]] SparseNonnegMatrix kernel_1d(const IfsProblem1D& problem, const Mesh1D& mesh, double s);

/// Reflects points of the lower half-plane into the upper one.
[[nodiscard]] Complex fold_point_2d(Complex w) noexcept;

/// Bilinear collocation on the disk for theta_b(z) = 1/(z+b), |b| <= R.
/// The mesh must be folded exactly when the digit set is conjugation closed.
/// For I1/I2 the tail bound c_{R,s} is added to B in the column of node (0,0).
[[nodiscard]] BracketMatrices assemble_2d(const IfsProblem2D& problem, const Mesh2D& mesh, double s,
                                          const BoundProfile2D& profile,
                                          const AssemblyOptions& options = {});

/// The uncorrected bilinear collocation matrix, no tail term.
[[nodiscard]] SparseNonnegMatrix kernel_2d(const IfsProblem2D& problem, const Mesh2D& mesh, double s,
                                           int threads = 1);

}  // namespace hausdim
