#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hausdim/maps.hpp"

namespace hausdim {

/// Up to four nodes with nonnegative weights summing to one. Zero weights are
/// dropped, so a query that lands on a node yields a single entry.
struct InterpStencil {
  std::array<std::size_t, 4> node_indices{};
  std::array<double, 4> weights{};
  int count = 0;

  void push(std::size_t node, double weight) {
    if (weight > 0.0) {
      node_indices[count] = node;
      weights[count] = weight;
      ++count;
    }
  }
};

/// Uniform nodes on each of a list of disjoint intervals. Interval i carries
/// n_i = ceil(len_i / h) cells of spacing len_i / n_i <= h, endpoints exact.
class Mesh1D {
 public:
  struct Block {
    Interval interval;
    std::size_t first_node = 0;
    std::size_t cells = 0;
    double spacing = 0.0;
  };

  Mesh1D(std::vector<Interval> intervals, double h);

  [[nodiscard]] double h() const noexcept { return h_; }
  [[nodiscard]] const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  [[nodiscard]] const std::vector<double>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::vector<Block>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] std::size_t interval_of_node(std::size_t node) const;
  /// Largest cell spacing over all intervals.
  [[nodiscard]] double max_spacing() const noexcept;

 private:
  std::vector<Interval> intervals_;
  double h_;
  std::vector<double> nodes_;
  std::vector<Block> blocks_;
};

/// The mesh cell containing a point: left node index and cell endpoints.
struct Cell1D {
  std::size_t left = 0;
  double xl = 0.0;
  double xr = 0.0;
};

/// Smallest union of closed intervals containing every depth-fold composition
/// of the maps applied to [0,1]; overlapping pieces are merged.
[[nodiscard]] std::vector<Interval> refine_domain_1d(const std::vector<ContractionMap1D>& maps,
                                                     int depth);

[[nodiscard]] Mesh1D build_mesh_1d(const std::vector<Interval>& intervals, double h);

/// Cell containing u. Points within 1e-12 h of an interval are snapped onto
/// it; a point on a shared node belongs to the cell on its left.
[[nodiscard]] Cell1D locate_1d(const Mesh1D& mesh, double u);
[[nodiscard]] InterpStencil interp_weights_1d(const Mesh1D& mesh, double u);

/// Lattice point (i h, j h).
struct LatticeNode {
  int i = 0;
  int j = 0;
  friend bool operator==(const LatticeNode&, const LatticeNode&) = default;
};

/// Square mesh of side h = 1/N covering the upper half-disk
/// {(x - 1/2)^2 + y^2 <= 1/4, y >= 0}, or the full disk when `folded` is
/// false. A point p belongs to the cell that owns it: cells are half-open on
/// the left and bottom, so points on a shared edge go to the left/lower cell.
/// Every cell that owns a point of the domain is present, together with
/// margin_rings layers of neighbouring cells restricted to x >= 0 (and
/// y >= 0 when folded).
class Mesh2D {
 public:
  Mesh2D(int n_per_unit, int margin_rings, bool folded);

  [[nodiscard]] double h() const noexcept { return h_; }
  [[nodiscard]] int n_per_unit() const noexcept { return n_; }
  [[nodiscard]] bool folded() const noexcept { return folded_; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] std::size_t cell_count() const noexcept { return cell_count_; }
  [[nodiscard]] const std::vector<LatticeNode>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] Complex node_point(std::size_t index) const noexcept {
    return {nodes_[index].i * h_, nodes_[index].j * h_};
  }
  /// Row index of lattice node (i, j), or -1 when absent.
  [[nodiscard]] std::int64_t node_index(int i, int j) const noexcept;
  [[nodiscard]] bool has_cell(int i, int j) const noexcept;

 private:
  [[nodiscard]] std::size_t slot(int i, int j) const noexcept {
    return static_cast<std::size_t>(j - j_min_) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(i - i_min_);
  }
  [[nodiscard]] bool in_box(int i, int j) const noexcept {
    return i >= i_min_ && i < i_min_ + width_ && j >= j_min_ && j < j_min_ + height_;
  }

  double h_;
  int n_;
  bool folded_;
  int i_min_ = 0;
  int j_min_ = 0;
  int width_ = 0;   // node columns
  int height_ = 0;  // node rows
  std::vector<std::uint8_t> cells_;        // indexed by lower-left corner slot
  std::vector<std::int64_t> node_index_;   // -1 when absent
  std::vector<LatticeNode> nodes_;
  std::size_t cell_count_ = 0;
};

/// h must equal 1/N for a positive integer N (checked to 1e-12 relative).
[[nodiscard]] Mesh2D build_mesh_2d(double h, int margin_rings, bool folded = true);

/// A located point in the 2D mesh: lower-left cell corner and the offsets
/// of the point inside the cell, tx, ty in [0, 1].
struct Cell2D {
  int i = 0;
  int j = 0;
  double tx = 0.0;
  double ty = 0.0;
};

[[nodiscard]] Cell2D locate_2d(const Mesh2D& mesh, Complex p);
[[nodiscard]] InterpStencil interp_weights_2d(const Mesh2D& mesh, Complex p);
/// Bilinear stencil for an already located point.
[[nodiscard]] InterpStencil stencil_2d(const Mesh2D& mesh, const Cell2D& cell);

}  // namespace hausdim
