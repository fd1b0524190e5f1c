#include "hausdim/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "hausdim/error.hpp"

namespace hausdim {

namespace {

constexpr double kSnap = 1e-12;

// Index of the cell (k, k+1] owning scaled coordinate t; coordinate 0 goes to
// cell 0 when clamp_zero is set.
int owner_cell(double t, bool clamp_zero) {
  if (clamp_zero && t == 0.0) return 0;
  return static_cast<int>(std::ceil(t)) - 1;
}

// Same rule in doubled integer units (t = X / 2).
int owner_cell_doubled(long x2, bool clamp_zero) {
  if (clamp_zero && x2 == 0) return 0;
  // ceil(x2 / 2) - 1 for any sign
  const long q = x2 >= 0 ? (x2 + 1) / 2 : -((-x2) / 2);
  return static_cast<int>(q) - 1;
}

double snap(double t) {
  const double r = std::round(t);
  return std::abs(t - r) <= kSnap ? r : t;
}

}  // namespace

Mesh1D::Mesh1D(std::vector<Interval> intervals, double h) : intervals_(std::move(intervals)), h_(h) {
  if (intervals_.empty()) throw InputError("build_mesh_1d: empty interval list");
  if (!(h > 0.0) || !std::isfinite(h)) throw InputError("build_mesh_1d: h must be positive");
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const Interval& iv = intervals_[i];
    if (!(iv.hi > iv.lo)) throw InputError("build_mesh_1d: intervals must have positive length");
    if (i > 0 && !(iv.lo > intervals_[i - 1].hi)) {
      throw InputError("build_mesh_1d: intervals must be disjoint");
    }
  }
  for (const Interval& iv : intervals_) {
    // 1e-12 guard so that len/h = 10000.000000000002 still gives 10000 cells
    const double ratio = iv.length() / h;
    const auto cells = static_cast<std::size_t>(std::max(1.0, std::ceil(ratio * (1.0 - 1e-12))));
    Block block;
    block.interval = iv;
    block.first_node = nodes_.size();
    block.cells = cells;
    block.spacing = iv.length() / static_cast<double>(cells);
    for (std::size_t k = 0; k < cells; ++k) {
      nodes_.push_back(iv.lo + static_cast<double>(k) * block.spacing);
    }
    nodes_.push_back(iv.hi);
    blocks_.push_back(block);
  }
}

std::size_t Mesh1D::interval_of_node(std::size_t node) const {
  if (node >= nodes_.size()) throw InputError("interval_of_node: index out of range");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (node <= blocks_[b].first_node + blocks_[b].cells) return b;
  }
  return blocks_.size() - 1;
}

double Mesh1D::max_spacing() const noexcept {
  double m = 0.0;
  for (const Block& b : blocks_) m = std::max(m, b.spacing);
  return m;
}

std::vector<Interval> refine_domain_1d(const std::vector<ContractionMap1D>& maps, int depth) {
  if (depth < 0) throw InputError("refine_domain_1d: depth must be nonnegative");
  std::vector<Interval> level{{0.0, 1.0}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Interval> next;
    next.reserve(level.size() * maps.size());
    for (const ContractionMap1D& map : maps) {
      for (const Interval& iv : level) next.push_back(map.image(iv));
    }
    std::sort(next.begin(), next.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    level.clear();
    for (const Interval& iv : next) {
      // touching pieces are merged; 1e-14 absorbs rounding in shared endpoints
      if (!level.empty() && iv.lo <= level.back().hi + 1e-14) {
        level.back().hi = std::max(level.back().hi, iv.hi);
      } else {
        level.push_back(iv);
      }
    }
  }
  return level;
}

Mesh1D build_mesh_1d(const std::vector<Interval>& intervals, double h) {
  return Mesh1D(intervals, h);
}

Cell1D locate_1d(const Mesh1D& mesh, double u) {
  const double slack = kSnap * mesh.h();
  const auto& blocks = mesh.blocks();
  const auto& nodes = mesh.nodes();
  for (const Mesh1D::Block& b : blocks) {
    if (!b.interval.contains(u, slack)) continue;
    const double x = std::clamp(u, b.interval.lo, b.interval.hi);
    const double t = snap((x - b.interval.lo) / b.spacing);
    auto c = static_cast<std::ptrdiff_t>(std::ceil(t)) - 1;
    const auto last = static_cast<std::ptrdiff_t>(b.cells) - 1;
    c = std::clamp<std::ptrdiff_t>(c, 0, last);
    std::size_t left = b.first_node + static_cast<std::size_t>(c);
    // the stored nodes are authoritative; step over a rounding mismatch
    if (x < nodes[left] && c > 0) --left;
    if (x > nodes[left + 1] && static_cast<std::ptrdiff_t>(left - b.first_node) < last) ++left;
    return {left, nodes[left], nodes[left + 1]};
  }
  throw LookupError("interp_weights_1d: point " + std::to_string(u) +
                    " lies outside every mesh interval");
}

InterpStencil interp_weights_1d(const Mesh1D& mesh, double u) {
  const Cell1D cell = locate_1d(mesh, u);
  const double x = std::clamp(u, cell.xl, cell.xr);
  const double len = cell.xr - cell.xl;
  InterpStencil st;
  st.push(cell.left, (cell.xr - x) / len);
  st.push(cell.left + 1, (x - cell.xl) / len);
  return st;
}

Mesh2D::Mesh2D(int n_per_unit, int margin_rings, bool folded)
    : h_(1.0 / n_per_unit), n_(n_per_unit), folded_(folded) {
  if (n_per_unit < 1) throw ConfigError("build_mesh_2d: 1/h must be a positive integer");
  if (margin_rings < 0) throw ConfigError("build_mesh_2d: margin_rings must be nonnegative");

  // Doubled units: the disk is centred at (n, 0) with radius n, cell (i, j)
  // spans [2i, 2i+2] x [2j, 2j+2].
  const long n = n_per_unit;
  const long r2 = n * n;
  std::set<std::pair<int, int>> owned;  // (j, i)
  const int j_lo = folded ? 0 : -(n_per_unit + 1) / 2 - 1;
  const int j_hi = (n_per_unit + 1) / 2;
  for (int j = j_lo; j <= j_hi; ++j) {
    for (int i = 0; i <= n_per_unit; ++i) {
      const long px = std::clamp<long>(n, 2L * i, 2L * i + 2);
      const long py = std::clamp<long>(0, 2L * j, 2L * j + 2);
      const long d2 = (px - n) * (px - n) + py * py;
      if (d2 > r2) continue;
      if (d2 == r2) {
        // tangency: the single shared point must be owned by this cell
        if (owner_cell_doubled(px, true) != i || owner_cell_doubled(py, folded) != j) continue;
      }
      owned.emplace(j, i);
    }
  }

  std::set<std::pair<int, int>> cells = owned;
  for (const auto& [j, i] : owned) {
    for (int dj = -margin_rings; dj <= margin_rings; ++dj) {
      for (int di = -margin_rings; di <= margin_rings; ++di) {
        if (i + di < 0) continue;
        if (folded && j + dj < 0) continue;
        cells.emplace(j + dj, i + di);
      }
    }
  }
  cell_count_ = cells.size();

  int i_max = 0;
  int j_max = 0;
  i_min_ = cells.begin()->second;
  j_min_ = cells.begin()->first;
  for (const auto& [j, i] : cells) {
    i_min_ = std::min(i_min_, i);
    j_min_ = std::min(j_min_, j);
    i_max = std::max(i_max, i);
    j_max = std::max(j_max, j);
  }
  width_ = i_max - i_min_ + 2;
  height_ = j_max - j_min_ + 2;
  const auto slots = static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  cells_.assign(slots, 0);
  node_index_.assign(slots, -1);
  std::vector<std::uint8_t> is_node(slots, 0);
  for (const auto& [j, i] : cells) {
    cells_[slot(i, j)] = 1;
    is_node[slot(i, j)] = 1;
    is_node[slot(i + 1, j)] = 1;
    is_node[slot(i, j + 1)] = 1;
    is_node[slot(i + 1, j + 1)] = 1;
  }
  // row-major: y outer, x inner
  for (int j = j_min_; j < j_min_ + height_; ++j) {
    for (int i = i_min_; i < i_min_ + width_; ++i) {
      if (!is_node[slot(i, j)]) continue;
      node_index_[slot(i, j)] = static_cast<std::int64_t>(nodes_.size());
      nodes_.push_back({i, j});
    }
  }
}

std::int64_t Mesh2D::node_index(int i, int j) const noexcept {
  return in_box(i, j) ? node_index_[slot(i, j)] : -1;
}

bool Mesh2D::has_cell(int i, int j) const noexcept {
  return in_box(i, j) && cells_[slot(i, j)] != 0;
}

Mesh2D build_mesh_2d(double h, int margin_rings, bool folded) {
  if (!(h > 0.0) || !std::isfinite(h) || h > 1.0) {
    throw ConfigError("build_mesh_2d: h must be of the form 1/N");
  }
  const double inv = 1.0 / h;
  const double n = std::round(inv);
  if (std::abs(inv - n) > 1e-12 * inv) {
    throw ConfigError("build_mesh_2d: h must be of the form 1/N");
  }
  return Mesh2D(static_cast<int>(n), margin_rings, folded);
}

Cell2D locate_2d(const Mesh2D& mesh, Complex p) {
  const double tx = snap(p.real() * mesh.n_per_unit());
  const double ty = snap(p.imag() * mesh.n_per_unit());
  const int i = owner_cell(tx, true);
  const int j = owner_cell(ty, mesh.folded());
  if (!mesh.has_cell(i, j)) {
    throw LookupError("interp_weights_2d: no mesh cell contains (" + std::to_string(p.real()) +
                      ", " + std::to_string(p.imag()) + ")");
  }
  return {i, j, std::clamp(tx - i, 0.0, 1.0), std::clamp(ty - j, 0.0, 1.0)};
}

InterpStencil stencil_2d(const Mesh2D& mesh, const Cell2D& c) {
  const auto idx = [&mesh](int i, int j) { return static_cast<std::size_t>(mesh.node_index(i, j)); };
  InterpStencil st;
  st.push(idx(c.i, c.j), (1.0 - c.tx) * (1.0 - c.ty));
  st.push(idx(c.i + 1, c.j), c.tx * (1.0 - c.ty));
  st.push(idx(c.i, c.j + 1), (1.0 - c.tx) * c.ty);
  st.push(idx(c.i + 1, c.j + 1), c.tx * c.ty);
  return st;
}

InterpStencil interp_weights_2d(const Mesh2D& mesh, Complex p) {
  return stencil_2d(mesh, locate_2d(mesh, p));
}

}  // namespace hausdim
