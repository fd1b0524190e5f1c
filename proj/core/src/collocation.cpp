#include "hausdim/collocation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "hausdim/error.hpp"
#include "hausdim/parallel.hpp"

namespace hausdim {

SparseNonnegMatrix::SparseNonnegMatrix(std::vector<std::vector<Entry>> rows) {
  row_ptr_.reserve(rows.size() + 1);
  row_ptr_.push_back(0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    std::sort(row.begin(), row.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (const auto& [col, value] : row) {
      if (col >= rows.size()) {
        throw AssemblyError("column index out of range in row " + std::to_string(r));
      }
      if (!(value >= 0.0) || !std::isfinite(value)) {
        throw AssemblyError("negative or non-finite entry in row " + std::to_string(r));
      }
      if (!col_idx_.empty() && col_idx_.size() > row_ptr_.back() && col_idx_.back() == col) {
        values_.back() += value;
      } else {
        col_idx_.push_back(col);
        values_.push_back(value);
      }
    }
    if (col_idx_.size() == row_ptr_.back()) {
      throw AssemblyError("row " + std::to_string(r) + " is empty");
    }
    row_ptr_.push_back(col_idx_.size());
  }
}

double SparseNonnegMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= size()) throw InputError("SparseNonnegMatrix::at: row out of range");
  const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
  const auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
  const auto it = std::lower_bound(first, last, col);
  if (it == last || *it != col) return 0.0;
  return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

void apply_into(const SparseNonnegMatrix& m, const std::vector<double>& w, std::vector<double>& out) {
  if (w.size() != m.size()) throw InputError("apply: dimension mismatch");
  out.resize(m.size());
  const auto& ptr = m.row_ptr();
  const auto& col = m.col_idx();
  const auto& val = m.values();
  for (std::size_t r = 0; r < m.size(); ++r) {
    double acc = 0.0;
    for (std::size_t k = ptr[r]; k < ptr[r + 1]; ++k) acc += val[k] * w[col[k]];
    out[r] = acc;
  }
}

std::vector<double> apply(const SparseNonnegMatrix& m, const std::vector<double>& w) {
  std::vector<double> out;
  apply_into(m, w, out);
  return out;
}

bool entrywise_le(const SparseNonnegMatrix& a, const SparseNonnegMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t k = a.row_ptr()[r]; k < a.row_ptr()[r + 1]; ++k) {
      const double v = a.values()[k];
      if (v < 0.0 || v > b.at(r, a.col_idx()[k])) return false;
    }
  }
  return true;
}

void dump_matrix(const SparseNonnegMatrix& m, std::ostream& out) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t k = m.row_ptr()[r]; k < m.row_ptr()[r + 1]; ++k) {
      out << r << ' ' << m.col_idx()[k] << ' ' << m.values()[k] << '\n';
    }
  }
  out.flags(flags);
  out.precision(precision);
}

double err_1d(double xl, double xr, double u, double s, const BoundProfile1D& profile) {
  if (!profile.convexity_certified) {
    throw InputError("err_1d: convexity not certified, use err_1d_two_sided");
  }
  return err_1d_two_sided(xl, xr, u, s, profile).high;
}

TwoSidedError err_1d_two_sided(double xl, double xr, double u, double /*s*/,
                               const BoundProfile1D& profile) {
  if (!(xl <= u && u <= xr)) throw InputError("err_1d: point outside its cell");
  const double q = (xr - u) * (u - xl);
  const double slack = std::exp(profile.log_slope * (xr - xl));
  return {q * 0.5 * std::abs(profile.d2_lower) * slack, q * profile.err_curvature * slack};
}

namespace {

// Dense scratch row: accumulates (col, value) pairs and hands them back
// sorted, resetting only the touched slots.
class RowScratch {
 public:
  explicit RowScratch(std::size_t n) : a_(n, 0.0), b_(n, 0.0), seen_(n, 0) {}

  void add(std::size_t col, double a, double b) {
    if (!seen_[col]) {
      seen_[col] = 1;
      touched_.push_back(col);
    }
    a_[col] += a;
    b_[col] += b;
  }

  void flush(std::vector<SparseNonnegMatrix::Entry>& a_row,
             std::vector<SparseNonnegMatrix::Entry>& b_row) {
    std::sort(touched_.begin(), touched_.end());
    a_row.reserve(touched_.size());
    b_row.reserve(touched_.size());
    for (std::size_t c : touched_) {
      if (a_[c] > 0.0) a_row.emplace_back(c, a_[c]);
      b_row.emplace_back(c, b_[c]);
      a_[c] = 0.0;
      b_[c] = 0.0;
      seen_[c] = 0;
    }
    touched_.clear();
  }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::size_t> touched_;
};

using Rows = std::vector<std::vector<SparseNonnegMatrix::Entry>>;

void check_safety(const AssemblyOptions& options) {
  if (!(options.safety_factor >= 1.0) || !std::isfinite(options.safety_factor)) {
    throw ConfigError("safety factor must be finite and >= 1");
  }
}

std::string too_coarse(double err) {
  return "mesh too coarse: interpolation correction " + std::to_string(err) + " >= 1";
}

}  // namespace

BracketMatrices assemble_1d(const IfsProblem1D& problem, const Mesh1D& mesh, double s,
                            const BoundProfile1D& profile, const AssemblyOptions& options) {
  check_safety(options);
  if (!(s >= 0.0)) throw InputError("assemble_1d: s must be nonnegative");
  const std::size_t n = mesh.size();
  const double sf = options.safety_factor;
  const auto& nodes = mesh.nodes();
  Rows a_rows(n);
  Rows b_rows(n);
  std::vector<double> row_max(n, 0.0);

  parallel_for(n, options.threads, [&](std::size_t begin, std::size_t end) {
    RowScratch scratch(n);
    for (std::size_t k = begin; k < end; ++k) {
      const double x = nodes[k];
      for (const ContractionMap1D& map : problem.maps) {
        const double wgt = map.weight(x, s);
        const double u = map(x);
        const Cell1D cell = locate_1d(mesh, u);
        const double uc = std::clamp(u, cell.xl, cell.xr);
        TwoSidedError e = err_1d_two_sided(cell.xl, cell.xr, uc, s, profile);
        e.high *= sf;
        e.low = profile.convexity_certified ? 0.0 : e.low * sf;
        if (e.high >= 1.0) throw AssemblyError(too_coarse(e.high));
        row_max[k] = std::max({row_max[k], e.high, e.low});
        const double up = wgt * (1.0 + e.low) * sf;
        const double down = wgt * (1.0 - e.high) / sf;
        const InterpStencil st = interp_weights_1d(mesh, uc);
        for (int i = 0; i < st.count; ++i) {
          scratch.add(st.node_indices[i], down * st.weights[i], up * st.weights[i]);
        }
      }
      scratch.flush(a_rows[k], b_rows[k]);
    }
  });

  BracketMatrices out;
  out.A = SparseNonnegMatrix(std::move(a_rows));
  out.B = SparseNonnegMatrix(std::move(b_rows));
  out.s = s;
  out.h_eff = mesh.max_spacing();
  out.max_correction = *std::max_element(row_max.begin(), row_max.end());
  return out;
}

SparseNonnegMatrix kernel_1d(const IfsProblem1D& problem, const Mesh1D& mesh, double s) {
  const std::size_t n = mesh.size();
  Rows rows(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = mesh.nodes()[k];
    for (const ContractionMap1D& map : problem.maps) {
      const double wgt = map.weight(x, s);
      const InterpStencil st = interp_weights_1d(mesh, map(x));
      for (int i = 0; i < st.count; ++i) rows[k].emplace_back(st.node_indices[i], wgt * st.weights[i]);
    }
  }
  return SparseNonnegMatrix(std::move(rows));
}

Complex fold_point_2d(Complex w) noexcept {
  return w.imag() < 0.0 ? std::conj(w) : w;
}

namespace {

struct Plan2D {
  std::vector<Complex> digits;
  bool fold = false;
};

Plan2D plan_2d(const IfsProblem2D& problem, const Mesh2D& mesh) {
  Plan2D plan;
  plan.fold = problem.digits.conjugation_closed();
  if (plan.fold != mesh.folded()) {
    throw ConfigError(plan.fold ? "digit set is conjugation closed: use a folded mesh"
                                : "digit set is not conjugation closed: use a full-disk mesh");
  }
  plan.digits = enumerate_digits(problem.digits);
  if (plan.digits.empty()) throw ConfigError("no digits with |b| <= R");
  return plan;
}

// Visits every (digit, stencil) contribution of row `node`.
template <class Visit>
void visit_row_2d(const Mesh2D& mesh, const Plan2D& plan, std::size_t node, double s,
                  Visit&& visit) {
  const Complex z = mesh.node_point(node);
  for (const Complex& b : plan.digits) {
    const Complex t = z + b;
    const double nrm = std::norm(t);
    const double wgt = std::exp(-s * std::log(nrm));
    Complex img = std::conj(t) / nrm;
    if (plan.fold) img = fold_point_2d(img);
    const Cell2D cell = locate_2d(mesh, img);
    visit(wgt, cell, stencil_2d(mesh, cell));
  }
}

}  // namespace

BracketMatrices assemble_2d(const IfsProblem2D& problem, const Mesh2D& mesh, double s,
                            const BoundProfile2D& profile, const AssemblyOptions& options) {
  check_safety(options);
  const Plan2D plan = plan_2d(problem, mesh);
  std::optional<TailTerm> tail;
  if (problem.digits.is_infinite()) {
    const double radius = problem.digits.truncation_radius;
    tail = TailTerm{radius, tail_constant(problem.digits.kind, s, radius)};
  }
  const std::int64_t origin = mesh.node_index(0, 0);
  if (tail && origin < 0) throw AssemblyError("mesh has no node at the origin");

  const std::size_t n = mesh.size();
  const double h = mesh.h();
  const double sf = options.safety_factor;
  const double slack = std::exp(std::sqrt(10.0) * s * h / profile.gamma);
  const double c_high = 0.5 * std::max(profile.dxx_upper, profile.dyy_upper) * slack * sf;
  const double c_low = 0.5 * (std::abs(profile.dxx_lower) + std::abs(profile.dyy_lower)) * slack * sf;

  Rows a_rows(n);
  Rows b_rows(n);
  std::vector<double> row_max(n, 0.0);
  parallel_for(n, options.threads, [&](std::size_t begin, std::size_t end) {
    RowScratch scratch(n);
    for (std::size_t k = begin; k < end; ++k) {
      double worst = 0.0;
      visit_row_2d(mesh, plan, k, s, [&](double wgt, const Cell2D& cell, const InterpStencil& st) {
        const double q = h * h * (cell.tx * (1.0 - cell.tx) + cell.ty * (1.0 - cell.ty));
        const double e_high = q * c_high;
        const double e_low = q * c_low;
        if (e_high >= 1.0) throw AssemblyError(too_coarse(e_high));
        worst = std::max({worst, e_high, e_low});
        const double up = wgt * (1.0 + e_low) * sf;
        const double down = wgt * (1.0 - e_high) / sf;
        for (int i = 0; i < st.count; ++i) {
          scratch.add(st.node_indices[i], down * st.weights[i], up * st.weights[i]);
        }
      });
      if (tail) scratch.add(static_cast<std::size_t>(origin), 0.0, tail->constant * sf);
      row_max[k] = worst;
      scratch.flush(a_rows[k], b_rows[k]);
    }
  });

  BracketMatrices out;
  out.A = SparseNonnegMatrix(std::move(a_rows));
  out.B = SparseNonnegMatrix(std::move(b_rows));
  out.s = s;
  out.h_eff = h;
  out.max_correction = *std::max_element(row_max.begin(), row_max.end());
  out.tail = tail;
  return out;
}

SparseNonnegMatrix kernel_2d(const IfsProblem2D& problem, const Mesh2D& mesh, double s, int threads) {
  const Plan2D plan = plan_2d(problem, mesh);
  const std::size_t n = mesh.size();
  Rows a_rows(n);
  Rows rows(n);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    RowScratch scratch(n);
    for (std::size_t k = begin; k < end; ++k) {
      visit_row_2d(mesh, plan, k, s, [&](double wgt, const Cell2D&, const InterpStencil& st) {
        for (int i = 0; i < st.count; ++i) {
          scratch.add(st.node_indices[i], 0.0, wgt * st.weights[i]);
        }
      });
      scratch.flush(a_rows[k], rows[k]);
    }
  });
  return SparseNonnegMatrix(std::move(rows));
}

}  // namespace hausdim
