#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hausdim/error.hpp"
#include "hausdim/mesh.hpp"

using namespace hausdim;

namespace {

double stencil_eval(const InterpStencil& st, const std::vector<double>& f) {
  double v = 0.0;
  for (int k = 0; k < st.count; ++k) v += st.weights[k] * f[st.node_indices[k]];
  return v;
}

double stencil_sum(const InterpStencil& st) {
  double v = 0.0;
  for (int k = 0; k < st.count; ++k) {
    EXPECT_GT(st.weights[k], 0.0);
    v += st.weights[k];
  }
  return v;
}

}  // namespace

TEST(Mesh1D, NodeCountsAndEndpoints) {
  const Mesh1D m({{0.0, 1.0}}, 0.25);
  ASSERT_EQ(m.size(), 5u);
  EXPECT_EQ(m.nodes().front(), 0.0);
  EXPECT_EQ(m.nodes().back(), 1.0);
  EXPECT_EQ(Mesh1D({{0.0, 1.0}}, 1e-4).size(), 10001u);
  const Mesh1D two({{0.6, 1.0}, {0.0, 0.3}}, 0.1);
  EXPECT_EQ(two.intervals().front().lo, 0.0);
  EXPECT_EQ(two.blocks().size(), 2u);
  EXPECT_EQ(two.size(), 4u + 5u);
  EXPECT_LE(two.max_spacing(), 0.1 + 1e-15);
  EXPECT_EQ(two.interval_of_node(3), 0u);
  EXPECT_EQ(two.interval_of_node(4), 1u);
  const Mesh1D coarse({{0.0, 0.01}}, 1.0);
  EXPECT_EQ(coarse.size(), 2u);
}

TEST(Mesh1D, RejectsBadInput) {
  EXPECT_THROW(Mesh1D({{0.0, 0.5}, {0.4, 1.0}}, 0.1), InputError);
  EXPECT_THROW(Mesh1D({{0.5, 0.5}}, 0.1), InputError);
  EXPECT_THROW(Mesh1D({{0.0, 1.0}}, 0.0), InputError);
  EXPECT_THROW(Mesh1D({}, 0.1), InputError);
}

TEST(Mesh1D, WeightExamples) {
  const Mesh1D m({{0.0, 1.0}}, 0.25);
  const auto a = interp_weights_1d(m, 0.3);
  ASSERT_EQ(a.count, 2);
  EXPECT_EQ(a.node_indices[0], 1u);
  EXPECT_NEAR(a.weights[0], 0.8, 1e-15);
  EXPECT_NEAR(a.weights[1], 0.2, 1e-15);
  const auto b = interp_weights_1d(m, 0.5);
  ASSERT_EQ(b.count, 1);
  EXPECT_EQ(b.node_indices[0], 2u);
  EXPECT_EQ(b.weights[0], 1.0);
  EXPECT_THROW((void)interp_weights_1d(m, 1.5), LookupError);
  EXPECT_THROW((void)interp_weights_1d(Mesh1D({{0.0, 0.3}, {0.6, 1.0}}, 0.1), 0.45), LookupError);
}

TEST(Mesh1D, SnapsNearbyPoints) {
  const Mesh1D m({{0.0, 1.0}}, 0.25);
  const auto st = interp_weights_1d(m, 1.0 + 1e-15);
  ASSERT_EQ(st.count, 1);
  EXPECT_EQ(st.node_indices[0], 4u);
  const Cell1D c = locate_1d(m, 0.25);
  EXPECT_EQ(c.left, 0u);
}

TEST(Mesh1D, PartitionOfUnityAndLinearReproduction) {
  const Mesh1D m({{0.0, 0.37}, {0.5, 1.0}}, 0.013);
  std::vector<double> lin(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) lin[k] = 2.5 * m.nodes()[k] - 0.7;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100000; ++k) {
    double x = u(rng);
    if (x > 0.37 && x < 0.5) x = 0.37 * u(rng);
    const auto st = interp_weights_1d(m, x);
    EXPECT_NEAR(stencil_sum(st), 1.0, 1e-12);
    EXPECT_NEAR(stencil_eval(st, lin), 2.5 * x - 0.7, 1e-12);
  }
}

TEST(Mesh1D, RefinedDomain) {
  const std::vector<ContractionMap1D> cantor{ContractionMap1D::perturbed_cantor(1, 0.0),
                                             ContractionMap1D::perturbed_cantor(2, 0.0)};
  const auto d2 = refine_domain_1d(cantor, 2);
  ASSERT_EQ(d2.size(), 4u);
  EXPECT_NEAR(d2[1].lo, 2.0 / 9.0, 1e-15);
  EXPECT_NEAR(d2[1].hi, 1.0 / 3.0, 1e-15);
  const std::vector<ContractionMap1D> e12{ContractionMap1D::moebius_digit(1),
                                          ContractionMap1D::moebius_digit(2)};
  const auto d1 = refine_domain_1d(e12, 1);
  ASSERT_EQ(d1.size(), 1u);  // [1/3, 1/2] and [1/2, 1] touch
  EXPECT_NEAR(d1[0].lo, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(refine_domain_1d(e12, 0).front(), (Interval{0.0, 1.0}));
  // every image of the refined domain stays inside it
  const auto d = refine_domain_1d(e12, 2);
  for (const auto& map : e12) {
    for (const auto& iv : d) {
      const Interval im = map.image(iv);
      bool inside = false;
      for (const auto& jv : d) inside |= jv.contains(im.lo, 1e-14) && jv.contains(im.hi, 1e-14);
      EXPECT_TRUE(inside);
    }
  }
}

TEST(Mesh2D, RequiresReciprocalInteger) {
  EXPECT_NO_THROW((void)build_mesh_2d(0.02, 1));
  EXPECT_NO_THROW((void)build_mesh_2d(0.01, 1));
  EXPECT_THROW((void)build_mesh_2d(0.3, 1), ConfigError);
  EXPECT_THROW((void)build_mesh_2d(0.0, 1), ConfigError);
  EXPECT_THROW((void)build_mesh_2d(0.1, -1), ConfigError);
}

TEST(Mesh2D, CoversTheDomain) {
  for (bool folded : {true, false}) {
    for (int n : {4, 10, 25}) {
      const Mesh2D m(n, 0, folded);
      std::mt19937_64 rng(n);
      std::uniform_real_distribution<double> u(-0.5, 0.5);
      for (int k = 0; k < 20000; ++k) {
        Complex z(0.5 + u(rng), u(rng));
        if (std::abs(z - 0.5) > 0.5) continue;
        if (folded) z = {z.real(), std::abs(z.imag())};
        const auto st = interp_weights_2d(m, z);
        EXPECT_NEAR(stencil_sum(st), 1.0, 1e-12);
      }
      // boundary extremes
      EXPECT_NO_THROW((void)interp_weights_2d(m, {0.0, 0.0}));
      EXPECT_NO_THROW((void)interp_weights_2d(m, {1.0, 0.0}));
      EXPECT_NO_THROW((void)interp_weights_2d(m, {0.5, 0.5}));
      if (!folded) EXPECT_NO_THROW((void)interp_weights_2d(m, {0.5, -0.5}));
    }
  }
}

TEST(Mesh2D, FoldedHasNoNegativeRows) {
  const Mesh2D m(10, 2, true);
  for (const auto& node : m.nodes()) {
    EXPECT_GE(node.j, 0);
    EXPECT_GE(node.i, 0);
  }
  EXPECT_THROW((void)interp_weights_2d(Mesh2D(10, 0, true), {0.5, -0.3}), LookupError);
  EXPECT_THROW((void)interp_weights_2d(Mesh2D(10, 0, true), {2.0, 0.0}), LookupError);
  EXPECT_GT(Mesh2D(10, 1, true).size(), Mesh2D(10, 0, true).size());
}

TEST(Mesh2D, NodeIndexRoundTrip) {
  const Mesh2D m(20, 1, false);
  for (std::size_t k = 0; k < m.size(); ++k) {
    const auto& nd = m.nodes()[k];
    EXPECT_EQ(m.node_index(nd.i, nd.j), static_cast<std::int64_t>(k));
    EXPECT_EQ(m.node_point(k), Complex(nd.i * m.h(), nd.j * m.h()));
  }
  EXPECT_EQ(m.node_index(-5, 0), -1);
  EXPECT_EQ(m.node_index(1000, 0), -1);
}

TEST(Mesh2D, StencilExampleAndBilinearReproduction) {
  const Mesh2D m(10, 1, true);
  const auto st = interp_weights_2d(m, {0.25, 0.15});
  ASSERT_EQ(st.count, 4);
  const double expect[4] = {0.25, 0.25, 0.25, 0.25};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(st.weights[k], expect[k], 1e-12);
  EXPECT_EQ(st.node_indices[0], static_cast<std::size_t>(m.node_index(2, 1)));
  EXPECT_EQ(st.node_indices[3], static_cast<std::size_t>(m.node_index(3, 2)));

  std::vector<double> f(m.size());
  const auto g = [](Complex z) { return 1.5 - 2.0 * z.real() + 0.75 * z.imag() + 3.0 * z.real() * z.imag(); };
  for (std::size_t k = 0; k < m.size(); ++k) f[k] = g(m.node_point(k));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100000; ++k) {
    const Complex z(u(rng), 0.5 * u(rng));
    if (std::abs(z - 0.5) > 0.5) continue;
    const auto s = interp_weights_2d(m, z);
    EXPECT_NEAR(stencil_sum(s), 1.0, 1e-12);
    EXPECT_NEAR(stencil_eval(s, f), g(z), 1e-12);
  }
}

TEST(Mesh2D, SharedEdgesGoToLowerLeftCell) {
  const Mesh2D m(10, 1, false);
  const Cell2D c = locate_2d(m, {0.3, 0.2});
  EXPECT_EQ(c.i, 2);
  EXPECT_EQ(c.j, 1);
  EXPECT_DOUBLE_EQ(c.tx, 1.0);
  EXPECT_DOUBLE_EQ(c.ty, 1.0);
  const Cell2D z = locate_2d(m, {0.0, 0.0});
  EXPECT_EQ(z.i, 0);
  EXPECT_EQ(z.j, -1);  // unfolded: y = 0 is the top edge of row -1
  const Cell2D f = locate_2d(Mesh2D(10, 1, true), {0.0, 0.0});
  EXPECT_EQ(f.j, 0);
}

TEST(Mesh2D, CoarsestHalfDisk) {
  const Mesh2D m = build_mesh_2d(0.5, 0);
  ASSERT_EQ(m.size(), 6u);
  const std::vector<LatticeNode> expect{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}};
  EXPECT_EQ(m.nodes(), expect);
  EXPECT_EQ(m.cell_count(), 2u);
}
