#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "hausdim/error.hpp"
#include "hausdim/maps.hpp"

using namespace hausdim;

TEST(Maps, EvalExamples) {
  EXPECT_DOUBLE_EQ(eval_map_1d(ContractionMap1D::moebius_digit(1), 0.0), 1.0);
  EXPECT_NEAR(eval_map_1d(ContractionMap1D::perturbed_cantor(1, 0.0), 0.6), 0.2, 1e-15);
  EXPECT_NEAR(eval_map_1d(ContractionMap1D::perturbed_cantor(2, 1.0), 0.0), 0.6, 1e-15);
}

TEST(Maps, EvalRejectsOutsideUnitInterval) {
  const auto m = ContractionMap1D::moebius_digit(2);
  EXPECT_THROW((void)eval_map_1d(m, -0.1), InputError);
  EXPECT_THROW((void)eval_map_1d(m, 1.5), InputError);
  EXPECT_THROW((void)ContractionMap1D::moebius_digit(0), InputError);
  EXPECT_THROW((void)ContractionMap1D::perturbed_cantor(3, 0.5), InputError);
  EXPECT_THROW((void)ContractionMap1D::perturbed_cantor(1, 1.5), InputError);
}

TEST(Maps, WeightExamples) {
  EXPECT_DOUBLE_EQ(weight_1d(ContractionMap1D::moebius_digit(1), 0.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(weight_1d(ContractionMap1D::moebius_digit(2), 0.0, 0.5), 0.5);
  for (double x : {0.0, 0.3, 1.0}) {
    EXPECT_NEAR(weight_1d(ContractionMap1D::perturbed_cantor(1, 0.0), x, 1.0), 1.0 / 3.0, 1e-15);
  }
  EXPECT_THROW((void)weight_1d(ContractionMap1D::moebius_digit(1), 0.5, -1.0), InputError);
}

TEST(Maps, WeightIsMultiplicativeInS) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(0.0, 1.0), us(0.0, 1.5);
  const std::vector<ContractionMap1D> maps{
      ContractionMap1D::moebius_digit(1), ContractionMap1D::moebius_digit(7),
      ContractionMap1D::perturbed_cantor(1, 0.4), ContractionMap1D::perturbed_cantor(2, 1.0)};
  for (int k = 0; k < 1000; ++k) {
    const double x = ux(rng), s1 = us(rng), s2 = us(rng);
    for (const auto& m : maps) {
      const double lhs = weight_1d(m, x, s1 + s2);
      EXPECT_NEAR(lhs, weight_1d(m, x, s1) * weight_1d(m, x, s2), 1e-14 * lhs);
    }
  }
}

TEST(Maps, ForwardInvarianceOnGrid) {
  for (const auto& m : {ContractionMap1D::moebius_digit(1), ContractionMap1D::moebius_digit(3),
                        ContractionMap1D::perturbed_cantor(1, 0.7),
                        ContractionMap1D::perturbed_cantor(2, 0.7)}) {
    for (int k = 0; k <= 1000; ++k) {
      const double y = m(k / 1000.0);
      EXPECT_GE(y, 0.0);
      EXPECT_LE(y, 1.0);
      EXPECT_GT(std::abs(m.derivative(k / 1000.0)), 0.0);
    }
  }
  EXPECT_EQ(forward_invariance_defect(continued_fraction_problem({1, 2}), 1000), 0.0);
}

TEST(Maps, CantorBranchesDifferByConstant) {
  for (double lambda : {0.0, 0.3, 1.0}) {
    const auto b1 = ContractionMap1D::perturbed_cantor(1, lambda);
    const auto b2 = ContractionMap1D::perturbed_cantor(2, lambda);
    for (double x : {0.0, 0.25, 0.9}) {
      EXPECT_NEAR(b2(x) - b1(x), (2.0 + lambda) / (3.0 + 2.0 * lambda), 1e-15);
    }
  }
}

TEST(Maps, TwoFoldCompositionContracts) {
  // |theta_a(theta_b(x)) - theta_a(theta_b(y))| <= (gamma^2 + 1)^{-2} |x - y|
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int gamma : {1, 2, 5}) {
    const double bound = 1.0 / ((gamma * gamma + 1.0) * (gamma * gamma + 1.0));
    for (int a = gamma; a < gamma + 3; ++a) {
      for (int b = gamma; b < gamma + 3; ++b) {
        const auto ta = ContractionMap1D::moebius_digit(a);
        const auto tb = ContractionMap1D::moebius_digit(b);
        for (int k = 0; k < 200; ++k) {
          const double x = u(rng), y = u(rng);
          if (x == y) continue;
          EXPECT_LE(std::abs(ta(tb(x)) - ta(tb(y))), bound * std::abs(x - y) * (1 + 1e-12));
        }
      }
    }
  }
}

TEST(Maps, ComplexMapExamples) {
  EXPECT_EQ(eval_map_2d({1, 0}, {0, 0}), Complex(1, 0));
  const Complex w = eval_map_2d({1, 1}, {0, 0});
  EXPECT_NEAR(w.real(), 0.5, 1e-15);
  EXPECT_NEAR(w.imag(), -0.5, 1e-15);
  EXPECT_NEAR(eval_map_2d({2, 0}, {1, 0}).real(), 1.0 / 3.0, 1e-15);
  EXPECT_THROW((void)eval_map_2d({0.5, 0}, {0, 0}), InputError);
  EXPECT_THROW((void)eval_map_2d({1, 0}, {1.5, 0}), InputError);
  EXPECT_DOUBLE_EQ(weight_2d({1, 0}, {0, 0}, 1.0), 1.0);
}

TEST(Maps, ComplexMapsKeepTheDisk) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    Complex z(0.5 + 0.5 * u(rng), 0.5 * u(rng));
    if (std::abs(z - 0.5) > 0.5) continue;
    for (const Complex& b : enumerate_digits({DigitSetKind::kI1, {}, 4.0})) {
      EXPECT_LE(std::abs(eval_map_2d(b, z) - 0.5), 0.5 + 1e-15);
    }
  }
}

TEST(Maps, EnumerateExamples) {
  const auto i1 = enumerate_digits({DigitSetKind::kI1, {}, 2.0});
  ASSERT_EQ(i1.size(), 4u);
  EXPECT_EQ(i1[0], Complex(1, -1));
  EXPECT_EQ(i1[1], Complex(1, 0));
  EXPECT_EQ(i1[2], Complex(1, 1));
  EXPECT_EQ(i1[3], Complex(2, 0));
  EXPECT_EQ(enumerate_digits({DigitSetKind::kI2, {}, 2.0}).size(), 3u);
  EXPECT_EQ(enumerate_digits({DigitSetKind::kI3, {}, 0.0}).size(), 10u);
  EXPECT_EQ(enumerate_digits({DigitSetKind::kI3, {}, 1000.0}).size(), 10u);
  EXPECT_THROW((void)enumerate_digits({DigitSetKind::kI1, {}, 1.5}), ConfigError);
}

TEST(Maps, EnumerationIsExactLatticeSet) {
  for (auto kind : {DigitSetKind::kI1, DigitSetKind::kI2}) {
    const double r = 17.3;
    const auto digits = enumerate_digits({kind, {}, r});
    std::set<std::pair<double, double>> seen;
    for (const Complex& b : digits) {
      EXPECT_TRUE(seen.emplace(b.real(), b.imag()).second);
      EXPECT_GE(b.real(), 1.0);
      if (kind == DigitSetKind::kI2) EXPECT_GE(b.imag(), 0.0);
      EXPECT_LE(std::norm(b), r * r);
    }
    std::size_t expected = 0;
    for (int m = 1; m <= 17; ++m) {
      for (int n = -17; n <= 17; ++n) {
        if (kind == DigitSetKind::kI2 && n < 0) continue;
        if (m * m + n * n <= r * r) ++expected;
      }
    }
    EXPECT_EQ(digits.size(), expected);
  }
}

TEST(Maps, ProblemFactories) {
  const auto p = continued_fraction_problem({4, 2, 6});
  EXPECT_EQ(p.label, "E[2,4,6]");
  EXPECT_EQ(p.gamma, 2.0);
  EXPECT_THROW((void)continued_fraction_problem({1, 1}), InputError);
  EXPECT_THROW((void)continued_fraction_problem({}), InputError);
  EXPECT_NEAR(perturbed_cantor_problem(0.5).s_domain_hint.lo, std::log(2.0) / std::log(5.0), 1e-15);

  EXPECT_TRUE((DigitSetSpec{DigitSetKind::kI1, {}, 10}).conjugation_closed());
  EXPECT_FALSE((DigitSetSpec{DigitSetKind::kI2, {}, 10}).conjugation_closed());
  EXPECT_TRUE((DigitSetSpec{DigitSetKind::kI3, {}, 0}).conjugation_closed());
  const DigitSetSpec ex{DigitSetKind::kExplicit, {{2, 1}, {3, 0}}, 0};
  EXPECT_FALSE(ex.conjugation_closed());
  EXPECT_EQ(complex_problem(ex).gamma, 2.0);
  EXPECT_EQ(parse_digit_set("I2"), DigitSetKind::kI2);
  EXPECT_THROW((void)parse_digit_set("I4"), InputError);
}
