#include <gtest/gtest.h>

#include <random>

#include "frobcover/formal_polynomial.hpp"
#include "frobcover/matrix.hpp"
#include "test_support.hpp"

namespace frobcover {
namespace {

using testing::random_form;
using testing::random_polynomial;

class CurveP3 : public ::testing::Test {
 protected:
  CurveContext f = CurveContext::fermat(3);
  CurvePolynomial u = CurvePolynomial::variable(f, 0);
  CurvePolynomial v = CurvePolynomial::variable(f, 1);
  CurvePolynomial w = CurvePolynomial::variable(f, 2);
};

TEST_F(CurveP3, NormalFormExamples) {
  const std::pair<Monomial, std::int64_t> w4[] = {{{0, 0, 4}, 1}};
  EXPECT_EQ(CurvePolynomial::normal_form(f, w4), u.pow(4) + v.pow(4));
  EXPECT_EQ(CurvePolynomial::normal_form(f, w4).to_string(), "u^4 + v^4");
  EXPECT_EQ(w.pow(3).to_string(), "w^3");
  EXPECT_EQ(w.pow(8), (u.pow(4) + v.pow(4)).pow(2));
  EXPECT_EQ(w.pow(8).to_string(), "u^8 - u^4*v^4 + v^8");
}

TEST_F(CurveP3, ArithmeticExamples) {
  EXPECT_EQ(u + CurvePolynomial(f), u);
  EXPECT_EQ((u * u * v * v).to_string(), "u^2*v^2");
  EXPECT_EQ(w.pow(2) * w.pow(2), u.pow(4) + v.pow(4));
  EXPECT_EQ((u + v).p_power().to_string(), "u^3 + v^3");
  EXPECT_EQ(w.pow(2).p_power(), (u.pow(4) + v.pow(4)) * w.pow(2));
  EXPECT_THROW(u + CurvePolynomial::variable(CurveContext::fermat(5), 0), std::invalid_argument);
}

TEST_F(CurveP3, NormalFormInvariant) {
  const CurvePolynomial r = w.pow(11) + u.pow(3) * w.pow(7);
  for (const auto& [m, c] : r.terms()) {
    (void)c;
    EXPECT_LE(m[2], 3u);
  }
}

TEST_F(CurveP3, EvaluationAtCurvePoints) {
  const ExtensionField f3 = make_extension_field(3, 1);
  const CurvePoint base{f3.one(), f3.zero(), f3.one()};
  EXPECT_TRUE((u.pow(4) + v.pow(4) - w.pow(4)).evaluate(base).is_zero());
  EXPECT_TRUE(CurvePolynomial::constant(f, 1).evaluate(base).is_one());
  EXPECT_THROW(u.evaluate({f3.one(), f3.one(), f3.one()}), std::invalid_argument);

  // w^4 and u^4 + v^4 agree on every point over F_9.
  const ExtensionField f9 = make_extension_field(3, 2);
  const std::pair<Monomial, std::int64_t> w4[] = {{{0, 0, 4}, 1}};
  const auto points = enumerate_curve_points(f9, f);
  ASSERT_FALSE(points.empty());
  for (const auto& pt : points) {
    EXPECT_EQ(pt[2].pow(4), (u.pow(4) + v.pow(4)).evaluate(pt));
    EXPECT_EQ(CurvePolynomial::normal_form(f, w4).evaluate(pt), pt[2].pow(4));
  }
}

TEST_F(CurveP3, PointsOverF3) {
  const ExtensionField f3 = make_extension_field(3, 1);
  const auto points = enumerate_curve_points(f3, f);
  auto contains = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    const CurvePoint q{f3.constant(a), f3.constant(b), f3.constant(c)};
    return std::find(points.begin(), points.end(), q) != points.end();
  };
  EXPECT_TRUE(contains(1, 0, 1));
  EXPECT_TRUE(contains(0, 1, 1));
  for (const auto& pt : points) EXPECT_TRUE(on_curve(f, pt));
}

TEST(CurvePoints, F25CountMatchesBruteForce) {
  const CurveContext f = CurveContext::fermat(5);
  const ExtensionField f25 = make_extension_field(5, 2);
  std::size_t brute = 0;
  for (std::uint64_t i = 0; i < 25; ++i) {
    for (std::uint64_t j = 0; j < 25; ++j) {
      for (std::uint64_t k = 0; k < 25; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        const ExtFieldElement a = f25.element_at(i), b = f25.element_at(j), c = f25.element_at(k);
        if (a.pow(6) + b.pow(6) == c.pow(6)) ++brute;
      }
    }
  }
  EXPECT_EQ(enumerate_curve_points(f25, f).size(), brute);
}

TEST(CurvePoints, RandomPointsDistinctAndOnCurve) {
  const CurveContext f = CurveContext::fermat(7);
  const ExtensionField f49 = make_extension_field(7, 2);
  const auto pts = random_curve_points(f49, f, 30, 5);
  ASSERT_EQ(pts.size(), 30u);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_TRUE(on_curve(f, pts[i]));
    EXPECT_FALSE(pts[i][0].is_zero());
    EXPECT_FALSE(pts[i][2].is_zero());
    for (std::size_t j = 0; j < i; ++j) EXPECT_NE(pts[i], pts[j]);
  }
  EXPECT_EQ(random_curve_points(f49, f, 30, 5), pts);
  EXPECT_THROW(random_curve_points(make_extension_field(7, 1), f, 1000, 1), std::runtime_error);
}

TEST_F(CurveP3, FractionEquality) {
  const LocalFraction a = LocalFraction::monomial(f, 1, {0, 2, 0}, 1, 1);
  const LocalFraction b = LocalFraction::monomial(f, 1, {1, 2, 0}, 2, 1);
  EXPECT_EQ(a, b);
  EXPECT_EQ(LocalFraction(w.pow(4)), LocalFraction(u.pow(4) + v.pow(4)));
  EXPECT_FALSE(LocalFraction(w, 1, 0) == LocalFraction(v, 1, 0));
  EXPECT_EQ(LocalFraction(u * u * v, 3, 1).to_string(), "v/(u*w)");
}

TEST_F(CurveP3, FractionReductionSeesHiddenW) {
  const LocalFraction x(u.pow(4) + v.pow(4), 0, 4);
  EXPECT_EQ(x.w_exponent(), 0u);
  EXPECT_EQ(x.to_string(), "1");
  EXPECT_TRUE(x.is_unit());
}

TEST_F(CurveP3, FractionUnitsAndInverse) {
  const LocalFraction x = LocalFraction::monomial(f, 2, {0, 0, 1}, 1, 0);
  ASSERT_TRUE(x.is_unit());
  EXPECT_EQ(x * x.inverse(), LocalFraction::constant(f, 1));
  EXPECT_THROW(LocalFraction(v, 1, 0).inverse(), std::domain_error);
  EXPECT_EQ(x.p_power(), x.pow(3));
}

TEST_F(CurveP3, TransitionMatrixInverse) {
  auto fr = [&](std::int64_t c, Monomial m, std::uint32_t a, std::uint32_t b) {
    return LocalFraction::monomial(f, c, m, a, b);
  };
  const FractionMatrix t(2, 2, {fr(0, {0, 0, 0}, 0, 0), fr(-1, {0, 0, 1}, 1, 0), fr(1, {1, 0, 0}, 0, 1),
                                fr(1, {0, 2, 0}, 1, 1)});
  EXPECT_EQ(determinant(t), LocalFraction::constant(f, 1));
  const FractionMatrix expected(2, 2, {fr(1, {0, 2, 0}, 1, 1), fr(1, {0, 0, 1}, 1, 0), fr(-1, {1, 0, 0}, 0, 1),
                                       fr(0, {0, 0, 0}, 0, 0)});
  EXPECT_EQ(inverse(t), expected);
  const FractionMatrix id = FractionMatrix::identity(2, LocalFraction::constant(f, 0), LocalFraction::constant(f, 1));
  EXPECT_EQ(t * inverse(t), id);
  EXPECT_EQ(determinant(id), LocalFraction::constant(f, 1));
  const FractionMatrix singular(2, 2, {fr(1, {1, 0, 0}, 0, 0), fr(1, {0, 1, 0}, 0, 0), fr(1, {1, 0, 0}, 0, 0),
                                       fr(1, {0, 1, 0}, 0, 0)});
  EXPECT_THROW(inverse(singular), std::domain_error);
}

TEST(CurveProperties, NormalFormIdempotent) {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const CurveContext f = CurveContext::fermat(p);
    for (int s = 0; s < 100; ++s) {
      const CurvePolynomial g = random_polynomial(f, rng, 6, 3 * p);
      std::vector<std::pair<Monomial, std::int64_t>> raw;
      for (const auto& [m, c] : g.terms()) raw.push_back({m, c});
      ASSERT_EQ(CurvePolynomial::normal_form(f, raw), g);
    }
  }
}

TEST(CurveProperties, HomogeneityPreserved) {
  std::mt19937_64 rng(2);
  const CurveContext f = CurveContext::fermat(5);
  for (int s = 0; s < 50; ++s) {
    const std::uint32_t d1 = 1 + rng() % 8, d2 = 1 + rng() % 8;
    const CurvePolynomial a = random_form(f, rng, d1), b = random_form(f, rng, d2);
    const CurvePolynomial ab = a * b;
    ASSERT_TRUE(ab.is_homogeneous());
    if (!ab.is_zero()) { ASSERT_EQ(*ab.homogeneous_degree(), d1 + d2); }
  }
}

TEST(CurveProperties, PPowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const CurveContext f = CurveContext::fermat(p);
    for (int s = 0; s < 50; ++s) {
      const CurvePolynomial g = random_polynomial(f, rng, 4, 6);
      CurvePolynomial prod = CurvePolynomial::constant(f, 1);
      for (std::uint32_t i = 0; i < p; ++i) prod = prod * g;
      ASSERT_EQ(g.p_power(), prod);
    }
  }
}

TEST(CurveProperties, EvaluationIsRingHomomorphism) {
  std::mt19937_64 rng(4);
  const CurveContext f = CurveContext::fermat(5);
  const auto pts = random_curve_points(make_extension_field(5, 2), f, 20, 9);
  for (int s = 0; s < 30; ++s) {
    const CurvePolynomial a = random_polynomial(f, rng, 5, 12), b = random_polynomial(f, rng, 5, 12);
    for (const auto& pt : pts) {
      ASSERT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
      ASSERT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
    }
  }
}

TEST(CurveProperties, AdjugateContract) {
  std::mt19937_64 rng(5);
  const CurveContext f = CurveContext::fermat(3);
  for (int s = 0; s < 20; ++s) {
    std::vector<LocalFraction> e;
    for (int i = 0; i < 4; ++i) {
      e.emplace_back(random_polynomial(f, rng, 3, 5), static_cast<std::uint32_t>(rng() % 3),
                     static_cast<std::uint32_t>(rng() % 3));
    }
    const FractionMatrix a(2, 2, e);
    const LocalFraction zero = LocalFraction::constant(f, 0);
    const FractionMatrix det_i(2, 2, {determinant(a), zero, zero, determinant(a)});
    ASSERT_EQ(a * adjugate(a), det_i);
    ASSERT_EQ(adjugate(a) * a, det_i);
  }
}

TEST(FormalPolynomialTest, DeterminantAndFrobenius) {
  const CurveContext f = CurveContext::fermat(3);
  const FormalMatrix a = indeterminate_matrix(f, FormalSet::Abcd);
  const FormalPolynomial det = determinant(a);
  EXPECT_EQ(det.to_string(), "a*d + (-1)*b*c");
  EXPECT_EQ(determinant(frobenius_twist(a)), det.pow(3));
  EXPECT_EQ(det.p_power(), det.pow(3));
  EXPECT_EQ(det.formal_degrees(), (std::set<std::uint32_t>{2}));
}

TEST(FormalPolynomialTest, SubstitutionAndEvaluation) {
  const CurveContext f = CurveContext::fermat(5);
  const auto g = FormalSet::Greek;
  std::array<FormalPolynomial, 4> swap{FormalPolynomial::variable(f, g, 3), FormalPolynomial::variable(f, g, 2),
                                       FormalPolynomial::variable(f, g, 1), FormalPolynomial::variable(f, g, 0)};
  const FormalPolynomial det = determinant(indeterminate_matrix(f, FormalSet::Abcd));
  EXPECT_EQ(det.substitute(swap), determinant(indeterminate_matrix(f, g)));

  const ExtensionField f25 = make_extension_field(5, 2);
  const auto pt = random_curve_points(f25, f, 1, 2).front();
  const std::array<ExtFieldElement, 4> vals{f25.constant(1), f25.constant(2), f25.constant(3), f25.constant(4)};
  EXPECT_EQ(det.evaluate(pt, vals), f25.constant(4 - 6));
  EXPECT_THROW(det + determinant(indeterminate_matrix(f, g)), std::invalid_argument);
}

}  // namespace
}  // namespace frobcover
