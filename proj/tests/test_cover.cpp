#include <gtest/gtest.h>

#include "frobcover/cover.hpp"
#include "frobcover/matrix_ideal_shift.hpp"

namespace frobcover {
namespace {

LocalFraction fr(const CurveContext& f, std::int64_t c, Monomial m, std::uint32_t a = 0, std::uint32_t b = 0) {
  return LocalFraction::monomial(f, c, m, a, b);
}

const std::uint32_t kPrimes[] = {3, 5, 7, 11, 13};

TEST(TransitionMatrix, EntriesAndDeterminant) {
  const CurveContext f = CurveContext::fermat(5);
  const FractionMatrix t = transition_matrix(f);
  EXPECT_EQ(t(0, 1), fr(f, -1, {0, 0, 1}, 1, 0));
  EXPECT_EQ(t(0, 1).to_string(), "-w/u");
  EXPECT_EQ(determinant(t), LocalFraction::constant(f, 1));
  EXPECT_TRUE(check_transition_matrix(build_catalog(5), t));
}

TEST(HMatrices, DisplayedEntriesAndDeterminants) {
  for (std::uint32_t p : kPrimes) {
    const CurveContext f = CurveContext::fermat(p);
    const HMatrices h = h_matrices(f);
    const LocalFraction one = LocalFraction::constant(f, 1);
    EXPECT_EQ(h.on_u(1, 0), one - fr(f, 1, {0, p + 1, 0}, p + 1, 0));
    EXPECT_EQ(determinant(h.on_u), LocalFraction::constant(f, -2));
    EXPECT_EQ(determinant(h.on_w), LocalFraction::constant(f, -2));
    EXPECT_TRUE(check_determinants(transition_matrix(f), h));
  }
}

TEST(BaseChange, HoldsOnBothCharts) {
  for (std::uint32_t p : kPrimes) {
    const GeneratorCatalog cat = build_catalog(p);
    const CheckResult r = check_base_change(cat, h_matrices(cat.fermat));
    EXPECT_TRUE(r) << p << ": " << r.detail;
  }
}

TEST(BaseChange, ClearedFirstComponentForP5) {
  // u^{2p} s1' = v^2 w^{p-1} s1^p + (u^{p+1} - v^{p+1}) s2^p, first component.
  const GeneratorCatalog cat = build_catalog(5);
  const CurveContext& f = cat.fermat;
  const auto& s1 = cat.at("s1").components;
  const auto& s2 = cat.at("s2").components;
  const auto& s1p = cat.at("s1'").components;
  const CurvePolynomial lhs = s1p[0].shifted(10, 0, 0);
  const CurvePolynomial rhs = s1[0].p_power().shifted(0, 2, 4) +
                              (CurvePolynomial::monomial(f, 1, 6, 0, 0) - CurvePolynomial::monomial(f, 1, 0, 6, 0)) *
                                  s2[0].p_power();
  EXPECT_EQ(lhs, rhs);
}

TEST(Cocycle, HoldsAndDetectsTransposedHW) {
  for (std::uint32_t p : kPrimes) EXPECT_TRUE(cocycle_check(CurveContext::fermat(p))) << p;
  for (std::uint32_t p : {3u, 11u}) {
    const CurveContext f = CurveContext::fermat(p);
    HMatrices h = h_matrices(f);
    h.on_w = h.on_w.transposed();
    EXPECT_FALSE(cocycle_check(transition_matrix(f), h)) << p;
  }
}

TEST(Relations, FourPerChartWithDegreesTwoAndPPlusOne) {
  for (std::uint32_t p : kPrimes) {
    const CoverData data = build_relations(CurveContext::fermat(p));
    EXPECT_TRUE(check_relations(data)) << p;
    for (const auto& r : data.relations_u) EXPECT_EQ(r.formal_degrees(), (std::set<std::uint32_t>{2, p + 1}));
    for (const auto& r : data.relations_w) EXPECT_EQ(r.formal_degrees(), (std::set<std::uint32_t>{2, p + 1}));
  }
}

TEST(Relations, GoldenP3) {
  const CoverData data = build_relations(CurveContext::fermat(3));
  EXPECT_EQ(data.relations_u[0].to_string(), "(u^4)*a^3*d + (-u^4)*b^3*c + (-v^2*w^2)*a*d + (v^2*w^2)*b*c");
  EXPECT_EQ(data.relations_u[1].to_string(),
            "(-u^4)*a^3*b + (u^4)*a*b^3 + (u^4 - v^4)*a*d + (-u^4 + v^4)*b*c");
  EXPECT_EQ(data.relations_u[2].to_string(),
            "(u^4)*c^3*d + (-u^4)*c*d^3 + (-u^4 + v^4)*a*d + (u^4 - v^4)*b*c");
  EXPECT_EQ(data.relations_u[3].to_string(), "(u^4)*a*d^3 + (-u^4)*b*c^3 + (v^2*w^2)*a*d + (-v^2*w^2)*b*c");
}

TEST(Gluing, SubstitutionEntries) {
  const CurveContext f = CurveContext::fermat(5);
  const auto s = gluing_substitution(f);
  const FormalSet g = FormalSet::Greek;
  const FormalPolynomial expected_c = FormalPolynomial::variable(f, g, 0).scaled(fr(f, 1, {1, 0, 0}, 0, 1)) +
                                      FormalPolynomial::variable(f, g, 2).scaled(fr(f, 1, {0, 2, 0}, 1, 1));
  EXPECT_EQ(s[2], expected_c);
  const FormalPolynomial det = s[0] * s[3] - s[1] * s[2];
  EXPECT_EQ(det, determinant(indeterminate_matrix(f, g)));
  for (std::uint32_t p : kPrimes) EXPECT_TRUE(gluing_substitution_check(build_relations(CurveContext::fermat(p)))) << p;
}

TEST(Gluing, InverseTransitionFails) {
  const CoverData data = build_relations(CurveContext::fermat(3));
  EXPECT_FALSE(gluing_substitution_check(data, inverse(data.t)));
}

TEST(SectionRing, CorrectedIdentitiesHoldLiteralFails) {
  for (std::uint32_t p : kPrimes) {
    const CurveContext f = CurveContext::fermat(p);
    EXPECT_TRUE(section_ring_identity_check(f)) << p;
    EXPECT_FALSE(literal_second_membership_holds(f)) << p;
  }
}

TEST(DetPeriodicity, Holds) {
  for (std::uint32_t p : kPrimes) EXPECT_TRUE(det_periodicity_check(build_relations(CurveContext::fermat(p)))) << p;
}

TEST(W0Specialization, MatchesGenerators) {
  for (std::uint32_t p : kPrimes) {
    const CoverData data = build_relations(CurveContext::fermat(p));
    const CheckResult r = w0_specialization_check(data);
    EXPECT_TRUE(r) << p << ": " << r.detail;
    const auto specialized = specialize_w0(data);
    const auto gens = w0_generators(data.t(0, 0).context());
    const LocalFraction up = fr(data.t(0, 0).context(), 1, {p + 1, 0, 0});
    EXPECT_EQ(specialized[1], gens[1].scaled(up));
    EXPECT_EQ(specialized[3], gens[3].scaled(up));
  }
}

TEST(W0Specialization, ReduceAtW0) {
  const CurveContext f = CurveContext::fermat(3);
  const CurvePolynomial v5 = CurvePolynomial::monomial(f, 1, 1, 5, 0) + CurvePolynomial::monomial(f, 1, 0, 0, 2);
  EXPECT_EQ(reduce_at_w0(v5), CurvePolynomial::monomial(f, -1, 5, 1, 0));
}

TEST(TruncatedPolynomialTest, InverseAndArithmetic) {
  const TruncatedPolynomial a(7, 3, {2, 5, 1});
  EXPECT_EQ(a * a.inverse(), TruncatedPolynomial::constant(7, 3, 1));
  EXPECT_THROW(TruncatedPolynomial(7, 3, {0, 1}).inverse(), std::domain_error);
  EXPECT_THROW(TruncatedPolynomial(7, 2, {1, 2, 3}), std::invalid_argument);
  EXPECT_EQ((a - a), TruncatedPolynomial(7, 3, {}));
}

TEST(MatrixIdealShift, TrivialCases) {
  auto m = [](std::vector<std::int64_t> v) {
    std::vector<PrimeFieldElement> e;
    for (auto x : v) e.emplace_back(7, x);
    return Matrix<PrimeFieldElement>(2, 2, e);
  };
  const auto b = m({1, 2, 3, 5});
  const auto c = m({4, 0, 6, 1});
  EXPECT_TRUE(shift_identities(c * b, b, c));
  EXPECT_EQ(c * b - c * b, m({0, 0, 0, 0}));
  const auto id = m({1, 0, 0, 1});
  EXPECT_TRUE(shift_identities(m({3, 1, 4, 1}), id, c));
}

TEST(MatrixIdealShift, RandomSamples) {
  const CheckResult r = matrix_ideal_shift_check(0);
  EXPECT_TRUE(r) << r.detail;
  EXPECT_NE(r.detail.find("400 assertions"), std::string::npos) << r.detail;
  EXPECT_THROW(matrix_ideal_shift_check(0, {9, 3, 1, {2}}), std::invalid_argument);
}

}  // namespace
}  // namespace frobcover
