#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "frobcover/finite_field.hpp"

namespace frobcover {
namespace {

ExtFieldElement repeated_product(const ExtFieldElement& x, std::uint64_t n) {
  ExtFieldElement r = x.field().one();
  for (std::uint64_t i = 0; i < n; ++i) r = r * x;
  return r;
}

TEST(PrimeField, ArithmeticAndInverse) {
  const PrimeFieldElement a(7, 3), b(7, -2);
  EXPECT_EQ(b.value(), 5u);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ((a * b).value(), 1u);
  EXPECT_EQ(a.inverse(), b);
  EXPECT_EQ((-a).value(), 4u);
  EXPECT_EQ(a.pow(6).value(), 1u);
  EXPECT_THROW(PrimeFieldElement(7, 0).inverse(), std::domain_error);
  EXPECT_THROW(PrimeFieldElement(9, 1), std::invalid_argument);
  EXPECT_THROW(PrimeFieldElement(2, 1), std::invalid_argument);
}

TEST(PrimeField, MixedModuliRejected) {
  EXPECT_THROW(PrimeFieldElement(5, 1) + PrimeFieldElement(7, 1), std::invalid_argument);
}

TEST(ExtensionFieldTest, PrimeFieldCase) {
  const ExtensionField f = make_extension_field(3, 1);
  EXPECT_EQ(f.order(), 3u);
  EXPECT_EQ(f.modulus().size(), 2u);
  EXPECT_EQ(f.modulus().back(), 1u);
}

TEST(ExtensionFieldTest, Deterministic) {
  EXPECT_EQ(make_extension_field(5, 4).modulus(), make_extension_field(5, 4).modulus());
  EXPECT_TRUE(make_extension_field(7, 3) == make_extension_field(7, 3));
}

TEST(ExtensionFieldTest, F81UnitGroupExhaustive) {
  const ExtensionField f = make_extension_field(3, 4);
  ASSERT_EQ(f.order(), 81u);
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const ExtFieldElement a = f.element_at(i);
    EXPECT_EQ(a.index(), i);
    seen.insert(a.index());
    if (!a.is_zero()) { EXPECT_TRUE(a.pow(80).is_one()); }
  }
  EXPECT_EQ(seen.size(), 81u);
}

TEST(ExtensionFieldTest, F25FrobeniusFixedField) {
  const ExtensionField f = make_extension_field(5, 2);
  int fixed = 0;
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const ExtFieldElement a = f.element_at(i);
    if (a.frobenius() == a) ++fixed;
  }
  EXPECT_EQ(fixed, 5);
}

TEST(ExtensionFieldTest, FrobeniusOrbitCloses) {
  for (auto [p, m] : {std::pair{3u, 4u}, {5u, 2u}, {7u, 2u}, {2u + 1u, 3u}}) {
    const ExtensionField f = make_extension_field(p, m);
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(f.order(), 400); ++i) {
      const ExtFieldElement a = f.element_at(i);
      EXPECT_EQ(a.pow(f.order()), a);
    }
  }
}

TEST(ExtensionFieldTest, ExhaustiveFermatUpTo1e4) {
  for (auto [p, m] : {std::pair{3u, 8u}, {5u, 4u}, {7u, 4u}, {11u, 3u}, {13u, 3u}}) {
    const ExtensionField f = make_extension_field(p, m);
    ASSERT_LE(f.order(), 10000u);
    for (std::uint64_t i = 1; i < f.order(); ++i) ASSERT_TRUE(f.element_at(i).pow(f.order() - 1).is_one());
  }
}

TEST(ExtensionFieldTest, FieldAxiomsSampled) {
  std::mt19937_64 rng(11);
  for (auto [p, m] : {std::pair{3u, 2u}, {3u, 4u}, {5u, 2u}, {5u, 8u}, {7u, 6u}, {13u, 2u}}) {
    const ExtensionField f = make_extension_field(p, m);
    auto pick = [&] { return f.element_at(rng() % f.order()); };
    for (int s = 0; s < 1000; ++s) {
      const ExtFieldElement a = pick(), b = pick(), c = pick();
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a * b, b * a);
      ASSERT_TRUE((a - a).is_zero());
      ASSERT_EQ(a + f.zero(), a);
      ASSERT_EQ(a * f.one(), a);
      if (!a.is_zero()) { ASSERT_TRUE((a * a.inverse()).is_one()); }
      ASSERT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
      ASSERT_EQ((a * b).frobenius(), a.frobenius() * b.frobenius());
    }
  }
}

TEST(ExtensionFieldTest, PowMatchesRepeatedProduct) {
  const ExtensionField f = make_extension_field(5, 3);
  for (std::uint64_t i = 0; i < f.order(); i += 7) {
    const ExtFieldElement a = f.element_at(i);
    for (std::uint64_t n : {0u, 1u, 2u, 5u, 13u, 31u}) ASSERT_EQ(a.pow(n), repeated_product(a, n));
  }
}

TEST(ExtensionFieldTest, MixedFieldsRejected) {
  const ExtensionField f = make_extension_field(3, 2), g = make_extension_field(3, 3);
  EXPECT_THROW(f.one() + g.one(), std::invalid_argument);
  EXPECT_THROW(f.zero().inverse(), std::domain_error);
  EXPECT_THROW(make_extension_field(9, 2), std::invalid_argument);
  EXPECT_THROW(make_extension_field(3, 0), std::invalid_argument);
}

TEST(ExtensionFieldTest, EnumerationCap) {
  const ExtensionField f = make_extension_field(5, 8);
  EXPECT_NO_THROW(f.require_enumerable(kDefaultEnumerationCap));
  EXPECT_THROW(f.require_enumerable(1000), EnumerationLimitError);
  EXPECT_THROW(find_generator(f, 1000), EnumerationLimitError);
}

TEST(MultiplicativeOrder, Examples) {
  const ExtensionField f7 = make_extension_field(7, 1);
  EXPECT_EQ(multiplicative_order(f7.constant(2)), 3u);
  EXPECT_EQ(multiplicative_order(make_extension_field(5, 1).one()), 1u);
  EXPECT_EQ(multiplicative_order(make_extension_field(3, 1).constant(2)), 2u);
  EXPECT_THROW(multiplicative_order(f7.zero()), std::domain_error);
  EXPECT_EQ(multiplicative_order_mod(2, 7), 3u);
}

TEST(MultiplicativeOrder, DividesGroupOrder) {
  const ExtensionField f = make_extension_field(3, 4);
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    const ExtFieldElement a = f.element_at(i);
    const std::uint64_t n = multiplicative_order(a);
    EXPECT_EQ(80 % n, 0u);
    EXPECT_TRUE(repeated_product(a, n).is_one());
  }
}

TEST(FindGenerator, PrimeFields) {
  EXPECT_EQ(find_generator(make_extension_field(5, 1)), make_extension_field(5, 1).constant(2));
  EXPECT_EQ(find_generator(make_extension_field(3, 1)), make_extension_field(3, 1).constant(2));
  EXPECT_EQ(find_generator(make_extension_field(7, 1)), make_extension_field(7, 1).constant(3));
}

TEST(FindGenerator, GeneratesExtension) {
  const ExtensionField f = make_extension_field(3, 4);
  const ExtFieldElement g = find_generator(f);
  std::set<std::uint64_t> powers;
  ExtFieldElement x = f.one();
  for (int i = 0; i < 80; ++i) {
    powers.insert(x.index());
    x = x * g;
  }
  EXPECT_EQ(powers.size(), 80u);
}

TEST(SolvePowerEquation, SpecExamples) {
  const ExtensionField f3 = make_extension_field(3, 1);
  const auto r = solve_power_equation(f3, 2, f3.constant(-2));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], f3.constant(1));
  EXPECT_EQ(r[1], f3.constant(2));

  const ExtensionField f9 = make_extension_field(3, 2);
  EXPECT_TRUE(solve_power_equation(f9, 8, f9.constant(2)).empty());
  EXPECT_FALSE(power_equation_solvable(f9.constant(2), 8));

  const ExtensionField f81 = make_extension_field(3, 4);
  EXPECT_EQ(solve_power_equation(f81, 8, f81.constant(2)).size(), 8u);
  EXPECT_TRUE(power_equation_solvable(f81.constant(2), 8));
}

TEST(SolvePowerEquation, CrossCheckedAgainstCriterionAndGcd) {
  for (auto [p, m] : {std::pair{3u, 4u}, {5u, 2u}, {7u, 2u}, {5u, 3u}}) {
    const ExtensionField f = make_extension_field(p, m);
    const std::uint64_t q1 = f.order() - 1;
    for (std::uint64_t n : {2u, 3u, 4u, 6u, 8u, 24u}) {
      for (std::uint64_t i = 1; i < f.order(); i += 5) {
        const ExtFieldElement a = f.element_at(i);
        const auto roots = solve_power_equation(f, n, a);
        for (const auto& x : roots) ASSERT_EQ(repeated_product(x, n), a);
        ASSERT_EQ(!roots.empty(), power_equation_solvable(a, n));
        if (!roots.empty()) { ASSERT_EQ(roots.size(), std::gcd(n, q1)); }
      }
    }
  }
  const ExtensionField f = make_extension_field(5, 1);
  EXPECT_THROW(solve_power_equation(f, 2, f.zero()), std::domain_error);
  EXPECT_THROW(solve_power_equation(f, 0, f.one()), std::domain_error);
}

TEST(IntegerHelpers, CheckedPowAndFactors) {
  EXPECT_EQ(checked_pow(5, 8), 390625u);
  EXPECT_THROW(checked_pow(13, 24), std::overflow_error);
  EXPECT_EQ(prime_factors(48), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(mod_pow(2, 10, 3), 1u);
}

}  // namespace
}  // namespace frobcover
