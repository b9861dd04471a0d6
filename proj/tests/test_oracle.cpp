#include <gtest/gtest.h>

#include "frobcover/oracle.hpp"

namespace frobcover {
namespace {

TEST(EvaluationOracle, PassesForAllPrimes) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const GeneratorCatalog cat = build_catalog(p);
    const CoverData data = build_relations(cat.fermat);
    const CheckResult a = syzygy_evaluation_oracle(cat);
    const CheckResult b = cover_evaluation_oracle(cat, data);
    EXPECT_TRUE(a) << p << ": " << a.detail;
    EXPECT_TRUE(b) << p << ": " << b.detail;
  }
}

TEST(EvaluationOracle, UsesAtLeastTwentyPointsOverFp2) {
  const GeneratorCatalog cat = build_catalog(5);
  const CheckResult r = syzygy_evaluation_oracle(cat, {20, 4});
  EXPECT_NE(r.detail.find("20 points over F_25"), std::string::npos) << r.detail;
}

// Every single-term sign flip in every catalog entry must be caught both by
// the symbolic checks and by the oracle.
TEST(Mutation, SignFlipsInCatalogEntriesAreCaught) {
  for (std::uint32_t p : {3u, 5u}) {
    const GeneratorCatalog clean = build_catalog(p);
    int mutants = 0;
    for (const auto& name : catalog_names()) {
      for (int k = 0; k < 3; ++k) {
        for (std::size_t t = 0; t < clean.at(name).components[k].size(); ++t) {
          GeneratorCatalog cat = clean;
          cat.at(name) = flip_term_sign(clean.at(name), k, t);
          const bool symbolic = check_catalog(cat) && check_kernel_relation(cat) && check_alpha(cat);
          EXPECT_FALSE(symbolic) << p << " " << name << " component " << k << " term " << t;
          EXPECT_FALSE(syzygy_evaluation_oracle(cat)) << p << " " << name << " component " << k << " term " << t;
          ++mutants;
        }
      }
    }
    EXPECT_GT(mutants, 40) << p;
  }
}

TEST(Mutation, CoverDataCorruptionsAreCaught) {
  const GeneratorCatalog cat = build_catalog(5);
  const CoverData clean = build_relations(cat.fermat);

  CoverData transposed = clean;
  transposed.h.on_w = clean.h.on_w.transposed();
  EXPECT_FALSE(cover_evaluation_oracle(cat, transposed));

  CoverData inverted = clean;
  inverted.t = inverse(clean.t);
  EXPECT_FALSE(cover_evaluation_oracle(cat, inverted));

  CoverData swapped = clean;
  std::swap(swapped.relations_u[0], swapped.relations_u[3]);
  EXPECT_FALSE(cover_evaluation_oracle(cat, swapped));
}

TEST(Mutation, CatalogFlipBreaksCoverOracle) {
  GeneratorCatalog cat = build_catalog(3);
  const CoverData data = build_relations(cat.fermat);
  cat.at("s2'") = flip_term_sign(cat.at("s2'"), 0, 0);
  EXPECT_FALSE(cover_evaluation_oracle(cat, data));
}

}  // namespace
}  // namespace frobcover
