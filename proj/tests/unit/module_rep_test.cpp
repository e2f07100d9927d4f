#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ppkit/errors.hpp"
#include "ppkit/module.hpp"
#include "ppkit/pp.hpp"

namespace ppkit {
namespace {

using namespace testing;

TEST(MakeModule, Examples) {
  EXPECT_TRUE(rr()->sameStructure(*regularModule(r2(), Side::Right)));
  EXPECT_EQ(s()->dim(), 1u);
  Matrix one = Matrix::identity(1);
  try {
    makeModule(r2(), Side::Right, 1, {one, one});
    FAIL() << "t acting as 1 must be rejected";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotARepresentation);
  }
  try {
    makeModule(r2(), Side::Right, 2, {one, one});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(HomSpace, Examples) {
  EXPECT_EQ(homSpace(s(), s()).size(), 1u);
  EXPECT_EQ(homSpace(rr(), s()).size(), 1u);
  const auto sr = homSpace(s(), rr());
  ASSERT_EQ(sr.size(), 1u);
  EXPECT_EQ(sr[0].apply(Vec{1}), (Vec{0, 1}));
  EXPECT_THROW(homSpace(s(), ls()), Error);
}

// dim Hom(M, N) equals log_q of the number of intertwiners found by
// enumeration.
TEST(HomSpace, MatchesEnumeration) {
  for (const AlgebraPtr& alg : {r2(), t2(), f3()}) {
    for (Side side : {Side::Right, Side::Left}) {
      const auto grid = moduleGrid(alg, side, 2);
      for (const ModulePtr& m : grid)
        for (const ModulePtr& n : grid) {
          const std::size_t count = bruteHoms(*m, *n).size();
          std::size_t expected = 1;
          for (std::size_t i = 0; i < homSpace(m, n).size(); ++i) expected *= alg->field().order();
          EXPECT_EQ(count, expected);
        }
    }
  }
}

TEST(Presentation, Examples) {
  const RMatrix rel = presentation(s(), {{1}});
  ASSERT_FALSE(rel.empty());
  // The relations generate tR: x t = 0 is among their consequences and 1 is not.
  const Subspace relSpan = generatedSubmodule(*rr(), [&] {
    std::vector<Vec> rows;
    for (const auto& row : rel) rows.push_back(row[0]);
    return rows;
  }());
  EXPECT_EQ(relSpan, Subspace::span(rr()->fieldPtr(), 2, {{0, 1}}));
  for (const auto& row : presentation(rr(), {{1, 0}})) EXPECT_TRUE(linalg::isZero(row[0]));
  try {
    presentation(rr(), {{0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotGenerating);
  }
}

// R^g modulo the relations is isomorphic to M.
TEST(Presentation, RoundTrip) {
  for (const AlgebraPtr& alg : {r2(), t2()}) {
    for (Side side : {Side::Right, Side::Left}) {
      for (const ModulePtr& m : moduleGrid(alg, side, 3)) {
        const Tuple gens = extendToGenerators(*m, {});
        const RMatrix rel = presentation(m, gens);
        const ModulePtr free = freeModule(alg, side, gens.size());
        std::vector<Vec> rows;
        for (const auto& row : rel) rows.push_back(flatten(row));
        const Quotient q = quotientModule(free, generatedSubmodule(*free, rows));
        EXPECT_TRUE(findIsomorphism(q.module, m).has_value()) << "dim " << m->dim();
      }
    }
  }
}

TEST(DualModule, Examples) {
  EXPECT_TRUE(findIsomorphism(dualModule(s()), ls()).has_value());
  const ModulePtr d = dualModule(rr());
  EXPECT_EQ(d->side(), Side::Left);
  EXPECT_EQ(d->dim(), 2u);
  EXPECT_TRUE(findIsomorphism(d, lr()).has_value());
  EXPECT_TRUE(findIsomorphism(dualModule(d), rr()).has_value());
}

TEST(SumQuotient, Examples) {
  const SumQuotient sq = sumQuotient({s(), s()}, std::nullopt);
  EXPECT_EQ(sq.module->dim(), 2u);
  EXPECT_TRUE(sq.module->sameStructure(*power(s(), 2)));
  const SumQuotient q = sumQuotient({rr()}, Subspace::span(rr()->fieldPtr(), 2, {{0, 1}}));
  EXPECT_TRUE(findIsomorphism(q.module, s()).has_value());
  try {
    sumQuotient({rr()}, Subspace::span(rr()->fieldPtr(), 2, {{1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASubmodule);
  }
}

// Morphisms preserve pp formulas.
TEST(ModuleMap, PreservesCorpusFormulas) {
  Rng rng(3);
  const auto corpus = formulaCorpus(r2(), Side::Right, 1, 30, 5);
  const auto grid = moduleGrid(r2(), Side::Right, 3);
  for (const ModulePtr& m : grid)
    for (const ModulePtr& n : grid) {
      const ModuleMap f = randomHom(m, n, rng);
      EXPECT_TRUE(f.commutesWithActions());
      for (const PpFormula& phi : corpus) {
        const SubgroupRep sol = evaluate(phi, m);
        for (const Vec& a : sol.space.basis()) EXPECT_TRUE(satisfies(phi, n, {f.apply(a)}));
      }
    }
}

// The grid is complete in small dimensions: every representation found by
// brute force is isomorphic to a grid module.
TEST(ModuleGrid, CoversAllSmallRepresentations) {
  for (const AlgebraPtr& alg : {r2(), t2(), f3()}) {
    const auto grid = moduleGrid(alg, Side::Right, 2);
    for (std::size_t d = 1; d <= 2; ++d)
      for (const ModulePtr& m : allRepresentations(alg, Side::Right, d)) {
        bool found = false;
        for (const ModulePtr& g : grid)
          if (g->dim() == d && findIsomorphism(m, g)) found = true;
        EXPECT_TRUE(found);
      }
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = i + 1; j < grid.size(); ++j) EXPECT_FALSE(findIsomorphism(grid[i], grid[j]).has_value());
  }
}

}  // namespace
}  // namespace ppkit
