#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "fixtures.hpp"
#include "ppkit/algebra.hpp"
#include "ppkit/errors.hpp"
#include "ppkit/field.hpp"
#include "ppkit/linalg.hpp"

namespace ppkit {
namespace {

using testing::allVectors;

ErrorKind kindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(Field, RejectsNonPrimesAndLargeOrders) {
  EXPECT_EQ(kindOf([] { Field::make(4); }), ErrorKind::NotAField);
  EXPECT_EQ(kindOf([] { Field::make(2, 7); }), ErrorKind::NotAField);
}

TEST(Field, AxiomsHoldOnSmallFields) {
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    const FieldPtr f = Field::make(p, d);
    const unsigned q = f->order();
    ASSERT_EQ(q, static_cast<unsigned>(std::pow(p, d)));
    for (unsigned a = 0; a < q; ++a) {
      const Scalar x = static_cast<Scalar>(a);
      EXPECT_EQ(f->add(x, f->neg(x)), 0);
      EXPECT_EQ(f->mul(x, 1), x);
      if (a) EXPECT_EQ(f->mul(x, f->inv(x)), 1) << f->name() << " " << a;
      for (unsigned b = 0; b < q; ++b) {
        const Scalar y = static_cast<Scalar>(b);
        EXPECT_EQ(f->add(x, y), f->add(y, x));
        EXPECT_EQ(f->mul(x, y), f->mul(y, x));
        for (unsigned c = 0; c < q; ++c) {
          const Scalar z = static_cast<Scalar>(c);
          EXPECT_EQ(f->mul(x, f->add(y, z)), f->add(f->mul(x, y), f->mul(x, z)));
          EXPECT_EQ(f->mul(x, f->mul(y, z)), f->mul(f->mul(x, y), z));
        }
      }
    }
  }
}

TEST(Algebra, FieldAsAlgebra) {
  const AlgebraPtr k = makeAlgebra(Field::make(2), {"1"}, {{{1}}}, {1});
  EXPECT_EQ(k->dim(), 1u);
  EXPECT_TRUE(k->sameAs(*testing::k2()));
}

TEST(Algebra, DualNumbers) {
  const AlgebraPtr r = makeAlgebra(Field::make(2), {"1", "t"}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {1, 0});
  EXPECT_EQ(r->mul({0, 1}, {0, 1}), (Vec{0, 0}));
  EXPECT_TRUE(r->sameAs(*truncatedPolynomialAlgebra(Field::make(2), 2)));
}

TEST(Algebra, BrokenConstantsAreRejected) {
  // t*t = t with e1 claimed as unit but 1*t = 0: the unit law fails.
  const ErrorKind k = kindOf([] {
    makeAlgebra(Field::make(2), {"1", "t"}, {{{1, 0}, {0, 0}}, {{0, 1}, {0, 1}}}, {1, 0});
  });
  EXPECT_TRUE(k == ErrorKind::BadUnit || k == ErrorKind::NonAssociative);
  EXPECT_EQ(kindOf([] { makeAlgebra(Field::make(2), {"1"}, {{{1, 0}}}, {1}); }), ErrorKind::DimensionMismatch);
}

TEST(Algebra, NonAssociativeNamesTriple) {
  // a*a = b, everything else 0 except unit: (a a) a = b a = 0 but a (a a) = a b = a.
  const FieldPtr f = Field::make(2);
  try {
    makeAlgebra(f, {"1", "a", "b"},
                {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}, {0, 1, 0}}, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}},
                {1, 0, 0});
    FAIL() << "expected NonAssociative";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonAssociative);
    EXPECT_NE(std::string(e.what()).find("a"), std::string::npos);
  }
}

TEST(Algebra, SharedAlgebrasAreAssociativeByOracle) {
  for (const AlgebraPtr& a : {testing::k2(), testing::r2(), testing::f3(), testing::t2()}) {
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j)
        for (std::size_t k = 0; k < a->dim(); ++k)
          EXPECT_EQ(a->mul(a->mul(a->basis(i), a->basis(j)), a->basis(k)),
                    a->mul(a->basis(i), a->mul(a->basis(j), a->basis(k))));
  }
}

TEST(SolveLinear, Examples) {
  const FieldPtr f = Field::make(2);
  LinearSolution id = solveLinear(*f, Matrix::identity(2), {1, 0});
  ASSERT_TRUE(id.particular);
  EXPECT_EQ(*id.particular, (Vec{1, 0}));
  EXPECT_TRUE(id.kernel.empty());

  EXPECT_FALSE(solveLinear(*f, Matrix(1, 1), {1}).particular);

  Matrix row(1, 2);
  row(0, 0) = row(0, 1) = 1;
  LinearSolution k = solveLinear(*f, row, {0});
  ASSERT_EQ(k.kernel.size(), 1u);
  EXPECT_EQ(k.kernel[0], (Vec{1, 1}));

  EXPECT_EQ(kindOf([&] { solveLinear(*f, row, {0, 1}); }), ErrorKind::DimensionMismatch);
}

// Every vector in particular + span(kernel) solves the system and nothing
// else does, checked by enumeration.
TEST(SolveLinear, RandomSystemsMatchEnumeration) {
  testing::Rng rng(7);
  for (unsigned p : {2u, 3u}) {
    const FieldPtr f = Field::make(p);
    std::uniform_int_distribution<unsigned> val(0, p - 1);
    std::uniform_int_distribution<std::size_t> size(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = size(rng), cols = size(rng);
      Matrix a(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = static_cast<Scalar>(val(rng));
      Vec b(rows);
      for (Scalar& x : b) x = static_cast<Scalar>(val(rng));
      const LinearSolution sol = solveLinear(*f, a, b);
      std::set<Vec> solutions;
      for (const Vec& x : allVectors(*f, cols))
        if (linalg::matVec(*f, a, x) == b) solutions.insert(x);
      if (!sol.particular) {
        EXPECT_TRUE(solutions.empty());
        continue;
      }
      const Subspace kernel = Subspace::span(f, cols, sol.kernel);
      EXPECT_EQ(kernel.dim(), sol.kernel.size());
      std::set<Vec> predicted;
      for (const Vec& k : testing::elementsOf(kernel)) predicted.insert(linalg::add(*f, *sol.particular, k));
      EXPECT_EQ(predicted, solutions);
    }
  }
}

TEST(Subspace, IntersectionAndSumMatchEnumeration) {
  testing::Rng rng(11);
  const FieldPtr f = Field::make(3);
  std::uniform_int_distribution<unsigned> val(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    auto randomSpace = [&] {
      std::vector<Vec> vs(2, Vec(3));
      for (Vec& v : vs)
        for (Scalar& x : v) x = static_cast<Scalar>(val(rng));
      return Subspace::span(f, 3, vs);
    };
    const Subspace a = randomSpace(), b = randomSpace();
    const std::set<Vec> ea = testing::elementsOf(a), eb = testing::elementsOf(b);
    std::set<Vec> meet;
    for (const Vec& v : ea)
      if (eb.count(v)) meet.insert(v);
    EXPECT_EQ(testing::elementsOf(a.intersect(b)), meet);
    std::set<Vec> join;
    for (const Vec& x : ea)
      for (const Vec& y : eb) join.insert(linalg::add(*f, x, y));
    EXPECT_EQ(testing::elementsOf(a.sum(b)), join);
  }
}

}  // namespace
}  // namespace ppkit
