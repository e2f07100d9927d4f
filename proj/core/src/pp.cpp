#include "ppkit/pp.hpp"

#include "ppkit/errors.hpp"

namespace ppkit {

bool SubgroupRep::contains(const Tuple& tuple) const {
  if (tuple.size() != arity)
    fail(ErrorKind::LengthMismatch,
         "tuple of length " + std::to_string(tuple.size()) + " against arity " + std::to_string(arity));
  checkTuple(*module, tuple);
  return space.contains(flatten(tuple));
}

Vec flatten(const Tuple& tuple) { return linalg::concat(tuple); }

Tuple unflatten(const Vec& v, std::size_t arity, std::size_t moduleDim) {
  if (moduleDim == 0) return Tuple(arity);
  return linalg::split(v, moduleDim);
}

void checkTuple(const ModuleRep& m, const Tuple& tuple) {
  for (const Vec& v : tuple)
    if (v.size() != m.dim())
      fail(ErrorKind::DimensionMismatch,
           "element of length " + std::to_string(v.size()) + " in a module of dimension " + std::to_string(m.dim()));
}

void checkCompatible(const PpFormula& phi, const PpFormula& psi) {
  if (!sameAlgebra(phi.algebraPtr(), psi.algebraPtr())) fail(ErrorKind::AlgebraMismatch, "formulas over different algebras");
  if (phi.side() != psi.side()) fail(ErrorKind::SideMismatch, "formulas for different sides");
  if (phi.arity() != psi.arity())
    fail(ErrorKind::ArityMismatch,
         "arities " + std::to_string(phi.arity()) + " and " + std::to_string(psi.arity()));
}

namespace {

void checkModule(const PpFormula& phi, const ModuleRep& m) {
  if (!sameAlgebra(phi.algebraPtr(), m.algebraPtr())) fail(ErrorKind::AlgebraMismatch, "formula and module over different algebras");
  if (phi.side() != m.side())
    fail(ErrorKind::SideMismatch, std::string("a ") + to_string(phi.side()) + " formula on a " + to_string(m.side()) +
                                      " module");
}

}  // namespace

SubgroupRep evaluate(const PpFormula& phi, const ModulePtr& m) {
  checkModule(phi, *m);
  const Field& f = m->field();
  const std::size_t d = m->dim();
  const std::size_t vars = phi.variables();
  const std::size_t eqs = phi.equationCount();
  // Rows: one per (equation, coordinate); columns: one per (variable, coordinate).
  Matrix system(eqs * d, vars * d);
  for (std::size_t j = 0; j < eqs; ++j)
    for (std::size_t v = 0; v < vars; ++v) {
      const Vec& c = phi.coefficient(j, v);
      if (linalg::isZero(c)) continue;
      const Matrix p = m->rowAction(c);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) system(j * d + b, v * d + a) = p(a, b);
    }
  const auto kernel = linalg::nullSpace(f, system);
  const Subspace full = Subspace::span(m->fieldPtr(), vars * d, kernel);
  return SubgroupRep{m, phi.arity(), full.projectPrefix(phi.arity() * d)};
}

bool satisfies(const PpFormula& phi, const ModulePtr& m, const Tuple& tuple) {
  return evaluate(phi, m).contains(tuple);
}

PpFormula conj(const PpFormula& phi, const PpFormula& psi) {
  checkCompatible(phi, psi);
  FormulaBuilder b(phi.algebraPtr(), phi.side(), phi.arity());
  std::vector<std::size_t> free(phi.arity());
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = i;
  b.embed(phi, free);
  b.embed(psi, free);
  return b.build();
}

PpFormula sum(const PpFormula& phi, const PpFormula& psi) {
  checkCompatible(phi, psi);
  const std::size_t n = phi.arity();
  const Algebra& alg = phi.algebra();
  FormulaBuilder b(phi.algebraPtr(), phi.side(), n);
  const std::size_t first = b.freshVariables(n);
  const std::size_t second = b.freshVariables(n);
  const Vec minusOne = alg.neg(alg.unit());
  std::vector<std::size_t> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = first + i;
    right[i] = second + i;
    b.addEquation({{i, alg.unit()}, {left[i], minusOne}, {right[i], minusOne}});
  }
  b.embed(phi, left);
  b.embed(psi, right);
  return b.build();
}

PpFormula dual(const PpFormula& phi) {
  const Algebra& alg = phi.algebra();
  const std::size_t n = phi.arity();
  const std::size_t m = phi.equationCount();
  FormulaBuilder b(phi.algebraPtr(), opposite(phi.side()), n);
  const std::size_t z = b.freshVariables(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<std::size_t, Vec>> terms{{i, alg.unit()}};
    for (std::size_t j = 0; j < m; ++j)
      if (!linalg::isZero(phi.coefficient(j, i))) terms.emplace_back(z + j, alg.neg(phi.coefficient(j, i)));
    b.addEquation(terms);
  }
  for (std::size_t k = 0; k < phi.bound(); ++k) {
    std::vector<std::pair<std::size_t, Vec>> terms;
    for (std::size_t j = 0; j < m; ++j)
      if (!linalg::isZero(phi.coefficient(j, n + k))) terms.emplace_back(z + j, phi.coefficient(j, n + k));
    if (!terms.empty()) b.addEquation(terms);
  }
  return b.build();
}

PointedModule freeRealisation(const PpFormula& phi) {
  const AlgebraPtr& alg = phi.algebraPtr();
  const std::size_t vars = phi.variables();
  const ModulePtr free = freeModule(alg, phi.side(), vars);
  std::vector<Vec> relations;
  for (const auto& eq : phi.equations()) relations.push_back(linalg::concat(eq));
  const Subspace sub = generatedSubmodule(*free, relations);
  const Quotient q = quotientModule(free, sub);
  Tuple tuple;
  for (std::size_t i = 0; i < phi.arity(); ++i) {
    Vec generator(free->dim(), 0);
    const Vec unit = alg->unit();
    for (std::size_t c = 0; c < alg->dim(); ++c) generator[i * alg->dim() + c] = unit[c];
    tuple.push_back(q.projection.apply(generator));
  }
  return PointedModule{q.module, std::move(tuple)};
}

PpFormula ppTypeGenerator(const ModulePtr& m, const Tuple& tuple) {
  checkTuple(*m, tuple);
  const Tuple gens = extendToGenerators(*m, tuple);
  const RMatrix rows = presentation(m, gens);
  return PpFormula(m->algebraPtr(), m->side(), tuple.size(), gens.size() - tuple.size(), rows).normalized();
}

bool leqAbsolute(const PpFormula& phi, const PpFormula& psi) {
  checkCompatible(phi, psi);
  const PointedModule c = freeRealisation(phi);
  return satisfies(psi, c.module, c.tuple);
}

bool equivalentAbsolute(const PpFormula& phi, const PpFormula& psi) {
  return leqAbsolute(phi, psi) && leqAbsolute(psi, phi);
}

bool leqRelative(const PpFormula& phi, const PpFormula& psi, const std::vector<ModulePtr>& generators) {
  checkCompatible(phi, psi);
  if (generators.empty()) fail(ErrorKind::EmptyContext, "relative order needs at least one generator");
  for (const ModulePtr& g : generators)
    if (!evaluate(psi, g).space.contains(evaluate(phi, g).space)) return false;
  return true;
}

PpFormula substitute(const PpFormula& phi, const RMatrix& t) {
  const Algebra& alg = phi.algebra();
  const std::size_t k = phi.arity();
  for (const auto& row : t) {
    if (row.size() != k)
      fail(ErrorKind::DimensionMismatch,
           "substitution row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(k));
    for (const Vec& c : row)
      if (c.size() != alg.dim()) fail(ErrorKind::DimensionMismatch, "substitution entry is not an algebra element");
  }
  const std::size_t n = t.size();
  FormulaBuilder b(phi.algebraPtr(), phi.side(), n);
  const std::size_t old = b.freshVariables(k);
  std::vector<std::size_t> oldVars(k);
  for (std::size_t o = 0; o < k; ++o) {
    oldVars[o] = old + o;
    std::vector<std::pair<std::size_t, Vec>> terms{{old + o, alg.neg(alg.unit())}};
    for (std::size_t i = 0; i < n; ++i)
      if (!linalg::isZero(t[i][o])) terms.emplace_back(i, t[i][o]);
    b.addEquation(terms);
  }
  b.embed(phi, oldVars);
  return b.build();
}

PpFormula projectFreeVariables(const PpFormula& phi, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> map(phi.arity(), SIZE_MAX);
  for (std::size_t pos = 0; pos < keep.size(); ++pos) {
    if (keep[pos] >= phi.arity() || map[keep[pos]] != SIZE_MAX)
      fail(ErrorKind::InvalidArgument, "projection indices must be distinct free variables");
    map[keep[pos]] = pos;
  }
  FormulaBuilder b(phi.algebraPtr(), phi.side(), keep.size());
  for (auto& v : map)
    if (v == SIZE_MAX) v = b.freshVariable();
  b.embed(phi, map);
  return b.build();
}

}  // namespace ppkit
