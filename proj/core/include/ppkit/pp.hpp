#pragma once

#include <vector>

#include "ppkit/formula.hpp"
#include "ppkit/module.hpp"

namespace ppkit {

// A subgroup of M^n, stored as a subspace of F^{n * dim M}; the tuple
// (m_1..m_n) is the concatenation of its entries.
struct SubgroupRep {
  ModulePtr module;
  std::size_t arity = 0;
  Subspace space;

  // Throws LengthMismatch / DimensionMismatch on a malformed tuple.
  bool contains(const Tuple& tuple) const;
  bool operator==(const SubgroupRep& other) const { return arity == other.arity && space == other.space; }
};

// A module with a distinguished tuple.
struct PointedModule {
  ModulePtr module;
  Tuple tuple;
};

Vec flatten(const Tuple& tuple);
Tuple unflatten(const Vec& v, std::size_t arity, std::size_t moduleDim);

// Solution set, computed as the kernel of the quantifier-free system
// projected to the free coordinates. Throws SideMismatch / AlgebraMismatch.
SubgroupRep evaluate(const PpFormula& phi, const ModulePtr& m);
bool satisfies(const PpFormula& phi, const ModulePtr& m, const Tuple& tuple);

// Throws ArityMismatch, SideMismatch or AlgebraMismatch on incompatible inputs.
PpFormula conj(const PpFormula& phi, const PpFormula& psi);
PpFormula sum(const PpFormula& phi, const PpFormula& psi);

// E z (x = A z & B z = 0) for the opposite side, z one variable per equation.
PpFormula dual(const PpFormula& phi);

// R^{n+t} modulo the relations of phi, with the images of the first n
// generators.
PointedModule freeRealisation(const PpFormula& phi);

// A formula generating the pp-type of the tuple: the presentation of M on
// the tuple extended to generators, with the extra generators quantified.
PpFormula ppTypeGenerator(const ModulePtr& m, const Tuple& tuple);

// phi <= psi in every module.
bool leqAbsolute(const PpFormula& phi, const PpFormula& psi);
bool equivalentAbsolute(const PpFormula& phi, const PpFormula& psi);
// phi(G) <= psi(G) for every G in the list. Throws EmptyContext.
bool leqRelative(const PpFormula& phi, const PpFormula& psi, const std::vector<ModulePtr>& generators);

// phi(x T) in the new variables x; T has one row per new variable and one
// column per free variable of phi. Throws DimensionMismatch.
PpFormula substitute(const PpFormula& phi, const RMatrix& t);

// Keeps the listed free variables (in that order) and quantifies the rest.
PpFormula projectFreeVariables(const PpFormula& phi, const std::vector<std::size_t>& keep);

void checkCompatible(const PpFormula& phi, const PpFormula& psi);
void checkTuple(const ModuleRep& m, const Tuple& tuple);

}  // namespace ppkit
