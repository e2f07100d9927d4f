#pragma once

#include <random>
#include <set>
#include <vector>

#include "ppkit/algebra.hpp"
#include "ppkit/formula.hpp"
#include "ppkit/module.hpp"
#include "ppkit/pp.hpp"

namespace ppkit::testing {

using Rng = std::mt19937;

// Shared algebras: the field F2, F2[t]/(t^2), the field F3 and the upper
// triangular 2x2 matrices over F2 (dimension 3).
AlgebraPtr k2();
AlgebraPtr r2();
AlgebraPtr f3();
AlgebraPtr t2();

// Modules over r2(): the regular module, the simple module, and their left
// counterparts.
ModulePtr rr();
ModulePtr s();
ModulePtr lr();
ModulePtr ls();

// Right indecomposables of the algebra (complete list for the four shared
// algebras).
std::vector<ModulePtr> indecomposables(const AlgebraPtr& alg);
// One module per isomorphism class of dimension <= maxDim, as direct sums of
// indecomposables (the zero module included). Left modules are the duals of
// the right ones.
std::vector<ModulePtr> moduleGrid(const AlgebraPtr& alg, Side side, std::size_t maxDim);
// Every representation of the given dimension, found by trying all action
// matrices. Only for tiny cases.
std::vector<ModulePtr> allRepresentations(const AlgebraPtr& alg, Side side, std::size_t dim);

Vec randomElement(const Algebra& alg, Rng& rng, double zeroBias = 0.4);
// Sparse random formula with up to maxBound bound variables and maxEq
// equations.
PpFormula randomFormula(const AlgebraPtr& alg, Side side, std::size_t arity, Rng& rng, std::size_t maxBound = 2,
                        std::size_t maxEq = 2);
// Hand-written formulas (top, bottom, annihilation and divisibility by each
// basis element) followed by `randomCount` random ones.
std::vector<PpFormula> formulaCorpus(const AlgebraPtr& alg, Side side, std::size_t arity, std::size_t randomCount,
                                     unsigned seed);
ModuleMap randomHom(const ModulePtr& m, const ModulePtr& n, Rng& rng);

// Oracles that work from the raw action matrices by enumeration.
Vec actOracle(const ModuleRep& m, const Vec& x, const Vec& r);
std::vector<Vec> allVectors(const Field& f, std::size_t n);
bool bruteSatisfies(const PpFormula& phi, const ModuleRep& m, const Tuple& tuple);
// Flattened tuples of phi(M), by enumeration of M^{n+t}.
std::set<Vec> bruteSolutions(const PpFormula& phi, const ModuleRep& m);
std::set<Vec> elementsOf(const Subspace& s);
// All F-linear maps M -> N (row form) commuting with every action, by
// enumeration.
std::vector<Matrix> bruteHoms(const ModuleRep& m, const ModuleRep& n);
// Size of the module as a set, saturating at 2^20.
std::size_t cardinality(const ModuleRep& m);

}  // namespace ppkit::testing
