#pragma once

#include <optional>
#include <vector>

#include "ppkit/pp.hpp"

namespace ppkit {

// A finite-dimensional ring of F-linear maps on a module, held as a basis
// of row-form matrices with structure constants.
struct RingTable {
  FieldPtr field;
  std::vector<Matrix> basis;
  std::vector<std::vector<Vec>> table;  // table[i][j]: coordinates of basis[i] * basis[j]
  Vec unit;
  // Coordinates of the image of each algebra basis element, when the ring
  // receives a structural map from the algebra.
  std::vector<Vec> fromAlgebra;

  std::size_t dim() const noexcept { return basis.size(); }
  std::optional<Vec> coordinates(const Matrix& m) const;
  Matrix element(const Vec& coords) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  // Associativity and unit laws on the basis.
  bool valid() const;
};

struct EndBiend {
  RingTable end;    // s1 * s2 = s1 o s2 (acting on the left of M)
  RingTable biend;  // g1 * g2 = first g1, then g2 (acting on the right)
  Tuple generators; // End . generators spans M
};

// Throws SideMismatch for left modules.
EndBiend endAndBiend(const ModulePtr& m);

struct DefinableScalar {
  PpFormula rho;  // rho(u, v)
  Matrix action;  // the biendomorphism g, m -> m * action
  bool total = false;
  bool functional = false;
  bool graphMatches = false;
};

// rho(u,v) = E x E y (u = sum x_i & v = sum y_i & AND phi_i(x_i, y_i)), where
// phi generates the pp-type of (a, a g) and phi_i keeps its i-th pair of
// variables. Throws InvalidArgument unless g commutes with End(M).
DefinableScalar synthesizeScalar(const ModulePtr& m, const std::vector<Vec>& generators, const Matrix& g);
DefinableScalar synthesizeScalar(const ModulePtr& m, const Matrix& g);

struct ScalarRingResult {
  RingTable ring;  // R_M, basis given by the graphs of the synthesized scalars
  std::vector<DefinableScalar> scalars;
  bool isomorphicToBiend = false;
  bool homFromAlgebra = false;      // R -> R_M respects products and unit
  bool kernelIsAnnihilator = false; // ker(R -> R_M) = ann(M), elementwise
  bool allTotalFunctional = false;
};

ScalarRingResult scalarRing(const ModulePtr& m);

}  // namespace ppkit
