#pragma once

#include <optional>
#include <vector>

#include "ppkit/pp.hpp"

namespace ppkit {

// M (x)_R L as the quotient of M (x)_F L, coordinates (i, j) -> i * dim L + j,
// by the balance relations (m e_k) (x) l - m (x) (e_k l).
class TensorResult {
 public:
  const ModulePtr& right() const noexcept { return right_; }
  const ModulePtr& left() const noexcept { return left_; }
  const Subspace& relations() const noexcept { return relations_; }
  std::size_t dim() const noexcept { return relations_.ambient() - relations_.dim(); }

  // m (x) l in F^{dim M * dim L}, before passing to the quotient.
  Vec rawTensor(const Vec& m, const Vec& l) const;
  // Canonical class: coordinates at the non-pivot columns after reduction.
  Vec classOf(const Vec& raw) const;
  Vec tensor(const Vec& m, const Vec& l) const { return classOf(rawTensor(m, l)); }
  // sum_i a_i (x) l_i. Throws LengthMismatch.
  Vec tensor(const Tuple& a, const Tuple& l) const;
  bool isZero(const Tuple& a, const Tuple& l) const { return linalg::isZero(tensor(a, l)); }

 private:
  friend TensorResult tensorProduct(const ModulePtr&, const ModulePtr&);
  ModulePtr right_;
  ModulePtr left_;
  Subspace relations_;
  std::vector<std::size_t> free_;
};

// Throws AlgebraMismatch, or SideMismatch unless M is right and L left.
TensorResult tensorProduct(const ModulePtr& m, const ModulePtr& l);

struct HerzogResult {
  bool zero = false;
  PpFormula generator;      // generates the pp-type of a in M
  PpFormula dualGenerator;  // its dual, evaluated at l in L
};
// a (x) l = 0 iff l satisfies the dual of the pp-type generator of a.
// Throws LengthMismatch.
HerzogResult herzogDetail(const ModulePtr& m, const Tuple& a, const ModulePtr& l, const Tuple& lt);
bool herzogZeroTest(const ModulePtr& m, const Tuple& a, const ModulePtr& l, const Tuple& lt);

struct MLCheckResult {
  bool injective = true;
  // An element of M (x)_F (sum L_i) outside the balance relations that the
  // canonical map sends to zero.
  std::optional<Vec> kernelWitness;
};
// The canonical map M (x) (sum L_i) -> sum (M (x) L_i) for a finite family.
MLCheckResult relativeMLCheck(const ModulePtr& m, const std::vector<ModulePtr>& family);

// f in phi(M*) decided as D phi(M) <= ker f, where f is an element of the
// dual module and phi a one-variable formula for the dual's side. The direct
// evaluation on dualModule(M) is computed as well; a disagreement throws
// ValidationFailure. Throws ArityMismatch unless phi has one free variable.
bool dualSatisfies(const ModulePtr& m, const Vec& f, const PpFormula& phi);

}  // namespace ppkit
