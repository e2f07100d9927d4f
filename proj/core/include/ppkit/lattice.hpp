#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ppkit/pp.hpp"

namespace ppkit {

inline constexpr std::size_t kDefaultLatticeCap = std::size_t{1} << 16;

struct DefinabilityResult {
  bool definable = false;
  // phi_S; evaluates to the closure below.
  PpFormula witness;
  // Least pp-definable subgroup containing S.
  SubgroupRep closure;
};

// Pointed-power method: with s_1..s_k a basis of S, the tuple c_i =
// (s_1i, ..., s_ki) in M^k has a pp-type generator whose solution set in M
// is the least pp-definable subgroup containing S. Throws CapExceeded when
// |M|^k exceeds the cap.
DefinabilityResult isPpDefinable(const ModulePtr& m, const SubgroupRep& s, std::size_t cap = kDefaultLatticeCap);

// The finite lattice pp^n(M). Elements are sorted by dimension, then basis.
struct PpLattice {
  ModulePtr module;
  std::size_t arity = 0;
  std::vector<SubgroupRep> elements;
  std::vector<PpFormula> witnesses;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: element i inside element j
  std::vector<std::vector<std::size_t>> meet;
  std::vector<std::vector<std::size_t>> join;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // covering pairs (lower, upper)
  std::size_t bottom = 0;
  std::size_t top = 0;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> indexOf(const Subspace& s) const;
};

// Subspaces of M^n invariant under End(M) acting diagonally, filtered by
// isPpDefinable. Throws CapExceeded when |M^n| or the number of invariant
// subspaces exceeds the cap.
PpLattice ppLattice(const ModulePtr& m, std::size_t arity, std::size_t cap = kDefaultLatticeCap);

// An upward-closed, meet-closed set of lattice indices (sorted).
struct PpFilter {
  std::vector<std::size_t> members;
  bool contains(std::size_t element) const;
};

bool isFilter(const PpLattice& lat, const PpFilter& filter);
// Every nonempty filter of a finite lattice is principal; one per element.
std::vector<PpFilter> allFilters(const PpLattice& lat);
PpFilter principalFilter(const PpLattice& lat, std::size_t element);

// For all psi1, psi2 outside p there is phi in p with
// (psi1 & phi) + (psi2 & phi) outside p.
bool zieglerIrreducible(const PpLattice& lat, const PpFilter& p);

struct NegIsolatedFilter {
  PpFilter filter;
  std::size_t generator = 0;  // the filter is the up-set of this element
  bool zieglerIrreducible = false;
};

// Filters maximal among those not containing `avoid`. Throws
// InvalidArgument when avoid is not an element index.
std::vector<NegIsolatedFilter> filterAnalysis(const PpLattice& lat, std::size_t avoid);

}  // namespace ppkit
