#pragma once

#include <optional>
#include <vector>

#include "ppkit/pp.hpp"

namespace ppkit {

// A pp-pair upper >= lower.
struct ClosedPair {
  PpFormula upper;
  PpFormula lower;
};

// A definable subcategory given by generator modules, explicit closed
// pairs, or both.
class DefinableContext {
 public:
  const AlgebraPtr& algebraPtr() const noexcept { return algebra_; }
  Side side() const noexcept { return side_; }
  const std::vector<ModulePtr>& generators() const noexcept { return generators_; }
  const std::vector<ClosedPair>& pairs() const noexcept { return pairs_; }

 private:
  friend DefinableContext makeContext(AlgebraPtr, Side, std::vector<ModulePtr>, std::vector<ClosedPair>);
  AlgebraPtr algebra_;
  Side side_ = Side::Right;
  std::vector<ModulePtr> generators_;
  std::vector<ClosedPair> pairs_;
};

// Throws EmptyContext when both lists are empty and ValidationFailure when a
// pair is not ordered or a generator does not close a pair.
DefinableContext makeContext(AlgebraPtr algebra, Side side, std::vector<ModulePtr> generators,
                             std::vector<ClosedPair> pairs = {});

// phi(M) = psi(M). Throws ArityMismatch.
bool pairClosed(const PpFormula& phi, const PpFormula& psi, const ModulePtr& m);
// Every explicit pair closed on N. Throws NoExplicitPairs.
bool memberCheck(const ModulePtr& n, const DefinableContext& ctx);
// Throws EmptyContext if the context has no generators.
bool leqRelative(const PpFormula& phi, const PpFormula& psi, const DefinableContext& ctx);

struct PurityWitness {
  Vec element;
  PpFormula formula;
};

struct PurityReport {
  bool pureMono = false;
  bool pureEpi = false;
  // a in the source with f a in formula(N) but a outside formula(M).
  std::optional<PurityWitness> monoWitness;
  // a in the target with pp-type generated by formula, and no preimage of a
  // in formula(M).
  std::optional<PurityWitness> epiWitness;
};

// Largest module (number of elements) the element-wise checks will visit.
inline constexpr std::size_t kElementCap = std::size_t{1} << 16;

// Checks one element at a time. Throws CapExceeded for sources with more
// than kElementCap elements.
PurityReport purityCheck(const ModuleMap& f);

struct PullbackResult {
  ModulePtr x;
  ModuleMap inclusion;  // X -> M + D
  ModuleMap toM;
  ModuleMap toD;
  PurityReport inclusionPurity;
  PurityReport toMPurity;
};
// X = { (m, d) : f m = p d } for f: M -> D', p: D -> D'.
PullbackResult pullbackPure(const ModuleMap& f, const ModuleMap& p);

struct PushoutResult {
  ModulePtr y;
  ModuleMap antiDiagonal;  // D' -> M + D, d -> (f d, -i d)
  ModuleMap fromM;
  ModuleMap fromD;
  bool inputPureMono = false;  // i was pure mono, as the construction assumes
  PurityReport antiDiagonalPurity;
  PurityReport fromMPurity;  // pure mono whenever i is
  PurityReport fromDPurity;
};
// Y = (M + D) / (f, -i) D' for i: D' -> D and f: D' -> M.
PushoutResult pushoutPure(const ModuleMap& i, const ModuleMap& f);

// A map M -> N sending the tuple a to b, found through the pp-type generator
// of a. Throws NotInSolutionSet when b fails that generator and
// ValidationFailure when N is neither a generator of ctx nor a member.
ModuleMap strictAtomicWitness(const ModulePtr& m, const Tuple& a, const DefinableContext& ctx, const ModulePtr& n,
                              const Tuple& b);

}  // namespace ppkit
