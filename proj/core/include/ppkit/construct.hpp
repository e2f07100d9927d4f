#pragma once

#include <optional>
#include <vector>

#include "ppkit/context.hpp"

namespace ppkit {

struct Budget {
  std::size_t bound = 1;       // bound variables per candidate
  std::size_t equations = 2;   // equations per candidate
  std::size_t candidates = 16; // formulas kept per consequence list
  std::size_t stages = 3;
};

// Throws InvalidArgument unless every field is positive.
void validateBudget(const Budget& budget);

// Candidates examined per consequence list before giving up.
inline constexpr std::size_t kCandidateScanCap = 100000;

struct ConsequenceList {
  std::vector<PpFormula> formulas;  // formulas[0] is theta
  bool truncated = false;           // stopped before the candidate space ran out
};

// Formulas theta & chi with theta/(theta & chi) closed on every generator,
// chi ranging over budget-bounded systems in canonical order, deduplicated
// by solution sets on the free realisation of theta and the generators.
// Throws EmptyContext when ctx has no generators.
ConsequenceList consequenceEnum(const PpFormula& theta, const DefinableContext& ctx, const Budget& budget);

struct ScheduledFormula {
  std::size_t list = 0;   // i: the formula comes from the list of theta_{i-1}
  std::size_t index = 0;  // j: position in that list
  PpFormula formula;
  bool fallback = false;  // j was past the end of the list; theta_{i-1} used
};

// Stage n holds B_n; maps[n] is f_n: B_n -> B_{n+1}.
struct ConstructionState {
  DefinableContext context;
  Budget budget;
  Tuple initialTuple;                          // a_0
  std::vector<ModulePtr> modules;              // B_n
  std::vector<ModuleMap> maps;                 // f_n
  std::vector<Tuple> realised;                 // a_n (a_0 for n = 0)
  std::vector<Tuple> generators;               // b_n, with a_n as initial segment
  std::vector<PpFormula> thetas;               // theta_n generates pp(b_n) in B_n
  std::vector<ConsequenceList> consequences;   // (theta_n) down D
  std::vector<std::vector<ScheduledFormula>> schedule;  // schedule[n]: conjuncts realised by B_{n+1}
  std::vector<PpFormula> realisedFormulas;     // the conjunction realised by B_{n+1}
  std::vector<Tuple> initialImages;            // image of a_0 in B_n
  std::vector<bool> isoMaps;                   // f_n is an isomorphism
  bool budgetExhausted = false;

  std::size_t stageCount() const noexcept { return modules.size(); }
  // f_{nm} = f_{m-1} o ... o f_n.
  ModuleMap transition(std::size_t n, std::size_t m) const;
  // First n with f_n an isomorphism.
  std::optional<std::size_t> isoStableFrom() const;
};

// Runs budget.stages stages of the diagonal schedule starting from (A, a).
// Throws NotGenerating unless a generates A, EmptyContext without
// generators. Stops early with budgetExhausted when the schedule needs a
// formula past the end of a truncated list.
ConstructionState runConstruction(const ModulePtr& a, const Tuple& tuple, const DefinableContext& ctx,
                                  const Budget& budget);

struct FactorisationFailure {
  std::size_t stage = 0;
  std::size_t target = 0;
  ModuleMap map;  // g: B_n -> target with no h satisfying h f_n = g
};

struct FactorisationReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<FactorisationFailure> failures;
};

// Every g in Hom(B_n, T) factors through f_n, for every stage and target.
FactorisationReport verifyFactorisation(const ConstructionState& state, const std::vector<ModulePtr>& targets);

// For every stage m, psi_m generating the type of the image of a_0 in B_m
// satisfies phi <=_D psi_m and psi_m <= phi. Throws InvalidArgument unless
// phi generates the pp-type of a_0 in A.
std::vector<bool> generatorStageChecks(const ConstructionState& state, const PpFormula& phi);
bool verifyGenerator(const ConstructionState& state, const PpFormula& phi);

// For n <= m, the type generator of f_{nm} b_n in B_m is D-above and
// absolutely below theta_n. Entry [n][m - n].
std::vector<std::vector<bool>> typeStageChecks(const ConstructionState& state);

struct PreenvelopeReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<FactorisationFailure> failure;  // stage is 0, map is g: A -> T
};
// Every g: A -> T factors through f_{0S}: A -> B_S.
PreenvelopeReport verifyPreenvelope(const ConstructionState& state, const std::vector<ModulePtr>& targets);

// Stage n >= 1 closes every explicit pair of the context; entry n - 1.
std::vector<bool> explicitPairStageChecks(const ConstructionState& state);

}  // namespace ppkit
