#include "ppkit/construct.hpp"

#include <functional>
#include <set>

#include "ppkit/errors.hpp"

namespace ppkit {

void validateBudget(const Budget& budget) {
  if (budget.bound == 0 || budget.equations == 0 || budget.candidates == 0 || budget.stages == 0)
    fail(ErrorKind::InvalidArgument, "budget fields must be positive");
}

namespace {

// Algebra element with the given code: base-q digits, first coordinate least
// significant.
Vec elementFromCode(const Algebra& alg, std::size_t code) {
  const std::size_t q = alg.field().order();
  Vec out(alg.dim(), 0);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    out[i] = static_cast<Scalar>(code % q);
    code /= q;
  }
  return out;
}

std::vector<Vec> equationFromCode(const Algebra& alg, std::size_t code, std::size_t vars, std::size_t elements) {
  std::vector<Vec> eq;
  eq.reserve(vars);
  for (std::size_t v = 0; v < vars; ++v) {
    eq.push_back(elementFromCode(alg, code % elements));
    code /= elements;
  }
  return eq;
}

// Saturating integer power.
std::size_t powerOrMax(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > SIZE_MAX / base) return SIZE_MAX;
    out *= base;
  }
  return out;
}

}  // namespace

ConsequenceList consequenceEnum(const PpFormula& theta, const DefinableContext& ctx, const Budget& budget) {
  validateBudget(budget);
  if (ctx.generators().empty()) fail(ErrorKind::EmptyContext, "consequence enumeration needs generator modules");
  const Algebra& alg = theta.algebra();
  const std::size_t n = theta.arity();

  std::vector<Subspace> thetaOnGenerators;
  for (const ModulePtr& g : ctx.generators()) thetaOnGenerators.push_back(evaluate(theta, g).space);
  const PointedModule c = freeRealisation(theta);
  const Subspace thetaOnC = evaluate(theta, c.module).space;

  ConsequenceList out;
  out.formulas.push_back(theta);
  std::set<std::vector<Vec>> signatures{thetaOnC.basis()};
  if (out.formulas.size() >= budget.candidates) {
    out.truncated = true;
    return out;
  }

  const std::size_t elements = powerOrMax(alg.field().order(), alg.dim());
  std::size_t scanned = 0;
  bool stop = false;

  // Returns false once enumeration must stop.
  auto consider = [&](std::size_t bound, const std::vector<std::size_t>& codes) {
    if (scanned == kCandidateScanCap || out.formulas.size() >= budget.candidates) {
      out.truncated = true;
      stop = true;
      return;
    }
    ++scanned;
    const std::size_t vars = n + bound;
    std::vector<std::vector<Vec>> eqs;
    std::vector<bool> used(bound, false);
    for (std::size_t code : codes) {
      eqs.push_back(equationFromCode(alg, code, vars, elements));
      for (std::size_t k = 0; k < bound; ++k)
        if (!linalg::isZero(eqs.back()[n + k])) used[k] = true;
    }
    for (bool u : used)
      if (!u) return;  // same as a candidate with fewer bound variables
    const PpFormula chi(theta.algebraPtr(), theta.side(), n, bound, std::move(eqs));
    for (std::size_t g = 0; g < ctx.generators().size(); ++g)
      if (!evaluate(chi, ctx.generators()[g]).space.contains(thetaOnGenerators[g])) return;
    const Subspace sig = evaluate(chi, c.module).space.intersect(thetaOnC);
    if (!signatures.insert(sig.basis()).second) return;
    out.formulas.push_back(conj(theta, chi));
  };

  for (std::size_t bound = 0; bound <= budget.bound && !stop; ++bound) {
    const std::size_t space = powerOrMax(elements, n + bound);
    for (std::size_t count = 1; count <= budget.equations && !stop; ++count) {
      if (space == SIZE_MAX || space - 1 < count) break;
      // Strictly increasing equation codes in [1, space).
      std::vector<std::size_t> codes(count);
      for (std::size_t i = 0; i < count; ++i) codes[i] = i + 1;
      while (!stop) {
        consider(bound, codes);
        std::size_t i = count;
        while (i > 0 && codes[i - 1] == space - 1 - (count - i)) --i;
        if (i == 0) break;
        ++codes[i - 1];
        for (std::size_t k = i; k < count; ++k) codes[k] = codes[k - 1] + 1;
      }
    }
  }
  return out;
}

ModuleMap ConstructionState::transition(std::size_t n, std::size_t m) const {
  if (n > m || m >= modules.size()) fail(ErrorKind::InvalidArgument, "no transition between these stages");
  ModuleMap out = identityMap(modules[n]);
  for (std::size_t k = n; k < m; ++k) out = compose(maps[k], out);
  return out;
}

std::optional<std::size_t> ConstructionState::isoStableFrom() const {
  for (std::size_t n = 0; n < isoMaps.size(); ++n)
    if (isoMaps[n]) return n;
  return std::nullopt;
}

ConstructionState runConstruction(const ModulePtr& a, const Tuple& tuple, const DefinableContext& ctx,
                                  const Budget& budget) {
  validateBudget(budget);
  if (ctx.generators().empty()) fail(ErrorKind::EmptyContext, "the construction needs generator modules");
  checkTuple(*a, tuple);
  if (generatedSubmodule(*a, tuple).dim() != a->dim())
    fail(ErrorKind::NotGenerating, "the initial tuple does not generate the module");

  ConstructionState st;
  st.context = ctx;
  st.budget = budget;
  st.initialTuple = tuple;
  st.modules.push_back(a);
  st.realised.push_back(tuple);
  st.generators.push_back(tuple);
  st.thetas.push_back(ppTypeGenerator(a, tuple));
  st.consequences.push_back(consequenceEnum(st.thetas[0], ctx, budget));
  st.initialImages.push_back(tuple);

  for (std::size_t n = 0; n < budget.stages; ++n) {
    // Realise phi_{1,n+1}(x_1) & phi_{2,n}(x_2) & ... & phi_{n+1,1}(x_{n+1}),
    // x_i the first |b_{i-1}| variables.
    const std::size_t arity = st.generators[n].size();
    FormulaBuilder builder(a->algebraPtr(), a->side(), arity);
    std::vector<ScheduledFormula> scheduled;
    for (std::size_t i = 1; i <= n + 1; ++i) {
      const std::size_t j = n + 2 - i;
      const ConsequenceList& list = st.consequences[i - 1];
      ScheduledFormula s;
      s.list = i;
      s.index = j;
      if (j < list.formulas.size()) {
        s.formula = list.formulas[j];
      } else {
        if (list.truncated) {
          st.budgetExhausted = true;
          return st;
        }
        s.formula = list.formulas[0];
        s.fallback = true;
      }
      std::vector<std::size_t> prefix(st.generators[i - 1].size());
      for (std::size_t v = 0; v < prefix.size(); ++v) prefix[v] = v;
      builder.embed(s.formula, prefix);
      scheduled.push_back(std::move(s));
    }
    const PpFormula conjunction = builder.build().normalized();
    const PointedModule next = freeRealisation(conjunction);
    auto f = homSolve(st.modules[n], next.module, st.generators[n], next.tuple);
    if (!f) fail(ErrorKind::ValidationFailure, "no map B_n -> B_{n+1} realising the schedule");
    const Tuple b = extendToGenerators(*next.module, next.tuple);

    st.schedule.push_back(std::move(scheduled));
    st.realisedFormulas.push_back(conjunction);
    st.modules.push_back(next.module);
    st.isoMaps.push_back(f->isIsomorphism());
    st.initialImages.push_back(f->apply(st.initialImages[n]));
    st.maps.push_back(std::move(*f));
    st.realised.push_back(next.tuple);
    st.generators.push_back(b);
    st.thetas.push_back(ppTypeGenerator(next.module, b));
    st.consequences.push_back(consequenceEnum(st.thetas.back(), ctx, budget));
  }
  return st;
}

FactorisationReport verifyFactorisation(const ConstructionState& state, const std::vector<ModulePtr>& targets) {
  FactorisationReport report;
  for (std::size_t n = 0; n < state.maps.size(); ++n) {
    const ModuleMap& fn = state.maps[n];
    const Tuple image = fn.apply(state.generators[n]);
    for (std::size_t t = 0; t < targets.size(); ++t)
      for (const ModuleMap& g : homSpace(state.modules[n], targets[t])) {
        ++report.checked;
        auto h = homSolve(state.modules[n + 1], targets[t], image, g.apply(state.generators[n]));
        if (h && compose(*h, fn).matrix() == g.matrix()) continue;
        report.ok = false;
        report.failures.push_back({n, t, g});
      }
  }
  return report;
}

namespace {

void requireGenerates(const ConstructionState& state, const PpFormula& phi) {
  const PpFormula own = ppTypeGenerator(state.modules[0], state.initialTuple);
  if (phi.arity() != own.arity() || !equivalentAbsolute(phi, own))
    fail(ErrorKind::InvalidArgument, "formula does not generate the pp-type of the initial tuple");
}

}  // namespace

std::vector<bool> generatorStageChecks(const ConstructionState& state, const PpFormula& phi) {
  requireGenerates(state, phi);
  std::vector<bool> out;
  for (std::size_t m = 0; m < state.stageCount(); ++m) {
    const PpFormula psi = ppTypeGenerator(state.modules[m], state.initialImages[m]);
    out.push_back(leqRelative(phi, psi, state.context) && leqAbsolute(psi, phi));
  }
  return out;
}

bool verifyGenerator(const ConstructionState& state, const PpFormula& phi) {
  for (bool ok : generatorStageChecks(state, phi))
    if (!ok) return false;
  return true;
}

std::vector<std::vector<bool>> typeStageChecks(const ConstructionState& state) {
  std::vector<std::vector<bool>> out(state.stageCount());
  for (std::size_t n = 0; n < state.stageCount(); ++n) {
    Tuple image = state.generators[n];
    for (std::size_t m = n; m < state.stageCount(); ++m) {
      if (m > n) image = state.maps[m - 1].apply(image);
      const PpFormula psi = ppTypeGenerator(state.modules[m], image);
      out[n].push_back(leqRelative(state.thetas[n], psi, state.context) && leqAbsolute(psi, state.thetas[n]));
    }
  }
  return out;
}

PreenvelopeReport verifyPreenvelope(const ConstructionState& state, const std::vector<ModulePtr>& targets) {
  PreenvelopeReport report;
  const std::size_t last = state.stageCount() - 1;
  const ModuleMap toLast = state.transition(0, last);
  const Tuple image = toLast.apply(state.initialTuple);
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (const ModuleMap& g : homSpace(state.modules[0], targets[t])) {
      ++report.checked;
      auto h = homSolve(state.modules[last], targets[t], image, g.apply(state.initialTuple));
      if (h && compose(*h, toLast).matrix() == g.matrix()) continue;
      report.ok = false;
      report.failure = FactorisationFailure{0, t, g};
      return report;
    }
  return report;
}

std::vector<bool> explicitPairStageChecks(const ConstructionState& state) {
  std::vector<bool> out;
  for (std::size_t n = 1; n < state.stageCount(); ++n) {
    bool closed = true;
    for (const ClosedPair& pr : state.context.pairs())
      if (!pairClosed(pr.upper, pr.lower, state.modules[n])) closed = false;
    out.push_back(closed);
  }
  return out;
}

}  // namespace ppkit
