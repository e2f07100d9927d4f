// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "fixtures.hpp"
#include "ppkit/construct.hpp"
#include "ppkit/context.hpp"
#include "ppkit/lattice.hpp"
#include "ppkit/scalars.hpp"
#include "ppkit/tensor.hpp"
#include "ppkit_cli/commands.hpp"
#include "ppkit_cli/workspace.hpp"

namespace ppkit {
namespace {

using namespace testing;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checks = 0;
  std::size_t failures = 0;

  void check(bool ok, const std::string& what = {}) {
    ++checks;
    if (ok) return;
    ++failures;
    pass = false;
    if (failures <= 3) detail += (detail.empty() ? "" : "; ") + what;
  }
};

bool sameOnGrid(const PpFormula& a, const PpFormula& b, const std::vector<ModulePtr>& grid) {
  for (const ModulePtr& m : grid)
    if (!(evaluate(a, m).space == evaluate(b, m).space)) return false;
  return true;
}

// 1. D^2 phi = phi and D(phi & psi) = D phi + D psi, with the dual identity
// for sums, on random formulas over R2, F3 and T2.
Outcome dualityIdentities() {
  Outcome out;
  for (const AlgebraPtr& alg : {r2(), f3(), t2()}) {
    const auto same = moduleGrid(alg, Side::Right, 3);
    const auto opposite = moduleGrid(alg, Side::Left, 3);
    Rng rng(20240101);
    std::vector<PpFormula> formulas;
    for (int i = 0; i < 200; ++i) formulas.push_back(randomFormula(alg, Side::Right, 1 + i % 2, rng, 2, 3));
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      const PpFormula& phi = formulas[i];
      const PpFormula& psi = formulas[(i + 2) % formulas.size()];  // same arity
      out.check(sameOnGrid(dual(dual(phi)), phi, same), "D^2 " + formatFormula(phi));
      out.check(sameOnGrid(dual(conj(phi, psi)), sum(dual(phi), dual(psi)), opposite),
                "D(conj) " + formatFormula(phi) + " / " + formatFormula(psi));
      out.check(sameOnGrid(dual(sum(phi, psi)), conj(dual(phi), dual(psi)), opposite),
                "D(sum) " + formatFormula(phi) + " / " + formatFormula(psi));
    }
  }
  return out;
}

std::vector<ModulePtr> allUpToDim2(Side side) {
  std::vector<ModulePtr> out{zeroModule(r2(), side)};
  for (std::size_t d = 1; d <= 2; ++d)
    for (const ModulePtr& m : allRepresentations(r2(), side, d)) out.push_back(m);
  return out;
}

std::vector<Tuple> tuplesUpTo2(const ModuleRep& m) {
  const std::vector<Vec> elems = allVectors(m.field(), m.dim());
  std::vector<Tuple> out;
  for (const Vec& a : elems) out.push_back({a});
  for (const Vec& a : elems)
    for (const Vec& b : elems) out.push_back({a, b});
  return out;
}

// 2. Herzog's criterion against the tensor oracle, every representation of
// dimension <= 2 over R2 and every tuple of length <= 2.
Outcome herzogAgreement() {
  Outcome out;
  for (const ModulePtr& m : allUpToDim2(Side::Right))
    for (const ModulePtr& l : allUpToDim2(Side::Left)) {
      const TensorResult t = tensorProduct(m, l);
      const auto ta = tuplesUpTo2(*m);
      const auto tl = tuplesUpTo2(*l);
      for (const Tuple& a : ta)
        for (const Tuple& b : tl) {
          if (a.size() != b.size()) continue;
          out.check(herzogZeroTest(m, a, l, b) == t.isZero(a, b),
                    "M dim " + std::to_string(m->dim()) + " L dim " + std::to_string(l->dim()));
        }
    }
  return out;
}

// 3. Every solution of a random formula is hit from its free realisation.
Outcome freeRealisationUniversality() {
  Outcome out;
  Rng rng(314159);
  for (int k = 0; k < 100; ++k) {
    const AlgebraPtr alg = k % 2 ? t2() : r2();
    const Side side = (k / 2) % 2 ? Side::Left : Side::Right;
    const PpFormula phi = randomFormula(alg, side, 1 + k % 3 / 2, rng);
    const PointedModule c = freeRealisation(phi);
    for (const ModulePtr& n : moduleGrid(alg, side, 3))
      for (const Vec& b : elementsOf(evaluate(phi, n).space))
        out.check(homSolve(c.module, n, c.tuple, unflatten(b, phi.arity(), n->dim())).has_value(), formatFormula(phi));
  }
  return out;
}

// Pairs (phi, phi & psi) from a corpus that close on all the given modules.
std::vector<ClosedPair> closedPairs(const std::vector<PpFormula>& corpus, const std::vector<ModulePtr>& mods) {
  std::vector<ClosedPair> out;
  for (const PpFormula& phi : corpus)
    for (const PpFormula& psi : corpus) {
      const PpFormula lower = conj(phi, psi);
      bool closed = true;
      for (const ModulePtr& m : mods) closed = closed && pairClosed(phi, lower, m);
      if (closed) out.push_back({phi, lower});
    }
  return out;
}

// 4. Pullbacks along pure epis and pushouts along pure monos.
Outcome purityLemmas() {
  Outcome out;
  Rng rng(2718);
  const auto grid = moduleGrid(r2(), Side::Right, 3);
  const auto corpus = formulaCorpus(r2(), Side::Right, 1, 6, 77);
  std::uniform_int_distribution<std::size_t> pick(1, grid.size() - 1);
  std::size_t pullbacks = 0, pushouts = 0, pairsChecked = 0;
  while (pullbacks < 20) {
    const ModulePtr m = grid[pick(rng)], d = grid[pick(rng)], dp = grid[pick(rng)];
    const ModuleMap p = randomHom(d, dp, rng);
    if (!p.isSurjective() || !purityCheck(p).pureEpi) continue;
    const ModuleMap f = randomHom(m, dp, rng);
    const PullbackResult r = pullbackPure(f, p);
    ++pullbacks;
    out.check(r.toMPurity.pureEpi, "pullback map to M not pure epi");
    for (const ClosedPair& pr : closedPairs(corpus, {m, d, dp})) {
      ++pairsChecked;
      out.check(pairClosed(pr.upper, pr.lower, r.x), "pair not closed on pullback");
    }
  }
  while (pushouts < 20) {
    const ModulePtr m = grid[pick(rng)], d = grid[pick(rng)], dp = grid[pick(rng)];
    const ModuleMap i = randomHom(dp, d, rng);
    if (!i.isInjective() || !purityCheck(i).pureMono) continue;
    const ModuleMap f = randomHom(dp, m, rng);
    const PushoutResult r = pushoutPure(i, f);
    ++pushouts;
    out.check(r.inputPureMono, "input not recognised as pure mono");
    out.check(r.fromMPurity.pureMono, "pushout map from M not pure mono");
    out.check(r.antiDiagonalPurity.pureMono, "anti-diagonal not pure");
    for (const ClosedPair& pr : closedPairs(corpus, {m, d, dp})) {
      ++pairsChecked;
      out.check(pairClosed(pr.upper, pr.lower, r.y), "pair not closed on pushout");
    }
  }
  out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(pairsChecked) + " pair closures";
  return out;
}

// 5. The worked construction from (RR, 1) in the context generated by S.
Outcome constructionExample() {
  Outcome out;
  const DefinableContext ctx = makeContext(r2(), Side::Right, {s()});
  Budget b;
  b.stages = 3;
  const ConstructionState st = runConstruction(rr(), {{1, 0}}, ctx, b);
  const auto stable = st.isoStableFrom();
  out.check(stable.has_value(), "no iso-stable stage");
  out.check(findIsomorphism(st.modules.back(), s()).has_value(), "last stage not isomorphic to S");
  out.check(verifyFactorisation(st, {s(), power(s(), 2), power(s(), 3)}).ok, "factorisation failed");
  out.check(verifyGenerator(st, PpFormula::top(r2(), Side::Right, 1)), "generator check failed");
  const cli::Workspace ws = cli::loadWorkspace(std::string(PPKIT_TEST_DATA) + "/basic.ppk");
  const std::vector<std::string> args{"preenvelope", "--module", "RR", "--tuple", "1", "--ctx", "genS", "--stages", "3"};
  const cli::CommandResult r1 = cli::runCommand(ws, args);
  const cli::CommandResult r2 = cli::runCommand(ws, args);
  out.check(r1.exitCode == 0, "preenvelope command failed");
  out.check(r1.report == r2.report, "reports differ");
  return out;
}

// 6. Definable scalars against the biendomorphism ring.
Outcome scalarsMatchBiend() {
  Outcome out;
  Matrix t(2, 2);
  t(1, 0) = 1;
  const ModulePtr nil = makeModule(r2(), Side::Right, 2, {Matrix::identity(2), t});
  for (const ModulePtr& m : {rr(), s(), power(s(), 2), directSum({rr(), s()}).module, nil}) {
    const ScalarRingResult r = scalarRing(m);
    const std::string name = "dim " + std::to_string(m->dim());
    out.check(r.isomorphicToBiend, name + " not Biend");
    out.check(r.homFromAlgebra, name + " no ring map from R");
    out.check(r.kernelIsAnnihilator, name + " kernel");
    out.check(r.ring.dim() == endAndBiend(m).biend.dim(), name + " dimension");
    for (const DefinableScalar& sc : r.scalars) {
      out.check(sc.total && sc.functional, name + " rho not total functional");
      out.check(sc.graphMatches, name + " graph");
    }
  }
  return out;
}

// 7. The pp-lattice of RR and its neg-isolated filter.
Outcome latticeOfRR() {
  Outcome out;
  const PpLattice lat = ppLattice(rr(), 1);
  const FieldPtr f = rr()->fieldPtr();
  const std::vector<Subspace> chain{Subspace(f, 2), Subspace::span(f, 2, {{0, 1}}), Subspace::full(f, 2)};
  out.check(lat.size() == 3, "size " + std::to_string(lat.size()));
  std::vector<std::size_t> idx;
  for (const Subspace& c : chain) {
    const auto i = lat.indexOf(c);
    out.check(i.has_value(), "missing chain element");
    if (i) idx.push_back(*i);
  }
  if (idx.size() == 3) {
    out.check(lat.hasse.size() == 2, "hasse size");
    for (const auto& e : lat.hasse)
      out.check((e.first == idx[0] && e.second == idx[1]) || (e.first == idx[1] && e.second == idx[2]), "hasse edge");
  }
  // Independent oracle: the solution sets of a formula corpus are exactly the
  // three submodules.
  std::set<std::vector<Vec>> realised;
  for (const PpFormula& phi : formulaCorpus(r2(), Side::Right, 1, 40, 5)) {
    const std::set<Vec> sol = bruteSolutions(phi, *rr());
    realised.insert(std::vector<Vec>(sol.begin(), sol.end()));
  }
  out.check(realised.size() == 3, "corpus realises " + std::to_string(realised.size()) + " subgroups");
  const auto fs = filterAnalysis(lat, lat.bottom);
  out.check(fs.size() == 1, "neg-isolated count " + std::to_string(fs.size()));
  for (const NegIsolatedFilter& nf : fs) out.check(nf.zieglerIrreducible, "Ziegler criterion failed");
  return out;
}

// 8. The canonical map M (x) sum L_i -> sum M (x) L_i is injective.
Outcome finiteML() {
  Outcome out;
  for (const AlgebraPtr& alg : {r2(), t2()}) {
    const auto rights = moduleGrid(alg, Side::Right, 3);
    const auto lefts = moduleGrid(alg, Side::Left, 2);
    for (const ModulePtr& m : rights)
      for (std::size_t i = 0; i < lefts.size(); ++i) {
        out.check(relativeMLCheck(m, {lefts[i]}).injective, "single factor");
        for (std::size_t j = i; j < lefts.size(); ++j) {
          out.check(relativeMLCheck(m, {lefts[i], lefts[j]}).injective, "two factors");
          for (std::size_t k = j; k < lefts.size(); ++k)
            if (lefts[i]->dim() + lefts[j]->dim() + lefts[k]->dim() <= 4)
              out.check(relativeMLCheck(m, {lefts[i], lefts[j], lefts[k]}).injective, "three factors");
        }
      }
  }
  return out;
}

// 9. evaluate against enumeration on every grid module with at most 16
// elements.
Outcome evaluateOracle() {
  Outcome out;
  for (const AlgebraPtr& alg : {r2(), t2(), f3()})
    for (Side side : {Side::Right, Side::Left})
      for (std::size_t arity : {1u, 2u}) {
        std::vector<PpFormula> corpus = formulaCorpus(alg, side, arity, 0, 0);
        Rng rng(99 + arity);
        for (int k = 0; k < 30; ++k) corpus.push_back(randomFormula(alg, side, arity, rng, 3 - arity, 3));
        for (const ModulePtr& m : moduleGrid(alg, side, 4)) {
          if (cardinality(*m) > 16) continue;
          for (const PpFormula& phi : corpus)
            out.check(elementsOf(evaluate(phi, m).space) == bruteSolutions(phi, *m), formatFormula(phi));
        }
      }
  return out;
}

}  // namespace
}  // namespace ppkit

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    std::function<ppkit::Outcome()> run;
    double limitSeconds;
  };
  const std::vector<Criterion> criteria{
      {"duality identities", ppkit::dualityIdentities, 60},
      {"herzog criterion", ppkit::herzogAgreement, 120},
      {"free realisation universality", ppkit::freeRealisationUniversality, 0},
      {"purity lemmas", ppkit::purityLemmas, 0},
      {"construction worked example", ppkit::constructionExample, 0},
      {"definable scalars", ppkit::scalarsMatchBiend, 0},
      {"pp-lattice of RR", ppkit::latticeOfRR, 0},
      {"finite ML property", ppkit::finiteML, 0},
      {"evaluation oracle", ppkit::evaluateOracle, 0},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    ppkit::Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (criteria[i].limitSeconds > 0 && secs >= criteria[i].limitSeconds) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    all = all && o.pass;
    std::printf("%s %zu %s: %zu checks, %zu failures, %.2fs%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.checks, o.failures, secs, o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
