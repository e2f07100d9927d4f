#include "ppkit_cli/commands.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <sstream>

#include "ppkit/construct.hpp"
#include "ppkit/errors.hpp"
#include "ppkit/lattice.hpp"
#include "ppkit/scalars.hpp"
#include "ppkit/tensor.hpp"

namespace ppkit::cli {

namespace {

const char* yesNo(bool b) { return b ? "true" : "false"; }
const char* passFail(bool b) { return b ? "PASS" : "FAIL"; }

std::string describe(const std::string& name, const ModuleRep& m) {
  return name + " (" + to_string(m.side()) + ", dim " + std::to_string(m.dim()) + ")";
}

// c1*s1 + c2*s2 ..., with unit coefficients left implicit.
std::string combination(const Vec& coords, const std::string& prefix) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coords[i] != 1) out += std::to_string(coords[i]) + "*";
    out += prefix + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

void printSubgroup(std::ostream& os, const SubgroupRep& s) {
  os << "solution set: dimension " << s.space.dim() << " of " << s.space.ambient() << "\n";
  os << "basis:\n";
  if (s.space.dim() == 0) os << "  (none)\n";
  for (const Vec& v : s.space.basis()) os << "  " << formatTuple(unflatten(v, s.arity, s.module->dim())) << "\n";
}

void printPurity(std::ostream& os, const std::string& label, const PurityReport& r) {
  os << label << " pure mono: " << yesNo(r.pureMono) << "\n";
  if (r.monoWitness)
    os << label << " mono witness: " << formatVector(r.monoWitness->element) << " in "
       << formatFormula(r.monoWitness->formula) << "\n";
  os << label << " pure epi: " << yesNo(r.pureEpi) << "\n";
  if (r.epiWitness)
    os << label << " epi witness: " << formatVector(r.epiWitness->element) << " with type "
       << formatFormula(r.epiWitness->formula) << "\n";
}

void printModule(std::ostream& os, const ModuleRep& m) {
  os << "dimension: " << m.dim() << "\n";
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    os << "action." << m.algebra().labels()[i] << " = " << formatMatrix(m.action(i)) << "\n";
}

void printRing(std::ostream& os, const std::string& title, const RingTable& ring, const std::string& prefix) {
  os << title << ": dimension " << ring.dim() << "\n";
  for (std::size_t i = 0; i < ring.dim(); ++i)
    os << "  " << prefix << i + 1 << " = " << formatMatrix(ring.basis[i]) << "\n";
  os << "  unit = " << combination(ring.unit, prefix) << "\n";
  for (std::size_t i = 0; i < ring.dim(); ++i)
    for (std::size_t j = 0; j < ring.dim(); ++j)
      os << "  " << prefix << i + 1 << " * " << prefix << j + 1 << " = " << combination(ring.table[i][j], prefix)
         << "\n";
}

std::vector<ModulePtr> moduleList(const Workspace& ws, const std::vector<std::string>& names) {
  std::vector<ModulePtr> out;
  for (const std::string& n : names) out.push_back(ws.module(n).module);
  return out;
}

}  // namespace

const std::vector<std::string>& commandNames() {
  static const std::vector<std::string> names{"eval",    "order",  "dual",    "freereal", "pptype",
                                              "purity",  "pullback", "pushout", "herzog",  "tensor",
                                              "lattice", "filters", "preenvelope", "scalars", "validate"};
  return names;
}

CommandResult runCommand(const Workspace& ws, const std::vector<std::string>& args) {
  CLI::App app{"ppkit workspace commands", "ppkit"};
  app.require_subcommand(1);
  std::map<std::string, std::function<int(std::ostream&)>> handlers;

  // Shared option storage; each command binds the ones it needs.
  std::string formula, module, tuple, phi, psi, ctx, map, fmap, pmap, imap, right, left, rtuple, ltuple, budget,
      mode, expect;
  std::size_t arity = 1, stages = 0, cap = kDefaultLatticeCap;
  long long avoid = -1;
  bool canonical = false;
  std::vector<std::string> targets;

  {
    CLI::App* c = app.add_subcommand("eval", "Solution set of a formula in a module");
    c->add_option("--formula", formula)->required();
    c->add_option("--module", module)->required();
    c->add_option("--tuple", tuple, "Check membership of this tuple");
    handlers["eval"] = [&, c](std::ostream& os) {
      const FormulaEntry& f = ws.formula(formula);
      const ModuleEntry& m = ws.module(module);
      os << "formula: " << formatFormula(f.formula) << "\n";
      os << "module: " << describe(m.name, *m.module) << "\n";
      const SubgroupRep s = evaluate(f.formula, m.module);
      printSubgroup(os, s);
      if (c->count("--tuple")) {
        const bool in = s.contains(parseTuple(*m.module, tuple));
        os << "tuple " << tuple << " satisfies: " << yesNo(in) << "\n";
        return in ? kExitOk : kExitNegative;
      }
      return kExitOk;
    };
  }
  {
    CLI::App* c = app.add_subcommand("order", "Decide phi <= psi absolutely or relative to a context");
    c->add_option("mode", mode)->required()->check(CLI::IsMember({"absolute", "relative"}));
    c->add_option("--phi", phi)->required();
    c->add_option("--psi", psi)->required();
    c->add_option("--ctx", ctx, "Context for relative order");
    handlers["order"] = [&](std::ostream& os) {
      const PpFormula& a = ws.formula(phi).formula;
      const PpFormula& b = ws.formula(psi).formula;
      os << "phi: " << formatFormula(a) << "\n";
      os << "psi: " << formatFormula(b) << "\n";
      bool leq = false;
      if (mode == "absolute") {
        leq = leqAbsolute(a, b);
      } else {
        if (ctx.empty()) fail(ErrorKind::InvalidArgument, "relative order needs --ctx");
        os << "context: " << ctx << "\n";
        leq = leqRelative(a, b, ws.context(ctx).context);
      }
      os << mode << " phi <= psi: " << yesNo(leq) << "\n";
      return leq ? kExitOk : kExitNegative;
    };
  }
  {
    CLI::App* c = app.add_subcommand("dual", "Elementary dual of a formula");
    c->add_option("--formula", formula)->required();
    handlers["dual"] = [&](std::ostream& os) {
      const PpFormula& f = ws.formula(formula).formula;
      const PpFormula d = dual(f);
      os << "formula: " << formatFormula(f) << " (" << to_string(f.side()) << ")\n";
      os << "dual: " << formatFormula(d) << " (" << to_string(d.side()) << ")\n";
      os << "dual of dual equivalent: " << yesNo(equivalentAbsolute(dual(d), f)) << "\n";
      return kExitOk;
    };
  }
  {
    CLI::App* c = app.add_subcommand("freereal", "Free realisation of a formula");
    c->add_option("--formula", formula)->required();
    handlers["freereal"] = [&](std::ostream& os) {
      const PpFormula& f = ws.formula(formula).formula;
      const PointedModule p = freeRealisation(f);
      os << "formula: " << formatFormula(f) << "\n";
      printModule(os, *p.module);
      os << "tuple: " << formatTuple(p.tuple) << "\n";
      os << "type generator: " << formatFormula(ppTypeGenerator(p.module, p.tuple)) << "\n";
      return kExitOk;
    };
  }
  {
    CLI::App* c = app.add_subcommand("pptype", "Formula generating the pp-type of a tuple");
    c->add_option("--module", module)->required();
    c->add_option("--tuple", tuple)->required();
    handlers["pptype"] = [&](std::ostream& os) {
      const ModuleEntry& m = ws.module(module);
      const Tuple t = parseTuple(*m.module, tuple);
      os << "module: " << describe(m.name, *m.module) << "\n";
      os << "tuple: " << formatTuple(t) << "\n";
      os << "generator: " << formatFormula(ppTypeGenerator(m.module, t)) << "\n";
      return kExitOk;
    };
  }
  {
    CLI::App* c = app.add_subcommand("purity", "Pure mono / pure epi check for a map");
    c->add_option("--map", map)->required();
    c->add_option("--expect", expect, "mono, epi or either (default)")
        ->check(CLI::IsMember({"mono", "epi", "either"}));
    handlers["purity"] = [&](std::ostream& os) {
      const MapEntry& f = ws.map(map);
      os << "map: " << f.name << ": " << f.source << " -> " << f.target << "\n";
      const PurityReport r = purityCheck(f.map);
      printPurity(os, "map", r);
      const bool ok = expect == "mono" ? r.pureMono : expect == "epi" ? r.pureEpi : (r.pureMono || r.pureEpi);
      return ok ? kExitOk : kExitNegative;
    };
  }
  {
    CLI::App* c = app.add_subcommand("pullback", "Pullback of f: M -> D' along p: D -> D'");
    c->add_option("--f", fmap)->required();
    c->add_option("--p", pmap)->required();
    c->add_option("--ctx", ctx, "Check the explicit pairs of this context on the pullback");
    handlers["pullback"] = [&](std::ostream& os) {
      const MapEntry& f = ws.map(fmap);
      const MapEntry& p = ws.map(pmap);
      printPurity(os, "input p", purityCheck(p.map));
      const PullbackResult r = pullbackPure(f.map, p.map);
      os << "pullback: dimension " << r.x->dim() << "\n";
      printPurity(os, "inclusion", r.inclusionPurity);
      printPurity(os, "to M", r.toMPurity);
      if (!ctx.empty()) os << "explicit pairs closed: " << yesNo(memberCheck(r.x, ws.context(ctx).context)) << "\n";
      return r.toMPurity.pureEpi ? kExitOk : kExitNegative;
    };
  }
  {
    CLI::App* c = app.add_subcommand("pushout", "Pushout of i: D' -> D along f: D' -> M");
    c->add_option("--i", imap)->required();
    c->add_option("--f", fmap)->required();
    c->add_option("--ctx", ctx, "Check the explicit pairs of this context on the pushout");
    handlers["pushout"] = [&](std::ostream& os) {
      const PushoutResult r = pushoutPure(ws.map(imap).map, ws.map(fmap).map);
      os << "input i pure mono: " << yesNo(r.inputPureMono) << "\n";
      os << "pushout: dimension " << r.y->dim() << "\n";
      printPurity(os, "anti-diagonal", r.antiDiagonalPurity);
      printPurity(os, "from M", r.fromMPurity);
      printPurity(os, "from D", r.fromDPurity);
      if (!ctx.empty()) os << "explicit pairs closed: " << yesNo(memberCheck(r.y, ws.context(ctx).context)) << "\n";
      return r.fromMPurity.pureMono ? kExitOk : kExitNegative;
    };
  }
  {
    CLI::App* c = app.add_subcommand("herzog", "Zero test for a tensor of tuples via dual formulas");
    c->add_option("--right", right)->required();
    c->add_option("--rtuple", rtuple)->required();
    c->add_option("--left", left)->required();
    c->add_option("--ltuple", ltuple)->required();
    handlers["herzog"] = [&](std::ostream& os) {
      const ModuleEntry& m = ws.module(right);
      const ModuleEntry& l = ws.module(left);
      const Tuple a = parseTuple(*m.module, rtuple);
      const Tuple b = parseTuple(*l.module, ltuple);
      const HerzogResult h = herzogDetail(m.module, a, l.module, b);
      os << "right: " << describe(m.name, *m.module) << " tuple " << formatTuple(a) << "\n";
      os << "left: " << describe(l.name, *l.module) << " tuple " << formatTuple(b) << "\n";
      os << "generator: " << formatFormula(h.generator) << "\n";
      os << "dual generator: " << formatFormula(h.dualGenerator) << "\n";
      os << "zero: " << yesNo(h.zero) << "\n";
      const bool oracle = tensorProduct(m.module, l.module).isZero(a, b);
      os << "tensor oracle agrees: " << yesNo(oracle == h.zero) << "\n";
      if (oracle != h.zero) fail(ErrorKind::ValidationFailure, "criterion and tensor oracle disagree");
      return h.zero ? kExitOk : kExitNegative;
    };
  }
  {
    CLI::App* c = app.add_subcommand("tensor", "Tensor product of a right and a left module");
    c->add_option("--right", right)->required();
    c->add_option("--left", left)->required();
    c->add_option("--rtuple", rtuple);
    c->add_option("--ltuple", ltuple);
    handlers["tensor"] = [&, c](std::ostream& os) {
      const ModuleEntry& m = ws.module(right);
      const ModuleEntry& l = ws.module(left);
      const TensorResult t = tensorProduct(m.module, l.module);
      os << describe(m.name, *m.module) << " (x) " << describe(l.name, *l.module) << "\n";
      os << "dimension: " << t.dim() << "\n";
      if (c->count("--rtuple") || c->count("--ltuple")) {
        const Tuple a = parseTuple(*m.module, rtuple);
        const Tuple b = parseTuple(*l.module, ltuple);
        os << "class: " << formatVector(t.tensor(a, b)) << "\n";
        os << "zero: " << yesNo(t.isZero(a, b)) << "\n";
      }
      return kExitOk;
    };
  }
  auto addLatticeOptions = [&](CLI::App* c) {
    c->add_option("--module", module)->required();
    c->add_option("--arity", arity)->check(CLI::PositiveNumber);
    c->add_option("--cap", cap, "Largest |M|^n and subspace count to enumerate")->check(CLI::PositiveNumber);
  };
  auto printLattice = [&](std::ostream& os, const PpLattice& lat) {
    os << "module: " << describe(module, *lat.module) << ", arity " << lat.arity << "\n";
    os << "elements: " << lat.size() << "\n";
    for (std::size_t i = 0; i < lat.size(); ++i)
      os << "  [" << i << "] dim " << lat.elements[i].space.dim() << ": " << formatFormula(lat.witnesses[i]) << "\n";
    os << "hasse edges: " << lat.hasse.size() << "\n";
    for (const auto& [lo, hi] : lat.hasse) os << "  " << lo << " < " << hi << "\n";
  };
  {
    CLI::App* c = app.add_subcommand("lattice", "Lattice of pp-definable subgroups");
    addLatticeOptions(c);
    handlers["lattice"] = [&](std::ostream& os) {
      printLattice(os, ppLattice(ws.module(module).module, arity, cap));
      return kExitOk;
    };
  }
  {
    CLI::App* c = app.add_subcommand("filters", "Neg-isolated filters avoiding a lattice element");
    addLatticeOptions(c);
    c->add_option("--avoid", avoid, "Lattice index to avoid (default: bottom)");
    handlers["filters"] = [&](std::ostream& os) {
      const PpLattice lat = ppLattice(ws.module(module).module, arity, cap);
      printLattice(os, lat);
      const std::size_t a = avoid < 0 ? lat.bottom : static_cast<std::size_t>(avoid);
      const std::vector<NegIsolatedFilter> fs = filterAnalysis(lat, a);
      os << "avoid: " << a << "\n";
      os << "neg-isolated filters: " << fs.size() << "\n";
      bool all = true;
      for (const NegIsolatedFilter& f : fs) {
        os << "  up-set of " << f.generator << ": {";
        for (std::size_t i = 0; i < f.filter.members.size(); ++i) os << (i ? ", " : "") << f.filter.members[i];
        os << "} ziegler: " << passFail(f.zieglerIrreducible) << "\n";
        all = all && f.zieglerIrreducible;
      }
      return all ? kExitOk : kExitNegative;
    };
  }
  {
    CLI::App* c = app.add_subcommand("preenvelope", "Staged construction of a strictly atomic preenvelope");
    c->add_option("--module", module)->required();
    c->add_option("--tuple", tuple)->required();
    c->add_option("--ctx", ctx)->required();
    c->add_option("--budget", budget, "Budget section (default: built-in budget)");
    c->add_option("--stages", stages, "Override the number of stages")->check(CLI::PositiveNumber);
    c->add_option("--targets", targets, "Modules for the factorisation checks (default: generators and their squares)");
    c->add_option("--phi", phi, "Generator of the type of the tuple (default: computed)");
    handlers["preenvelope"] = [&](std::ostream& os) {
      const ModuleEntry& m = ws.module(module);
      const ContextEntry& d = ws.context(ctx);
      Budget b = budget.empty() ? Budget{} : ws.budget(budget).budget;
      if (stages) b.stages = stages;
      const Tuple a = parseTuple(*m.module, tuple);
      const ConstructionState st = runConstruction(m.module, a, d.context, b);
      os << "module: " << describe(m.name, *m.module) << " tuple " << formatTuple(a) << "\n";
      os << "context: " << d.name << "\n";
      os << "budget: bound " << b.bound << ", equations " << b.equations << ", candidates " << b.candidates
         << ", stages " << b.stages << "\n";
      for (std::size_t n = 0; n < st.stageCount(); ++n) {
        os << "stage " << n << ": dimension " << st.modules[n]->dim() << "\n";
        os << "  theta: " << formatFormula(st.thetas[n]) << "\n";
        if (n < st.consequences.size())
          os << "  consequences: " << st.consequences[n].formulas.size()
             << (st.consequences[n].truncated ? " (truncated)" : "") << "\n";
        if (n < st.schedule.size()) {
          for (const ScheduledFormula& s : st.schedule[n])
            os << "  scheduled (" << s.list << ", " << s.index << ")" << (s.fallback ? " fallback" : "") << ": "
               << formatFormula(s.formula) << "\n";
        }
        if (n < st.isoMaps.size()) os << "  map to next stage is iso: " << yesNo(st.isoMaps[n]) << "\n";
      }
      if (st.budgetExhausted) os << "budget exhausted: stopped early\n";
      const auto stable = st.isoStableFrom();
      os << "iso-stable from stage: " << (stable ? std::to_string(*stable) : std::string("none")) << "\n";

      std::vector<ModulePtr> ts;
      if (!targets.empty()) {
        ts = moduleList(ws, targets);
      } else {
        for (const ModulePtr& g : d.context.generators()) {
          ts.push_back(g);
          ts.push_back(power(g, 2));
        }
      }
      bool ok = true;
      const FactorisationReport fr = verifyFactorisation(st, ts);
      os << "factorisation check: " << passFail(fr.ok) << " (" << fr.checked << " maps)\n";
      ok = ok && fr.ok;
      const PreenvelopeReport pr = verifyPreenvelope(st, ts);
      os << "preenvelope check: " << passFail(pr.ok) << " (" << pr.checked << " maps)\n";
      ok = ok && pr.ok;
      bool typesOk = true;
      for (const auto& row : typeStageChecks(st))
        for (bool v : row) typesOk = typesOk && v;
      os << "type stage check: " << passFail(typesOk) << "\n";
      ok = ok && typesOk;
      if (!d.context.pairs().empty()) {
        bool pairsOk = true;
        for (bool v : explicitPairStageChecks(st)) pairsOk = pairsOk && v;
        os << "explicit pair check: " << passFail(pairsOk) << "\n";
        ok = ok && pairsOk;
      }
      const PpFormula gen = phi.empty() ? ppTypeGenerator(m.module, a) : ws.formula(phi).formula;
      os << "generator: " << formatFormula(gen) << "\n";
      const bool genOk = verifyGenerator(st, gen);
      os << "generator check: " << passFail(genOk) << "\n";
      ok = ok && genOk;
      return ok ? kExitOk : kExitNegative;
    };
  }
  {
    CLI::App* c = app.add_subcommand("scalars", "Ring of definable scalars of a right module");
    c->add_option("--module", module)->required();
    handlers["scalars"] = [&](std::ostream& os) {
      const ModuleEntry& m = ws.module(module);
      os << "module: " << describe(m.name, *m.module) << "\n";
      const EndBiend eb = endAndBiend(m.module);
      printRing(os, "End", eb.end, "s");
      printRing(os, "Biend", eb.biend, "g");
      const ScalarRingResult r = scalarRing(m.module);
      printRing(os, "definable scalars", r.ring, "r");
      for (std::size_t i = 0; i < r.ring.fromAlgebra.size(); ++i)
        os << "  image of " << m.module->algebra().labels()[i] << " = " << combination(r.ring.fromAlgebra[i], "r")
           << "\n";
      for (std::size_t i = 0; i < r.scalars.size(); ++i)
        os << "  r" << i + 1 << ": " << formatFormula(r.scalars[i].rho) << "\n";
      os << "isomorphic to Biend: " << yesNo(r.isomorphicToBiend) << "\n";
      os << "map from algebra: " << yesNo(r.homFromAlgebra) << "\n";
      os << "kernel is annihilator: " << yesNo(r.kernelIsAnnihilator) << "\n";
      os << "all total and functional: " << yesNo(r.allTotalFunctional) << "\n";
      const bool ok = r.isomorphicToBiend && r.homFromAlgebra && r.kernelIsAnnihilator && r.allTotalFunctional;
      return ok ? kExitOk : kExitNegative;
    };
  }
  {
    CLI::App* c = app.add_subcommand("validate", "Summarise the workspace and check its canonical round trip");
    c->add_flag("--canonical", canonical, "Print the canonical document");
    handlers["validate"] = [&](std::ostream& os) {
      os << "algebras: " << ws.algebras.size() << "\n";
      os << "modules: " << ws.modules.size() << "\n";
      os << "formulas: " << ws.formulas.size() << "\n";
      os << "contexts: " << ws.contexts.size() << "\n";
      os << "budgets: " << ws.budgets.size() << "\n";
      os << "maps: " << ws.maps.size() << "\n";
      const std::string text = serializeWorkspace(ws);
      const bool same = equivalentWorkspaces(ws, parseWorkspace(text));
      os << "round trip: " << yesNo(same) << "\n";
      if (canonical) os << "\n" << text;
      return same ? kExitOk : kExitError;
    };
  }

  CommandResult result;
  std::ostringstream body;
  const std::string name = args.empty() ? std::string("help") : args.front();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    const CLI::App* chosen = app.get_subcommands().front();
    result.exitCode = handlers.at(chosen->get_name())(body);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* sub = nullptr;
    for (const CLI::App* s : app.get_subcommands()) sub = s;
    body << (sub ? sub->help() : app.help());
    result.exitCode = kExitOk;
  } catch (const CLI::ParseError& e) {
    body << "error: " << e.what() << "\n";
    result.exitCode = kExitError;
  } catch (const Error& e) {
    body << "error: " << e.what() << "\n";
    result.exitCode = kExitError;
  }
  result.report = std::string("# ppkit ") + kVersion + " " + name + "\n" + body.str();
  return result;
}

}  // namespace ppkit::cli
