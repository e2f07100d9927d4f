#include "ppkit/context.hpp"

#include "ppkit/errors.hpp"

namespace ppkit {

DefinableContext makeContext(AlgebraPtr algebra, Side side, std::vector<ModulePtr> generators,
                             std::vector<ClosedPair> pairs) {
  if (generators.empty() && pairs.empty())
    fail(ErrorKind::EmptyContext, "a context needs generators or explicit pairs");
  for (const ModulePtr& g : generators) {
    if (!sameAlgebra(g->algebraPtr(), algebra)) fail(ErrorKind::AlgebraMismatch, "generator over another algebra");
    if (g->side() != side) fail(ErrorKind::SideMismatch, "generator of the wrong side");
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const ClosedPair& pr = pairs[k];
    checkCompatible(pr.upper, pr.lower);
    if (!sameAlgebra(pr.upper.algebraPtr(), algebra) || pr.upper.side() != side)
      fail(ErrorKind::ValidationFailure, "pair " + std::to_string(k + 1) + " is for another algebra or side");
    if (!leqAbsolute(pr.lower, pr.upper))
      fail(ErrorKind::ValidationFailure, "pair " + std::to_string(k + 1) + " is not ordered (lower is not below upper)");
    for (std::size_t g = 0; g < generators.size(); ++g)
      if (!pairClosed(pr.upper, pr.lower, generators[g]))
        fail(ErrorKind::ValidationFailure,
             "generator " + std::to_string(g + 1) + " does not close pair " + std::to_string(k + 1));
  }
  DefinableContext ctx;
  ctx.algebra_ = std::move(algebra);
  ctx.side_ = side;
  ctx.generators_ = std::move(generators);
  ctx.pairs_ = std::move(pairs);
  return ctx;
}

bool pairClosed(const PpFormula& phi, const PpFormula& psi, const ModulePtr& m) {
  checkCompatible(phi, psi);
  return evaluate(phi, m).space == evaluate(psi, m).space;
}

bool memberCheck(const ModulePtr& n, const DefinableContext& ctx) {
  if (ctx.pairs().empty())
    fail(ErrorKind::NoExplicitPairs, "membership needs an explicit pair list; this context has generators only");
  for (const ClosedPair& pr : ctx.pairs())
    if (!pairClosed(pr.upper, pr.lower, n)) return false;
  return true;
}

bool leqRelative(const PpFormula& phi, const PpFormula& psi, const DefinableContext& ctx) {
  return leqRelative(phi, psi, ctx.generators());
}

namespace {

void checkElementCap(const ModuleRep& m) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    count *= m.field().order();
    if (count > kElementCap)
      fail(ErrorKind::CapExceeded, "module of dimension " + std::to_string(m.dim()) + " has too many elements");
  }
}

}  // namespace

PurityReport purityCheck(const ModuleMap& f) {
  const ModulePtr& m = f.source();
  const ModulePtr& n = f.target();
  checkElementCap(*m);
  checkElementCap(*n);
  PurityReport report;
  report.pureMono = true;
  forEachVector(m->field(), m->dim(), [&](const Vec& a) {
    if (!report.pureMono) return;
    PpFormula psi = ppTypeGenerator(n, {f.apply(a)});
    if (!satisfies(psi, m, {a})) {
      report.pureMono = false;
      report.monoWitness = PurityWitness{a, std::move(psi)};
    }
  });
  report.pureEpi = true;
  forEachVector(n->field(), n->dim(), [&](const Vec& a) {
    if (!report.pureEpi) return;
    PpFormula phi = ppTypeGenerator(n, {a});
    const Subspace lifts = evaluate(phi, m).space.image(f.matrix());
    if (!lifts.contains(a)) {
      report.pureEpi = false;
      report.epiWitness = PurityWitness{a, std::move(phi)};
    }
  });
  return report;
}

PullbackResult pullbackPure(const ModuleMap& f, const ModuleMap& p) {
  if (!f.target()->sameStructure(*p.target()))
    fail(ErrorKind::InvalidArgument, "pullback needs maps into a common module");
  const ModulePtr& m = f.source();
  const ModulePtr& d = p.source();
  const Field& field = m->field();
  const DirectSum s = directSum({m, d}, m->algebraPtr(), m->side());
  // (m, d) -> f m - p d
  const std::size_t dt = f.target()->dim();
  Matrix h(m->dim() + d->dim(), dt);
  for (std::size_t r = 0; r < m->dim(); ++r)
    for (std::size_t c = 0; c < dt; ++c) h(r, c) = f.matrix()(r, c);
  for (std::size_t r = 0; r < d->dim(); ++r)
    for (std::size_t c = 0; c < dt; ++c) h(m->dim() + r, c) = field.neg(p.matrix()(r, c));
  const Subspace kernel =
      Subspace::span(m->fieldPtr(), m->dim() + d->dim(), linalg::nullSpace(field, linalg::transpose(h)));
  const Submodule x = submodule(s.module, kernel);
  PullbackResult out;
  out.x = x.module;
  out.inclusion = x.inclusion;
  out.toM = compose(s.projections[0], x.inclusion);
  out.toD = compose(s.projections[1], x.inclusion);
  out.inclusionPurity = purityCheck(out.inclusion);
  out.toMPurity = purityCheck(out.toM);
  return out;
}

PushoutResult pushoutPure(const ModuleMap& i, const ModuleMap& f) {
  if (!i.source()->sameStructure(*f.source()))
    fail(ErrorKind::InvalidArgument, "pushout needs maps from a common module");
  const ModulePtr& dp = i.source();
  const ModulePtr& d = i.target();
  const ModulePtr& m = f.target();
  const Field& field = m->field();
  const DirectSum s = directSum({m, d}, m->algebraPtr(), m->side());
  Matrix a(dp->dim(), m->dim() + d->dim());
  for (std::size_t r = 0; r < dp->dim(); ++r) {
    for (std::size_t c = 0; c < m->dim(); ++c) a(r, c) = f.matrix()(r, c);
    for (std::size_t c = 0; c < d->dim(); ++c) a(r, m->dim() + c) = field.neg(i.matrix()(r, c));
  }
  PushoutResult out;
  out.antiDiagonal = makeMap(dp, s.module, a);
  const Subspace image = Subspace::full(dp->fieldPtr(), dp->dim()).image(a);
  const Quotient q = quotientModule(s.module, image);
  out.y = q.module;
  out.fromM = compose(q.projection, s.injections[0]);
  out.fromD = compose(q.projection, s.injections[1]);
  out.inputPureMono = purityCheck(i).pureMono;
  out.antiDiagonalPurity = purityCheck(out.antiDiagonal);
  out.fromMPurity = purityCheck(out.fromM);
  out.fromDPurity = purityCheck(out.fromD);
  return out;
}

ModuleMap strictAtomicWitness(const ModulePtr& m, const Tuple& a, const DefinableContext& ctx, const ModulePtr& n,
                              const Tuple& b) {
  if (a.size() != b.size()) fail(ErrorKind::LengthMismatch, "tuples of different lengths");
  checkTuple(*n, b);
  bool inContext = false;
  for (const ModulePtr& g : ctx.generators())
    if (g == n || g->sameStructure(*n)) inContext = true;
  if (!inContext && !ctx.pairs().empty()) inContext = memberCheck(n, ctx);
  if (!inContext) fail(ErrorKind::ValidationFailure, "target module is not a generator or member of the context");
  const PpFormula phi0 = ppTypeGenerator(m, a);
  if (!satisfies(phi0, n, b))
    fail(ErrorKind::NotInSolutionSet, "target tuple does not satisfy the pp-type generator " + formatFormula(phi0));
  auto map = homSolve(m, n, a, b);
  if (!map) fail(ErrorKind::ValidationFailure, "no morphism realises the tuple although its type generator holds");
  return *map;
}

}  // namespace ppkit
