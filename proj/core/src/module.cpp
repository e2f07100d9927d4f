#include "ppkit/module.hpp"

#include <random>
#include <string>

#include "ppkit/errors.hpp"

namespace ppkit {
namespace {

void requireCompatible(const ModuleRep& a, const ModuleRep& b, const char* what) {
  if (!sameAlgebra(a.algebraPtr(), b.algebraPtr()))
    fail(ErrorKind::AlgebraMismatch, std::string(what) + ": modules over different algebras");
  if (a.side() != b.side()) fail(ErrorKind::SideMismatch, std::string(what) + ": modules on different sides");
}

}  // namespace

const char* to_string(Side s) noexcept { return s == Side::Right ? "right" : "left"; }

ModulePtr makeModule(AlgebraPtr algebra, Side side, std::size_t dim, std::vector<Matrix> actions) {
  if (!algebra) fail(ErrorKind::InvalidArgument, "module needs an algebra");
  const Algebra& alg = *algebra;
  const Field& f = alg.field();
  if (actions.size() != alg.dim())
    fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(alg.dim()) + " action matrices, got " +
                                           std::to_string(actions.size()));
  for (const Matrix& a : actions)
    if (a.rows() != dim || a.cols() != dim)
      fail(ErrorKind::DimensionMismatch, "action matrices must be " + std::to_string(dim) + "x" + std::to_string(dim));

  // In both native conventions the law reads A(e_i) A(e_j) = sum_k c_ijk A(e_k).
  auto combination = [&](const Vec& coeffs) {
    Matrix out(dim, dim);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) out = linalg::add(f, out, linalg::scale(f, coeffs[k], actions[k]));
    return out;
  };
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j)
      if (linalg::mul(f, actions[i], actions[j]) != combination(alg.product(i, j)))
        fail(ErrorKind::NotARepresentation,
             "action of " + alg.labels()[i] + "*" + alg.labels()[j] + " is not the product of the actions");
  if (combination(alg.unit()) != Matrix::identity(dim))
    fail(ErrorKind::NotARepresentation, "unit does not act as the identity");

  std::shared_ptr<ModuleRep> m(new ModuleRep());
  m->algebra_ = std::move(algebra);
  m->side_ = side;
  m->dim_ = dim;
  m->row_.reserve(actions.size());
  for (const Matrix& a : actions) m->row_.push_back(side == Side::Right ? a : linalg::transpose(a));
  m->native_ = std::move(actions);
  return m;
}

Matrix ModuleRep::rowAction(const Vec& r) const {
  const Field& f = field();
  Matrix out(dim_, dim_);
  for (std::size_t k = 0; k < r.size(); ++k)
    if (r[k] != 0) out = linalg::add(f, out, linalg::scale(f, r[k], row_[k]));
  return out;
}

Vec ModuleRep::act(const Vec& m, const Vec& r) const {
  const Field& f = field();
  Vec out(dim_, 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    const Vec part = linalg::vecMat(f, m, row_[k]);
    linalg::axpy(f, r[k], part, out);
  }
  return out;
}

bool ModuleRep::sameStructure(const ModuleRep& other) const {
  return side_ == other.side_ && dim_ == other.dim_ && native_ == other.native_ &&
         sameAlgebra(algebra_, other.algebra_);
}

ModuleMap::ModuleMap(ModulePtr source, ModulePtr target, Matrix rowMatrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(rowMatrix)) {
  if (matrix_.rows() != source_->dim() || matrix_.cols() != target_->dim())
    fail(ErrorKind::DimensionMismatch, "map matrix must be dim(source) x dim(target)");
}

Matrix ModuleMap::nativeMatrix() const {
  return source_->side() == Side::Right ? matrix_ : linalg::transpose(matrix_);
}

Vec ModuleMap::apply(const Vec& v) const { return linalg::vecMat(source_->field(), v, matrix_); }

Tuple ModuleMap::apply(const Tuple& t) const {
  Tuple out;
  out.reserve(t.size());
  for (const Vec& v : t) out.push_back(apply(v));
  return out;
}

bool ModuleMap::isInjective() const { return linalg::rank(source_->field(), matrix_) == source_->dim(); }
bool ModuleMap::isSurjective() const { return linalg::rank(source_->field(), matrix_) == target_->dim(); }

bool ModuleMap::commutesWithActions() const {
  const Field& f = source_->field();
  for (std::size_t l = 0; l < source_->algebra().dim(); ++l)
    if (linalg::mul(f, source_->rowAction(l), matrix_) != linalg::mul(f, matrix_, target_->rowAction(l)))
      return false;
  return true;
}

ModuleMap makeMap(ModulePtr source, ModulePtr target, Matrix rowMatrix) {
  requireCompatible(*source, *target, "makeMap");
  ModuleMap map(std::move(source), std::move(target), std::move(rowMatrix));
  if (!map.commutesWithActions()) fail(ErrorKind::NotAMorphism, "matrix does not commute with the actions");
  return map;
}

ModuleMap identityMap(const ModulePtr& m) { return ModuleMap(m, m, Matrix::identity(m->dim())); }

ModuleMap zeroMap(const ModulePtr& source, const ModulePtr& target) {
  return ModuleMap(source, target, Matrix(source->dim(), target->dim()));
}

ModuleMap compose(const ModuleMap& second, const ModuleMap& first) {
  if (first.target()->dim() != second.source()->dim())
    fail(ErrorKind::DimensionMismatch, "compose: codomain and domain differ");
  return ModuleMap(first.source(), second.target(),
                   linalg::mul(first.source()->field(), first.matrix(), second.matrix()));
}

ModuleMap addMaps(const ModuleMap& a, const ModuleMap& b) {
  return ModuleMap(a.source(), a.target(), linalg::add(a.source()->field(), a.matrix(), b.matrix()));
}

ModulePtr regularModule(const AlgebraPtr& algebra, Side side) {
  const std::size_t d = algebra->dim();
  std::vector<Matrix> actions;
  for (std::size_t l = 0; l < d; ++l) {
    Matrix a(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        if (side == Side::Right) {
          a(i, k) = algebra->product(i, l)[k];  // e_i . e_l, row vectors
        } else {
          a(k, i) = algebra->product(l, i)[k];  // e_l . e_i, column vectors
        }
      }
    actions.push_back(std::move(a));
  }
  return makeModule(algebra, side, d, std::move(actions));
}

ModulePtr zeroModule(const AlgebraPtr& algebra, Side side) {
  return makeModule(algebra, side, 0, std::vector<Matrix>(algebra->dim(), Matrix(0, 0)));
}

ModulePtr dualModule(const ModulePtr& m) {
  return makeModule(m->algebraPtr(), opposite(m->side()), m->dim(), m->actions());
}

DirectSum directSum(const std::vector<ModulePtr>& parts, const AlgebraPtr& algebra, Side side) {
  AlgebraPtr alg = parts.empty() ? algebra : parts.front()->algebraPtr();
  if (!alg) fail(ErrorKind::InvalidArgument, "direct sum of no parts needs an algebra");
  const Side s = parts.empty() ? side : parts.front()->side();
  std::size_t total = 0;
  for (const auto& p : parts) {
    requireCompatible(*parts.front(), *p, "directSum");
    total += p->dim();
  }
  std::vector<Matrix> actions(alg->dim(), Matrix(total, total));
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t l = 0; l < alg->dim(); ++l)
      for (std::size_t i = 0; i < p->dim(); ++i)
        for (std::size_t j = 0; j < p->dim(); ++j) actions[l](offset + i, offset + j) = p->action(l)(i, j);
    offset += p->dim();
  }
  DirectSum out;
  out.module = makeModule(alg, s, total, std::move(actions));
  offset = 0;
  for (const auto& p : parts) {
    Matrix inj(p->dim(), total);
    Matrix proj(total, p->dim());
    for (std::size_t i = 0; i < p->dim(); ++i) {
      inj(i, offset + i) = 1;
      proj(offset + i, i) = 1;
    }
    out.injections.emplace_back(p, out.module, std::move(inj));
    out.projections.emplace_back(out.module, p, std::move(proj));
    offset += p->dim();
  }
  return out;
}

ModulePtr power(const ModulePtr& m, std::size_t k) {
  return directSum(std::vector<ModulePtr>(k, m), m->algebraPtr(), m->side()).module;
}

bool isSubmodule(const ModuleRep& m, const Subspace& sub) {
  for (const Vec& b : sub.basis())
    for (std::size_t l = 0; l < m.algebra().dim(); ++l)
      if (!sub.contains(linalg::vecMat(m.field(), b, m.rowAction(l)))) return false;
  return true;
}

Subspace generatedSubmodule(const ModuleRep& m, const std::vector<Vec>& vectors) {
  Subspace current = Subspace::span(m.fieldPtr(), m.dim(), vectors);
  while (true) {
    std::vector<Vec> all = current.basis();
    for (const Vec& b : current.basis())
      for (std::size_t l = 0; l < m.algebra().dim(); ++l) all.push_back(linalg::vecMat(m.field(), b, m.rowAction(l)));
    Subspace next = Subspace::span(m.fieldPtr(), m.dim(), all);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Quotient quotientModule(const ModulePtr& m, const Subspace& sub) {
  if (sub.ambient() != m->dim()) fail(ErrorKind::DimensionMismatch, "subspace lives in a different space");
  if (!isSubmodule(*m, sub)) fail(ErrorKind::NotASubmodule, "subspace is not closed under the action");
  const Field& f = m->field();
  const auto freeCols = sub.freeColumns();
  const std::size_t qd = freeCols.size();
  // Quotient coordinates of v are the free-column entries of reduce(v).
  auto project = [&](const Vec& v) {
    const Vec r = sub.dim() == 0 ? v : sub.reduce(v);
    Vec out(qd);
    for (std::size_t i = 0; i < qd; ++i) out[i] = r[freeCols[i]];
    return out;
  };
  Matrix proj(m->dim(), qd);
  for (std::size_t i = 0; i < m->dim(); ++i) {
    Vec e(m->dim(), 0);
    e[i] = 1;
    const Vec p = project(e);
    for (std::size_t j = 0; j < qd; ++j) proj(i, j) = p[j];
  }
  std::vector<Matrix> actions;
  for (std::size_t l = 0; l < m->algebra().dim(); ++l) {
    Matrix rowForm(qd, qd);
    for (std::size_t i = 0; i < qd; ++i) {
      Vec e(m->dim(), 0);
      e[freeCols[i]] = 1;
      const Vec img = project(linalg::vecMat(f, e, m->rowAction(l)));
      for (std::size_t j = 0; j < qd; ++j) rowForm(i, j) = img[j];
    }
    actions.push_back(m->side() == Side::Right ? rowForm : linalg::transpose(rowForm));
  }
  Quotient out{makeModule(m->algebraPtr(), m->side(), qd, std::move(actions)), {}};
  out.projection = ModuleMap(m, out.module, std::move(proj));
  return out;
}

Submodule submodule(const ModulePtr& m, const Subspace& sub) {
  if (sub.ambient() != m->dim()) fail(ErrorKind::DimensionMismatch, "subspace lives in a different space");
  if (!isSubmodule(*m, sub)) fail(ErrorKind::NotASubmodule, "subspace is not closed under the action");
  const Field& f = m->field();
  const std::size_t k = sub.dim();
  std::vector<Matrix> actions;
  for (std::size_t l = 0; l < m->algebra().dim(); ++l) {
    Matrix rowForm(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const Vec c = sub.coordinates(linalg::vecMat(f, sub.basis()[i], m->rowAction(l)));
      for (std::size_t j = 0; j < k; ++j) rowForm(i, j) = c[j];
    }
    actions.push_back(m->side() == Side::Right ? rowForm : linalg::transpose(rowForm));
  }
  Submodule out{makeModule(m->algebraPtr(), m->side(), k, std::move(actions)), {}};
  out.inclusion = ModuleMap(out.module, m, Matrix::fromRows(sub.basis(), m->dim()));
  return out;
}

SumQuotient sumQuotient(const std::vector<ModulePtr>& parts, const std::optional<Subspace>& relations) {
  if (parts.empty()) fail(ErrorKind::InvalidArgument, "sumQuotient needs at least one part");
  DirectSum ds = directSum(parts);
  SumQuotient out;
  if (!relations) {
    out.module = ds.module;
    out.injections = std::move(ds.injections);
    return out;
  }
  Quotient q = quotientModule(ds.module, *relations);
  out.module = q.module;
  for (const ModuleMap& inj : ds.injections) out.injections.push_back(compose(q.projection, inj));
  out.projection = q.projection;
  return out;
}

namespace {

// Equations (rows) in the unknown entries H[a][c] (index a * dn + c) of a
// row-form map M -> N expressing P_M(l) H = H P_N(l) for every basis l.
Matrix intertwinerSystem(const ModuleRep& m, const ModuleRep& n) {
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  const std::size_t basis = m.algebra().dim();
  const Field& f = m.field();
  Matrix eq(basis * dm * dn, dm * dn);
  std::size_t row = 0;
  for (std::size_t l = 0; l < basis; ++l) {
    const Matrix& pm = m.rowAction(l);
    const Matrix& pn = n.rowAction(l);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t c = 0; c < dn; ++c, ++row) {
        for (std::size_t a = 0; a < dm; ++a)
          if (pm(i, a) != 0) eq(row, a * dn + c) = f.add(eq(row, a * dn + c), pm(i, a));
        for (std::size_t b = 0; b < dn; ++b)
          if (pn(b, c) != 0) eq(row, i * dn + b) = f.sub(eq(row, i * dn + b), pn(b, c));
      }
  }
  return eq;
}

Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = v[i * cols + j];
  return out;
}

}  // namespace

std::vector<ModuleMap> homSpace(const ModulePtr& m, const ModulePtr& n) {
  requireCompatible(*m, *n, "homSpace");
  std::vector<ModuleMap> out;
  if (m->dim() == 0 || n->dim() == 0) return out;
  for (const Vec& sol : linalg::nullSpace(m->field(), intertwinerSystem(*m, *n)))
    out.emplace_back(m, n, unflatten(sol, m->dim(), n->dim()));
  return out;
}

std::optional<ModuleMap> homSolve(const ModulePtr& m, const ModulePtr& n, const Tuple& from, const Tuple& to) {
  requireCompatible(*m, *n, "homSolve");
  if (from.size() != to.size()) fail(ErrorKind::LengthMismatch, "homSolve: tuples differ in length");
  const std::size_t dm = m->dim();
  const std::size_t dn = n->dim();
  for (const Vec& v : from)
    if (v.size() != dm) fail(ErrorKind::DimensionMismatch, "homSolve: source element has wrong dimension");
  for (const Vec& v : to)
    if (v.size() != dn) fail(ErrorKind::DimensionMismatch, "homSolve: target element has wrong dimension");
  if (dm == 0 || dn == 0) {
    for (const Vec& v : to)
      if (!linalg::isZero(v)) return std::nullopt;
    return zeroMap(m, n);
  }
  const Matrix inter = intertwinerSystem(*m, *n);
  Matrix eq(inter.rows() + from.size() * dn, dm * dn);
  Vec rhs(eq.rows(), 0);
  for (std::size_t r = 0; r < inter.rows(); ++r)
    for (std::size_t c = 0; c < inter.cols(); ++c) eq(r, c) = inter(r, c);
  std::size_t row = inter.rows();
  for (std::size_t k = 0; k < from.size(); ++k)
    for (std::size_t c = 0; c < dn; ++c, ++row) {
      for (std::size_t a = 0; a < dm; ++a) eq(row, a * dn + c) = from[k][a];
      rhs[row] = to[k][c];
    }
  const LinearSolution sol = solveLinear(m->field(), eq, rhs);
  if (!sol.particular) return std::nullopt;
  return ModuleMap(m, n, unflatten(*sol.particular, dm, dn));
}

std::optional<ModuleMap> findIsomorphism(const ModulePtr& m, const ModulePtr& n) {
  if (m->dim() != n->dim()) return std::nullopt;
  requireCompatible(*m, *n, "findIsomorphism");
  if (m->dim() == 0) return zeroMap(m, n);
  const auto basis = homSpace(m, n);
  if (basis.empty()) return std::nullopt;
  const Field& f = m->field();
  auto combine = [&](const Vec& coeffs) {
    Matrix acc(m->dim(), n->dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coeffs[i] != 0) acc = linalg::add(f, acc, linalg::scale(f, coeffs[i], basis[i].matrix()));
    return ModuleMap(m, n, std::move(acc));
  };
  double space = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) space *= f.order();
  if (space <= 65536) {
    std::optional<ModuleMap> found;
    forEachVector(f, basis.size(), [&](const Vec& coeffs) {
      if (found) return;
      ModuleMap candidate = combine(coeffs);
      if (candidate.isIsomorphism()) found = std::move(candidate);
    });
    return found;
  }
  // Isomorphisms form a dense subset when they exist; sample deterministically.
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<unsigned> pick(0, f.order() - 1);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Vec coeffs(basis.size());
    for (auto& c : coeffs) c = static_cast<Scalar>(pick(rng));
    ModuleMap candidate = combine(coeffs);
    if (candidate.isIsomorphism()) return candidate;
  }
  return std::nullopt;
}

ModulePtr freeModule(const AlgebraPtr& algebra, Side side, std::size_t k) {
  return directSum(std::vector<ModulePtr>(k, regularModule(algebra, side)), algebra, side).module;
}

Tuple extendToGenerators(const ModuleRep& m, const Tuple& tuple) {
  Tuple out = tuple;
  Subspace span = generatedSubmodule(m, out);
  for (std::size_t i = 0; i < m.dim() && span.dim() < m.dim(); ++i) {
    Vec e(m.dim(), 0);
    e[i] = 1;
    if (span.contains(e)) continue;
    out.push_back(e);
    span = generatedSubmodule(m, out);
  }
  return out;
}

RMatrix presentation(const ModulePtr& m, const Tuple& gens) {
  const Algebra& alg = m->algebra();
  const Field& f = m->field();
  const std::size_t d = alg.dim();
  const std::size_t g = gens.size();
  for (const Vec& v : gens)
    if (v.size() != m->dim()) fail(ErrorKind::DimensionMismatch, "generator has wrong dimension");

  // Image of the free generator block (i, l) = g_i.e_l (or e_l.g_i).
  Matrix cover(g * d, m->dim());
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      const Vec img = linalg::vecMat(f, gens[i], m->rowAction(l));
      for (std::size_t c = 0; c < m->dim(); ++c) cover(i * d + l, c) = img[c];
    }
  const Subspace image = Subspace::span(m->fieldPtr(), m->dim(), cover.toRows());
  if (image.dim() < m->dim()) {
    for (std::size_t i = 0; i < m->dim(); ++i) {
      Vec e(m->dim(), 0);
      e[i] = 1;
      if (!image.contains(e))
        fail(ErrorKind::NotGenerating, "basis vector " + std::to_string(i) + " is not in the submodule generated");
    }
  }

  const ModulePtr free = freeModule(m->algebraPtr(), m->side(), g);
  const auto kernel = linalg::nullSpace(f, linalg::transpose(cover));
  std::vector<Vec> chosen;
  Subspace generated(m->fieldPtr(), g * d);
  for (const Vec& v : kernel) {
    if (generated.contains(v)) continue;
    chosen.push_back(v);
    generated = generatedSubmodule(*free, chosen);
  }
  RMatrix rows;
  for (const Vec& v : chosen) rows.push_back(linalg::split(v, d));
  return rows;
}

}  // namespace ppkit
