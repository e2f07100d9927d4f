#include "ppkit/scalars.hpp"

#include "ppkit/errors.hpp"

namespace ppkit {

namespace {

Vec flattenMatrix(const Matrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

enum class Order { Compose, Sequence };

Matrix product(const Field& f, const Matrix& a, const Matrix& b, Order order) {
  return order == Order::Compose ? linalg::mul(f, b, a) : linalg::mul(f, a, b);
}

RingTable makeTable(const FieldPtr& field, std::vector<Matrix> basis, std::size_t dim, Order order) {
  RingTable t;
  t.field = field;
  t.basis = std::move(basis);
  const Field& f = *field;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    std::vector<Vec> row;
    for (std::size_t j = 0; j < t.dim(); ++j) {
      auto c = t.coordinates(product(f, t.basis[i], t.basis[j], order));
      if (!c) fail(ErrorKind::ValidationFailure, "ring basis is not closed under multiplication");
      row.push_back(std::move(*c));
    }
    t.table.push_back(std::move(row));
  }
  if (t.dim() > 0) {
    auto u = t.coordinates(Matrix::identity(dim));
    if (!u) fail(ErrorKind::ValidationFailure, "ring does not contain the identity");
    t.unit = std::move(*u);
  }
  return t;
}

// Matrices G with H G = G H for every H in the list.
std::vector<Matrix> commutant(const Field& f, const std::vector<Matrix>& hs, std::size_t d) {
  Matrix system(hs.size() * d * d, d * d);
  for (std::size_t s = 0; s < hs.size(); ++s) {
    const Matrix& h = hs[s];
    // (H G - G H)(a, c) = sum_b H(a,b) G(b,c) - G(a,b) H(b,c)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t row = s * d * d + a * d + c;
        for (std::size_t b = 0; b < d; ++b) {
          system(row, b * d + c) = f.add(system(row, b * d + c), h(a, b));
          system(row, a * d + b) = f.sub(system(row, a * d + b), h(b, c));
        }
      }
  }
  std::vector<Matrix> out;
  for (const Vec& v : linalg::nullSpace(f, system)) {
    Matrix g(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t c = 0; c < d; ++c) g(a, c) = v[a * d + c];
    out.push_back(std::move(g));
  }
  return out;
}

void requireRight(const ModuleRep& m) {
  if (m.side() != Side::Right) fail(ErrorKind::SideMismatch, "definable scalars are computed for right modules");
}

}  // namespace

std::optional<Vec> RingTable::coordinates(const Matrix& m) const {
  if (basis.empty()) {
    if (linalg::isZero(flattenMatrix(m))) return Vec{};
    return std::nullopt;
  }
  const std::size_t len = basis[0].rows() * basis[0].cols();
  Matrix a(len, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Vec flat = flattenMatrix(basis[k]);
    for (std::size_t x = 0; x < len; ++x) a(x, k) = flat[x];
  }
  const Vec target = flattenMatrix(m);
  if (target.size() != len) return std::nullopt;
  return solveLinear(*field, a, target).particular;
}

Matrix RingTable::element(const Vec& coords) const {
  if (basis.empty()) return Matrix();
  Matrix out(basis[0].rows(), basis[0].cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coords[k] != 0) out = linalg::add(*field, out, linalg::scale(*field, coords[k], basis[k]));
  return out;
}

Vec RingTable::multiply(const Vec& a, const Vec& b) const {
  const Field& f = *field;
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      const Scalar s = f.mul(a[i], b[j]);
      if (s != 0) linalg::axpy(f, s, table[i][j], out);
    }
  return out;
}

bool RingTable::valid() const {
  const std::size_t n = dim();
  std::vector<Vec> e(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (multiply(unit, e[i]) != e[i] || multiply(e[i], unit) != e[i]) return false;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (multiply(multiply(e[i], e[j]), e[k]) != multiply(e[i], multiply(e[j], e[k]))) return false;
  }
  return true;
}

EndBiend endAndBiend(const ModulePtr& m) {
  requireRight(*m);
  const Field& f = m->field();
  const std::size_t d = m->dim();
  std::vector<Matrix> endBasis;
  for (const ModuleMap& h : homSpace(m, m)) endBasis.push_back(h.matrix());
  EndBiend out;
  out.end = makeTable(m->fieldPtr(), endBasis, d, Order::Compose);
  out.biend = makeTable(m->fieldPtr(), commutant(f, endBasis, d), d, Order::Sequence);
  for (std::size_t i = 0; i < m->algebra().dim(); ++i) {
    auto c = out.biend.coordinates(m->rowAction(i));
    if (!c) fail(ErrorKind::ValidationFailure, "the algebra action is not biendomorphic");
    out.biend.fromAlgebra.push_back(std::move(*c));
  }
  // Greedy: add basis vectors of M until End . a spans M.
  Subspace span(m->fieldPtr(), d);
  for (std::size_t j = 0; j < d && span.dim() < d; ++j) {
    Vec e(d, 0);
    e[j] = 1;
    if (span.contains(e)) continue;
    out.generators.push_back(e);
    std::vector<Vec> images = span.basis();
    for (const Matrix& h : endBasis) images.push_back(linalg::vecMat(f, e, h));
    span = Subspace::span(m->fieldPtr(), d, images);
  }
  return out;
}

DefinableScalar synthesizeScalar(const ModulePtr& m, const std::vector<Vec>& generators, const Matrix& g) {
  requireRight(*m);
  const Field& f = m->field();
  const std::size_t d = m->dim();
  if (g.rows() != d || g.cols() != d) fail(ErrorKind::DimensionMismatch, "biendomorphism has the wrong shape");
  for (const ModuleMap& h : homSpace(m, m))
    if (linalg::mul(f, h.matrix(), g) != linalg::mul(f, g, h.matrix()))
      fail(ErrorKind::InvalidArgument, "the map does not commute with the endomorphisms");

  const std::size_t k = generators.size();
  Tuple pair = generators;
  for (const Vec& a : generators) pair.push_back(linalg::vecMat(f, a, g));
  const PpFormula phi = ppTypeGenerator(m, pair);

  const AlgebraPtr& alg = m->algebraPtr();
  const Vec one = alg->unit();
  const Vec minusOne = alg->neg(one);
  FormulaBuilder b(alg, Side::Right, 2);
  const std::size_t xs = b.freshVariables(k);
  const std::size_t ys = b.freshVariables(k);
  std::vector<std::pair<std::size_t, Vec>> uEq{{0, one}}, vEq{{1, one}};
  for (std::size_t i = 0; i < k; ++i) {
    uEq.emplace_back(xs + i, minusOne);
    vEq.emplace_back(ys + i, minusOne);
  }
  b.addEquation(uEq);
  b.addEquation(vEq);
  for (std::size_t i = 0; i < k; ++i) {
    const PpFormula phiI = projectFreeVariables(phi, {i, k + i});
    const std::size_t vars[2] = {xs + i, ys + i};
    b.embed(phiI, vars);
  }

  DefinableScalar out;
  out.rho = b.build().normalized();
  out.action = g;
  out.total = evaluate(projectFreeVariables(out.rho, {0}), m).space.dim() == d;
  const RMatrix zeroU{{alg->zero(), one}};
  out.functional = evaluate(substitute(out.rho, zeroU), m).space.dim() == 0;
  std::vector<Vec> graph;
  for (std::size_t j = 0; j < d; ++j) {
    Vec e(d, 0);
    e[j] = 1;
    graph.push_back(linalg::concat(std::vector<Vec>{e, linalg::vecMat(f, e, g)}));
  }
  out.graphMatches = evaluate(out.rho, m).space == Subspace::span(m->fieldPtr(), 2 * d, graph);
  return out;
}

DefinableScalar synthesizeScalar(const ModulePtr& m, const Matrix& g) {
  return synthesizeScalar(m, endAndBiend(m).generators, g);
}

ScalarRingResult scalarRing(const ModulePtr& m) {
  const EndBiend eb = endAndBiend(m);
  const Field& f = m->field();
  const std::size_t d = m->dim();
  ScalarRingResult out;
  out.allTotalFunctional = true;
  std::vector<Matrix> graphs;
  for (const Matrix& g : eb.biend.basis) {
    DefinableScalar s = synthesizeScalar(m, eb.generators, g);
    if (!s.total || !s.functional) out.allTotalFunctional = false;
    // Read the action back off the solution set of rho.
    const Subspace rel = evaluate(s.rho, m).space;
    Matrix action(d, d);
    bool readable = s.total && s.functional;
    for (std::size_t j = 0; j < d && readable; ++j) {
      Vec e(d, 0);
      e[j] = 1;
      // (e_j, v) in rel: solve over the relation basis.
      Matrix a(d, rel.dim());
      for (std::size_t k = 0; k < rel.dim(); ++k)
        for (std::size_t x = 0; x < d; ++x) a(x, k) = rel.basis()[k][x];
      auto sol = solveLinear(f, a, e).particular;
      if (!sol) {
        readable = false;
        break;
      }
      Vec v(d, 0);
      for (std::size_t k = 0; k < rel.dim(); ++k)
        for (std::size_t x = 0; x < d; ++x) v[x] = f.add(v[x], f.mul((*sol)[k], rel.basis()[k][d + x]));
      for (std::size_t x = 0; x < d; ++x) action(j, x) = v[x];
    }
    if (!readable) out.allTotalFunctional = false;
    graphs.push_back(action);
    out.scalars.push_back(std::move(s));
  }
  if (!out.allTotalFunctional) return out;

  out.ring = makeTable(m->fieldPtr(), graphs, d, Order::Sequence);
  const Algebra& alg = m->algebra();
  bool embeds = out.ring.valid();
  for (std::size_t i = 0; i < alg.dim() && embeds; ++i) {
    auto c = out.ring.coordinates(m->rowAction(i));
    if (!c) embeds = false;
    else out.ring.fromAlgebra.push_back(std::move(*c));
  }
  out.homFromAlgebra = embeds;
  if (embeds) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        Vec image(out.ring.dim(), 0);
        const Vec& prod = alg.product(i, j);
        for (std::size_t k = 0; k < alg.dim(); ++k)
          if (prod[k] != 0) linalg::axpy(f, prod[k], out.ring.fromAlgebra[k], image);
        if (image != out.ring.multiply(out.ring.fromAlgebra[i], out.ring.fromAlgebra[j])) out.homFromAlgebra = false;
      }
    Vec unitImage(out.ring.dim(), 0);
    for (std::size_t k = 0; k < alg.dim(); ++k)
      if (alg.unit()[k] != 0) linalg::axpy(f, alg.unit()[k], out.ring.fromAlgebra[k], unitImage);
    if (unitImage != out.ring.unit) out.homFromAlgebra = false;
  }

  // Same basis matrices as Biend, multiplied the same way, so the identity
  // on coordinates is the isomorphism once the spans and tables agree.
  const Subspace spanRing = Subspace::span(m->fieldPtr(), d * d, [&] {
    std::vector<Vec> v;
    for (const Matrix& x : out.ring.basis) v.push_back(flattenMatrix(x));
    return v;
  }());
  const Subspace spanBiend = Subspace::span(m->fieldPtr(), d * d, [&] {
    std::vector<Vec> v;
    for (const Matrix& x : eb.biend.basis) v.push_back(flattenMatrix(x));
    return v;
  }());
  out.isomorphicToBiend = spanRing == spanBiend && out.ring.dim() == eb.biend.dim() && out.ring.table == eb.biend.table;

  // r maps to zero in R_M exactly when m r = 0 for all m.
  if (embeds) {
    out.kernelIsAnnihilator = true;
    forEachVector(f, alg.dim(), [&](const Vec& r) {
      Vec image(out.ring.dim(), 0);
      for (std::size_t k = 0; k < alg.dim(); ++k)
        if (r[k] != 0) linalg::axpy(f, r[k], out.ring.fromAlgebra[k], image);
      bool annihilates = true;
      for (std::size_t j = 0; j < d; ++j) {
        Vec e(d, 0);
        e[j] = 1;
        if (!linalg::isZero(m->act(e, r))) annihilates = false;
      }
      if (linalg::isZero(image) != annihilates) out.kernelIsAnnihilator = false;
    });
  }
  return out;
}

}  // namespace ppkit
