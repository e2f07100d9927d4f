#include "fixtures.hpp"

#include <algorithm>
#include <functional>

#include "ppkit/errors.hpp"
#include "ppkit/linalg.hpp"

namespace ppkit::testing {

AlgebraPtr k2() {
  static const AlgebraPtr a = fieldAlgebra(Field::make(2));
  return a;
}

AlgebraPtr r2() {
  static const AlgebraPtr a = makeAlgebra(Field::make(2), {"1", "t"},
                                          {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {1, 0});
  return a;
}

AlgebraPtr f3() {
  static const AlgebraPtr a = fieldAlgebra(Field::make(3));
  return a;
}

AlgebraPtr t2() {
  static const AlgebraPtr a = upperTriangularAlgebra(Field::make(2));
  return a;
}

namespace {

Matrix mat(std::size_t n, std::initializer_list<Scalar> entries) {
  Matrix m(n, n);
  std::size_t i = 0;
  for (Scalar e : entries) {
    m(i / n, i % n) = e;
    ++i;
  }
  return m;
}

}  // namespace

ModulePtr rr() {
  // Basis (1, t); right multiplication by t sends 1 -> t, t -> 0.
  static const ModulePtr m = makeModule(r2(), Side::Right, 2, {Matrix::identity(2), mat(2, {0, 1, 0, 0})});
  return m;
}

ModulePtr s() {
  static const ModulePtr m = makeModule(r2(), Side::Right, 1, {Matrix::identity(1), Matrix(1, 1)});
  return m;
}

ModulePtr lr() {
  // Column vectors; t . 1 = t.
  static const ModulePtr m = makeModule(r2(), Side::Left, 2, {Matrix::identity(2), mat(2, {0, 0, 1, 0})});
  return m;
}

ModulePtr ls() {
  static const ModulePtr m = makeModule(r2(), Side::Left, 1, {Matrix::identity(1), Matrix(1, 1)});
  return m;
}

std::vector<ModulePtr> indecomposables(const AlgebraPtr& alg) {
  if (alg->sameAs(*r2())) return {s(), rr()};
  if (alg->dim() == 1) return {regularModule(alg, Side::Right)};
  if (alg->sameAs(*t2())) {
    // Basis e11, e12, e22. P1 = e11 T2 on (e11, e12), P2 = e22 T2, S1 = top of P1.
    static const std::vector<ModulePtr> mods = [&] {
      const ModulePtr p1 =
          makeModule(alg, Side::Right, 2, {mat(2, {1, 0, 0, 0}), mat(2, {0, 1, 0, 0}), mat(2, {0, 0, 0, 1})});
      const ModulePtr p2 = makeModule(alg, Side::Right, 1, {mat(1, {0}), mat(1, {0}), mat(1, {1})});
      const ModulePtr s1 = makeModule(alg, Side::Right, 1, {mat(1, {1}), mat(1, {0}), mat(1, {0})});
      return std::vector<ModulePtr>{s1, p2, p1};
    }();
    return mods;
  }
  return {};
}

std::vector<ModulePtr> moduleGrid(const AlgebraPtr& alg, Side side, std::size_t maxDim) {
  const std::vector<ModulePtr> ind = indecomposables(alg);
  std::vector<ModulePtr> out{zeroModule(alg, Side::Right)};
  // Multisets as non-decreasing index sequences.
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t from, std::size_t dim) {
    for (std::size_t i = from; i < ind.size(); ++i) {
      if (dim + ind[i]->dim() > maxDim) continue;
      chosen.push_back(i);
      std::vector<ModulePtr> parts;
      for (std::size_t c : chosen) parts.push_back(ind[c]);
      out.push_back(parts.size() == 1 ? parts[0] : directSum(parts).module);
      grow(i, dim + ind[i]->dim());
      chosen.pop_back();
    }
  };
  grow(0, 0);
  std::stable_sort(out.begin(), out.end(), [](const ModulePtr& a, const ModulePtr& b) { return a->dim() < b->dim(); });
  if (side == Side::Left)
    for (ModulePtr& m : out) m = dualModule(m);
  return out;
}

std::vector<ModulePtr> allRepresentations(const AlgebraPtr& alg, Side side, std::size_t dim) {
  const Field& f = alg->field();
  const std::vector<Vec> entries = allVectors(f, dim * dim);
  std::vector<ModulePtr> out;
  std::vector<Matrix> actions(alg->dim());
  std::function<void(std::size_t)> pick = [&](std::size_t k) {
    if (k == alg->dim()) {
      try {
        out.push_back(makeModule(alg, side, dim, actions));
      } catch (const Error&) {
      }
      return;
    }
    for (const Vec& e : entries) {
      Matrix m(dim, dim);
      for (std::size_t i = 0; i < dim * dim; ++i) m(i / dim, i % dim) = e[i];
      actions[k] = m;
      pick(k + 1);
    }
  };
  pick(0);
  return out;
}

Vec randomElement(const Algebra& alg, Rng& rng, double zeroBias) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<unsigned> value(0, alg.field().order() - 1);
  Vec v(alg.dim(), 0);
  for (Scalar& c : v)
    if (coin(rng) >= zeroBias) c = static_cast<Scalar>(value(rng));
  return v;
}

PpFormula randomFormula(const AlgebraPtr& alg, Side side, std::size_t arity, Rng& rng, std::size_t maxBound,
                        std::size_t maxEq) {
  const std::size_t bound = std::uniform_int_distribution<std::size_t>(0, maxBound)(rng);
  const std::size_t eqs = std::uniform_int_distribution<std::size_t>(1, maxEq)(rng);
  std::vector<std::vector<Vec>> equations;
  for (std::size_t j = 0; j < eqs; ++j) {
    std::vector<Vec> eq;
    for (std::size_t v = 0; v < arity + bound; ++v) eq.push_back(randomElement(*alg, rng, 0.5));
    equations.push_back(std::move(eq));
  }
  return PpFormula(alg, side, arity, bound, std::move(equations));
}

std::vector<PpFormula> formulaCorpus(const AlgebraPtr& alg, Side side, std::size_t arity, std::size_t randomCount,
                                     unsigned seed) {
  std::vector<PpFormula> out{PpFormula::top(alg, side, arity), PpFormula::zero(alg, side, arity)};
  for (std::size_t b = 0; b < alg->dim(); ++b) {
    for (std::size_t i = 0; i < arity; ++i) {
      // x_i b = 0
      std::vector<Vec> ann(arity, alg->zero());
      ann[i] = alg->basis(b);
      out.emplace_back(alg, side, arity, 0, std::vector<std::vector<Vec>>{ann});
      // b | x_i : x_i + y b = 0
      std::vector<Vec> div(arity + 1, alg->zero());
      div[i] = alg->unit();
      div[arity] = alg->basis(b);
      out.emplace_back(alg, side, arity, 1, std::vector<std::vector<Vec>>{div});
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < randomCount; ++k) out.push_back(randomFormula(alg, side, arity, rng));
  return out;
}

ModuleMap randomHom(const ModulePtr& m, const ModulePtr& n, Rng& rng) {
  const std::vector<ModuleMap> basis = homSpace(m, n);
  const Field& f = m->field();
  std::uniform_int_distribution<unsigned> value(0, f.order() - 1);
  Matrix acc(m->dim(), n->dim());
  for (const ModuleMap& h : basis) acc = linalg::add(f, acc, linalg::scale(f, static_cast<Scalar>(value(rng)), h.matrix()));
  return makeMap(m, n, acc);
}

Vec actOracle(const ModuleRep& m, const Vec& x, const Vec& r) {
  const Field& f = m.field();
  Vec out(m.dim(), 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    const Matrix& a = m.action(k);
    for (std::size_t i = 0; i < m.dim(); ++i) {
      Scalar acc = 0;
      for (std::size_t j = 0; j < m.dim(); ++j)
        acc = f.add(acc, m.side() == Side::Right ? f.mul(x[j], a(j, i)) : f.mul(a(i, j), x[j]));
      out[i] = f.add(out[i], f.mul(r[k], acc));
    }
  }
  return out;
}

std::vector<Vec> allVectors(const Field& f, std::size_t n) {
  std::vector<Vec> out{Vec(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const Vec& v : out)
      for (unsigned c = 0; c < f.order(); ++c) {
        Vec w = v;
        w[i] = static_cast<Scalar>(c);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

// Elements of M indexed in base q; sums and the action of each coefficient
// tabulated once, so the search costs one lookup per equation and variable.
class Enumerator {
 public:
  Enumerator(const PpFormula& phi, const ModuleRep& m) : phi_(phi), m_(m), elems_(allVectors(m.field(), m.dim())) {
    const std::size_t n = elems_.size();
    add_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) add_[a * n + b] = index(linalg::add(m.field(), elems_[a], elems_[b]));
    for (const std::vector<Vec>& eq : phi.equations()) {
      std::vector<std::vector<std::size_t>> perVar;
      for (const Vec& c : eq) {
        std::vector<std::size_t> table(n);
        for (std::size_t a = 0; a < n; ++a) table[a] = index(actOracle(m, elems_[a], c));
        perVar.push_back(std::move(table));
      }
      act_.push_back(std::move(perVar));
    }
  }

  std::size_t index(const Vec& v) const {
    std::size_t i = 0;
    for (std::size_t k = 0; k < v.size(); ++k) i = i * m_.field().order() + v[k];
    return i;
  }

  // Tries every value for the unset variables from k on, calling visit on
  // each solution; stops at the first visit returning true.
  bool search(std::vector<std::size_t>& values, std::size_t k, std::vector<std::size_t>& partial,
              const std::function<bool(const std::vector<std::size_t>&)>& visit) const {
    const std::size_t n = elems_.size();
    if (k == phi_.variables()) {
      for (std::size_t p : partial)
        if (p != 0) return false;
      return visit(values);
    }
    const std::vector<std::size_t> saved = partial;
    const std::size_t lo = values[k] == kFree ? 0 : values[k];
    const std::size_t hi = values[k] == kFree ? n : values[k] + 1;
    const bool freeSlot = values[k] == kFree;
    for (std::size_t a = lo; a < hi; ++a) {
      for (std::size_t j = 0; j < partial.size(); ++j) partial[j] = add_[saved[j] * n + act_[j][k][a]];
      values[k] = a;
      if (search(values, k + 1, partial, visit)) {
        if (freeSlot) values[k] = kFree;
        partial = saved;
        return true;
      }
    }
    if (freeSlot) values[k] = kFree;
    partial = saved;
    return false;
  }

  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  const std::vector<Vec>& elements() const { return elems_; }

 private:
  const PpFormula& phi_;
  const ModuleRep& m_;
  std::vector<Vec> elems_;
  std::vector<std::size_t> add_;
  std::vector<std::vector<std::vector<std::size_t>>> act_;
};

}  // namespace

bool bruteSatisfies(const PpFormula& phi, const ModuleRep& m, const Tuple& tuple) {
  const Enumerator en(phi, m);
  std::vector<std::size_t> values(phi.variables(), Enumerator::kFree);
  for (std::size_t i = 0; i < tuple.size(); ++i) values[i] = en.index(tuple[i]);
  std::vector<std::size_t> partial(phi.equationCount(), 0);
  return en.search(values, 0, partial, [](const std::vector<std::size_t>&) { return true; });
}

std::set<Vec> bruteSolutions(const PpFormula& phi, const ModuleRep& m) {
  const Enumerator en(phi, m);
  std::set<Vec> out;
  // Free variables outermost; once a free assignment is found the bound
  // search for it can stop.
  std::vector<std::size_t> values(phi.variables(), Enumerator::kFree);
  std::function<void(std::size_t)> fixFree = [&](std::size_t k) {
    if (k == phi.arity()) {
      std::vector<std::size_t> partial(phi.equationCount(), 0);
      if (en.search(values, 0, partial, [](const std::vector<std::size_t>&) { return true; })) {
        Vec flat;
        for (std::size_t i = 0; i < phi.arity(); ++i) {
          const Vec& e = en.elements()[values[i]];
          flat.insert(flat.end(), e.begin(), e.end());
        }
        out.insert(flat);
      }
      return;
    }
    for (std::size_t a = 0; a < en.elements().size(); ++a) {
      values[k] = a;
      fixFree(k + 1);
    }
    values[k] = Enumerator::kFree;
  };
  fixFree(0);
  return out;
}

std::set<Vec> elementsOf(const Subspace& sub) {
  const Field& f = *sub.field();
  std::set<Vec> out;
  for (const Vec& c : allVectors(f, sub.dim())) {
    Vec v(sub.ambient(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) linalg::axpy(f, c[i], sub.basis()[i], v);
    out.insert(v);
  }
  return out;
}

std::vector<Matrix> bruteHoms(const ModuleRep& m, const ModuleRep& n) {
  const Field& f = m.field();
  const std::vector<Vec> elemsM = allVectors(f, m.dim());
  std::vector<Matrix> out;
  for (const Vec& e : allVectors(f, m.dim() * n.dim())) {
    Matrix h(m.dim(), n.dim());
    for (std::size_t i = 0; i < e.size(); ++i) h(i / n.dim(), i % n.dim()) = e[i];
    auto apply = [&](const Vec& x) { return linalg::vecMat(f, x, h); };
    bool ok = true;
    for (std::size_t k = 0; k < m.algebra().dim() && ok; ++k) {
      const Vec r = m.algebra().basis(k);
      for (std::size_t i = 0; i < m.dim() && ok; ++i) {
        Vec x(m.dim(), 0);
        x[i] = 1;
        ok = apply(actOracle(m, x, r)) == actOracle(n, apply(x), r);
      }
    }
    if (ok) out.push_back(h);
  }
  return out;
}

std::size_t cardinality(const ModuleRep& m) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    c *= m.field().order();
    if (c > (std::size_t{1} << 20)) return std::size_t{1} << 20;
  }
  return c;
}

}  // namespace ppkit::testing
