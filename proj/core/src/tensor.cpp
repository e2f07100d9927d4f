#include "ppkit/tensor.hpp"

#include "ppkit/errors.hpp"

namespace ppkit {

Vec TensorResult::rawTensor(const Vec& m, const Vec& l) const {
  const Field& f = right_->field();
  if (m.size() != right_->dim() || l.size() != left_->dim())
    fail(ErrorKind::DimensionMismatch, "tensor factor has the wrong dimension");
  Vec out(m.size() * l.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) out[i * l.size() + j] = f.mul(m[i], l[j]);
  return out;
}

Vec TensorResult::classOf(const Vec& raw) const {
  const Vec reduced = relations_.reduce(raw);
  Vec out;
  out.reserve(free_.size());
  for (std::size_t c : free_) out.push_back(reduced[c]);
  return out;
}

Vec TensorResult::tensor(const Tuple& a, const Tuple& l) const {
  if (a.size() != l.size()) fail(ErrorKind::LengthMismatch, "tuples of different lengths");
  const Field& f = right_->field();
  Vec raw(relations_.ambient(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) raw = linalg::add(f, raw, rawTensor(a[i], l[i]));
  return classOf(raw);
}

TensorResult tensorProduct(const ModulePtr& m, const ModulePtr& l) {
  if (!sameAlgebra(m->algebraPtr(), l->algebraPtr())) fail(ErrorKind::AlgebraMismatch, "tensor factors over different algebras");
  if (m->side() != Side::Right || l->side() != Side::Left)
    fail(ErrorKind::SideMismatch, "tensor product needs a right module and a left module");
  const Field& f = m->field();
  const std::size_t dm = m->dim();
  const std::size_t dl = l->dim();
  TensorResult out;
  out.right_ = m;
  out.left_ = l;
  out.relations_ = Subspace(m->fieldPtr(), dm * dl);
  std::vector<Vec> rels;
  for (std::size_t k = 0; k < m->algebra().dim(); ++k) {
    const Matrix& pm = m->rowAction(k);
    const Matrix& pl = l->rowAction(k);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dl; ++j) {
        // (m_i e_k) (x) l_j - m_i (x) (e_k l_j)
        Vec r(dm * dl, 0);
        for (std::size_t a = 0; a < dm; ++a) r[a * dl + j] = f.add(r[a * dl + j], pm(i, a));
        for (std::size_t b = 0; b < dl; ++b) r[i * dl + b] = f.sub(r[i * dl + b], pl(j, b));
        if (!linalg::isZero(r)) rels.push_back(std::move(r));
      }
  }
  out.relations_ = Subspace::span(m->fieldPtr(), dm * dl, rels);
  out.free_ = out.relations_.freeColumns();
  return out;
}

HerzogResult herzogDetail(const ModulePtr& m, const Tuple& a, const ModulePtr& l, const Tuple& lt) {
  if (a.size() != lt.size()) fail(ErrorKind::LengthMismatch, "tuples of different lengths");
  if (m->side() != Side::Right || l->side() != Side::Left)
    fail(ErrorKind::SideMismatch, "the criterion needs a right module and a left module");
  checkTuple(*l, lt);
  HerzogResult out;
  out.generator = ppTypeGenerator(m, a);
  out.dualGenerator = dual(out.generator);
  out.zero = satisfies(out.dualGenerator, l, lt);
  return out;
}

bool herzogZeroTest(const ModulePtr& m, const Tuple& a, const ModulePtr& l, const Tuple& lt) {
  return herzogDetail(m, a, l, lt).zero;
}

MLCheckResult relativeMLCheck(const ModulePtr& m, const std::vector<ModulePtr>& family) {
  MLCheckResult out;
  if (family.empty()) return out;
  const DirectSum p = directSum(family, m->algebraPtr(), Side::Left);
  const TensorResult whole = tensorProduct(m, p.module);
  std::vector<TensorResult> parts;
  std::size_t target = 0;
  for (const ModulePtr& li : family) {
    parts.push_back(tensorProduct(m, li));
    target += parts.back().dim();
  }
  // Row (i, c): image of m_i (x) e_c, with e_c the c-th basis vector of the sum.
  const std::size_t dp = p.module->dim();
  Matrix canonical(m->dim() * dp, target);
  for (std::size_t i = 0; i < m->dim(); ++i) {
    Vec mi(m->dim(), 0);
    mi[i] = 1;
    for (std::size_t c = 0; c < dp; ++c) {
      Vec ec(dp, 0);
      ec[c] = 1;
      std::size_t offset = 0;
      for (std::size_t k = 0; k < family.size(); ++k) {
        const Vec cls = parts[k].tensor(mi, p.projections[k].apply(ec));
        for (std::size_t x = 0; x < cls.size(); ++x) canonical(i * dp + c, offset + x) = cls[x];
        offset += parts[k].dim();
      }
    }
  }
  const Field& f = m->field();
  const auto kernel = linalg::nullSpace(f, linalg::transpose(canonical));
  for (const Vec& v : kernel)
    if (!whole.relations().contains(v)) {
      out.injective = false;
      out.kernelWitness = v;
      break;
    }
  return out;
}

bool dualSatisfies(const ModulePtr& m, const Vec& f, const PpFormula& phi) {
  if (phi.arity() != 1) fail(ErrorKind::ArityMismatch, "the dual-satisfaction test takes a one-variable formula");
  if (phi.side() != opposite(m->side()))
    fail(ErrorKind::SideMismatch, "the formula must be for the side of the dual module");
  if (f.size() != m->dim()) fail(ErrorKind::DimensionMismatch, "functional has the wrong length");
  const Field& field = m->field();
  bool viaKernel = true;
  const SubgroupRep dphi = evaluate(dual(phi), m);
  for (const Vec& b : dphi.space.basis()) {
    Scalar pairing = 0;
    for (std::size_t i = 0; i < b.size(); ++i) pairing = field.add(pairing, field.mul(f[i], b[i]));
    if (pairing != 0) viaKernel = false;
  }
  const bool direct = satisfies(phi, dualModule(m), {f});
  if (direct != viaKernel)
    fail(ErrorKind::ValidationFailure, "dual satisfaction disagrees with evaluation on the dual module");
  return viaKernel;
}

}  // namespace ppkit
