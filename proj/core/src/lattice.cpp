#include "ppkit/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ppkit/errors.hpp"

namespace ppkit {

namespace {

// q^exponent, or cap + 1 once it passes the cap.
std::size_t boundedPower(std::size_t q, std::size_t exponent, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    out *= q;
    if (out > cap) return cap + 1;
  }
  return out;
}

}  // namespace

DefinabilityResult isPpDefinable(const ModulePtr& m, const SubgroupRep& s, std::size_t cap) {
  const std::size_t n = s.arity;
  const std::size_t d = m->dim();
  if (s.space.ambient() != n * d) fail(ErrorKind::DimensionMismatch, "subgroup does not live in M^n");
  const std::size_t k = s.space.dim();
  if (boundedPower(m->field().order(), d * k, cap) > cap)
    fail(ErrorKind::CapExceeded, "pointed power M^" + std::to_string(k) + " exceeds the cap");
  const ModulePtr mk = power(m, k);
  Tuple c(n, Vec(d * k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    const Vec& sj = s.space.basis()[j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t x = 0; x < d; ++x) c[i][j * d + x] = sj[i * d + x];
  }
  DefinabilityResult out;
  out.witness = ppTypeGenerator(mk, c);
  out.closure = evaluate(out.witness, m);
  out.definable = out.closure.space == s.space;
  return out;
}

std::optional<std::size_t> PpLattice::indexOf(const Subspace& s) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].space == s) return i;
  return std::nullopt;
}

namespace {

Subspace invariantClosure(const Subspace& start, const std::vector<Matrix>& maps) {
  Subspace current = start;
  while (true) {
    std::vector<Vec> vectors = current.basis();
    for (const Vec& v : current.basis())
      for (const Matrix& h : maps) vectors.push_back(linalg::vecMat(*current.field(), v, h));
    Subspace next = Subspace::span(current.field(), current.ambient(), vectors);
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

// Block-diagonal copy of h, acting on each of the n entries of a tuple.
Matrix diagonal(const Matrix& h, std::size_t n) {
  Matrix out(h.rows() * n, h.cols() * n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t r = 0; r < h.rows(); ++r)
      for (std::size_t c = 0; c < h.cols(); ++c) out(b * h.rows() + r, b * h.cols() + c) = h(r, c);
  return out;
}

}  // namespace

PpLattice ppLattice(const ModulePtr& m, std::size_t arity, std::size_t cap) {
  const std::size_t ambient = m->dim() * arity;
  const FieldPtr& field = m->fieldPtr();
  if (boundedPower(m->field().order(), ambient, cap) > cap)
    fail(ErrorKind::CapExceeded, "M^" + std::to_string(arity) + " has more elements than the cap");
  std::vector<Matrix> endo;
  for (const ModuleMap& h : homSpace(m, m)) endo.push_back(diagonal(h.matrix(), arity));

  // Breadth-first search: every invariant subspace is reached by adding one
  // vector at a time to a smaller one and closing.
  std::set<std::vector<Vec>> seen;
  std::vector<Subspace> found;
  std::vector<Subspace> queue{Subspace(field, ambient)};
  seen.insert({});
  while (!queue.empty()) {
    Subspace w = std::move(queue.back());
    queue.pop_back();
    found.push_back(w);
    forEachVector(m->field(), ambient, [&](const Vec& v) {
      if (w.contains(v)) return;
      Subspace next = invariantClosure(w.sum(Subspace::span(field, ambient, {v})), endo);
      if (seen.insert(next.basis()).second) {
        if (seen.size() > cap) fail(ErrorKind::CapExceeded, "too many invariant subspaces");
        queue.push_back(std::move(next));
      }
    });
  }
  std::sort(found.begin(), found.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis() < b.basis();
  });

  PpLattice lat;
  lat.module = m;
  lat.arity = arity;
  for (const Subspace& s : found) {
    SubgroupRep g{m, arity, s};
    DefinabilityResult r = isPpDefinable(m, g, cap);
    if (!r.definable) continue;
    lat.elements.push_back(std::move(g));
    lat.witnesses.push_back(std::move(r.witness));
  }
  const std::size_t size = lat.elements.size();
  std::map<std::vector<Vec>, std::size_t> index;
  for (std::size_t i = 0; i < size; ++i) index.emplace(lat.elements[i].space.basis(), i);
  auto lookup = [&](const Subspace& s) {
    auto it = index.find(s.basis());
    if (it == index.end()) fail(ErrorKind::ValidationFailure, "pp-definable subgroups not closed under meet/join");
    return it->second;
  };
  lat.leq.assign(size, std::vector<bool>(size, false));
  lat.meet.assign(size, std::vector<std::size_t>(size, 0));
  lat.join.assign(size, std::vector<std::size_t>(size, 0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const Subspace& a = lat.elements[i].space;
      const Subspace& b = lat.elements[j].space;
      lat.leq[i][j] = b.contains(a);
      lat.meet[i][j] = lookup(a.intersect(b));
      lat.join[i][j] = lookup(a.sum(b));
    }
  lat.bottom = 0;
  lat.top = size - 1;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      if (i == j || !lat.leq[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < size && covering; ++k)
        if (k != i && k != j && lat.leq[i][k] && lat.leq[k][j]) covering = false;
      if (covering) lat.hasse.emplace_back(i, j);
    }
  return lat;
}

bool PpFilter::contains(std::size_t element) const {
  return std::binary_search(members.begin(), members.end(), element);
}

bool isFilter(const PpLattice& lat, const PpFilter& filter) {
  if (filter.members.empty()) return false;
  for (std::size_t a : filter.members) {
    for (std::size_t b = 0; b < lat.size(); ++b)
      if (lat.leq[a][b] && !filter.contains(b)) return false;
    for (std::size_t b : filter.members)
      if (!filter.contains(lat.meet[a][b])) return false;
  }
  return true;
}

PpFilter principalFilter(const PpLattice& lat, std::size_t element) {
  PpFilter f;
  for (std::size_t b = 0; b < lat.size(); ++b)
    if (lat.leq[element][b]) f.members.push_back(b);
  return f;
}

std::vector<PpFilter> allFilters(const PpLattice& lat) {
  std::vector<PpFilter> out;
  for (std::size_t a = 0; a < lat.size(); ++a) out.push_back(principalFilter(lat, a));
  return out;
}

bool zieglerIrreducible(const PpLattice& lat, const PpFilter& p) {
  for (std::size_t psi1 = 0; psi1 < lat.size(); ++psi1) {
    if (p.contains(psi1)) continue;
    for (std::size_t psi2 = 0; psi2 < lat.size(); ++psi2) {
      if (p.contains(psi2)) continue;
      bool found = false;
      for (std::size_t phi : p.members) {
        const std::size_t value = lat.join[lat.meet[psi1][phi]][lat.meet[psi2][phi]];
        if (!p.contains(value)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<NegIsolatedFilter> filterAnalysis(const PpLattice& lat, std::size_t avoid) {
  if (avoid >= lat.size()) fail(ErrorKind::InvalidArgument, "element " + std::to_string(avoid) + " is not in the lattice");
  std::vector<NegIsolatedFilter> out;
  // Up-sets of a avoid `avoid` iff a is not below it; the maximal such
  // filters come from the minimal such a.
  for (std::size_t a = 0; a < lat.size(); ++a) {
    if (lat.leq[a][avoid]) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < lat.size() && minimal; ++b)
      if (b != a && lat.leq[b][a] && !lat.leq[b][avoid]) minimal = false;
    if (!minimal) continue;
    NegIsolatedFilter f;
    f.filter = principalFilter(lat, a);
    f.generator = a;
    f.zieglerIrreducible = zieglerIrreducible(lat, f.filter);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace ppkit
