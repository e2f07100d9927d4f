#include "ppkit/linalg.hpp"

#include <string>

#include "ppkit/errors.hpp"

namespace ppkit {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::fromRows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      fail(ErrorKind::DimensionMismatch,
           "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) + " entries, expected " +
               std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Vec> Matrix::toRows() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

namespace linalg {

bool isZero(std::span<const Scalar> v) noexcept {
  for (Scalar s : v)
    if (s != 0) return false;
  return true;
}

void axpy(const Field& f, Scalar a, std::span<const Scalar> x, Vec& y) {
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(a, x[i]));
}

Vec add(const Field& f, const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.add(x[i], y[i]);
  return out;
}

Vec sub(const Field& f, const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.sub(x[i], y[i]);
  return out;
}

Vec scale(const Field& f, Scalar a, const Vec& x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(a, x[i]);
  return out;
}

Vec concat(std::span<const Vec> parts) {
  Vec out;
  for (const Vec& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Vec> split(const Vec& v, std::size_t block) {
  std::vector<Vec> out;
  if (block == 0) return out;
  for (std::size_t i = 0; i + block <= v.size(); i += block) out.emplace_back(v.begin() + i, v.begin() + i + block);
  return out;
}

Vec vecMat(const Field& f, std::span<const Scalar> v, const Matrix& m) {
  Vec out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) axpy(f, v[r], m.rowView(r), out);
  return out;
}

Vec matVec(const Field& f, const Matrix& m, std::span<const Scalar> v) {
  Vec out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Scalar acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

Matrix mul(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar s = a(i, k);
      if (s == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(s, b(k, j)));
    }
  return out;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
  return out;
}

Matrix scale(const Field& f, Scalar s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.mul(s, a(i, j));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

std::vector<std::size_t> rowReduce(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Scalar inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(inv, m(row, c));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Scalar factor = m(r, col);
      if (factor == 0) continue;
      const Scalar nf = f.neg(factor);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) = f.add(m(r, c), f.mul(nf, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rowReduce(f, m).size(); }

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rowReduce(f, aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::vector<Vec> nullSpace(const Field& f, const Matrix& a) {
  Matrix m = a;
  const auto pivots = rowReduce(f, m);
  std::vector<bool> isPivot(m.cols(), false);
  for (std::size_t p : pivots) isPivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    Vec x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(m(r, free));
    basis.push_back(std::move(x));
  }
  if (basis.empty()) return basis;
  // Re-express in reduced echelon form.
  Matrix k = Matrix::fromRows(basis, m.cols());
  rowReduce(f, k);
  std::vector<Vec> out;
  for (std::size_t r = 0; r < k.rows(); ++r)
    if (!isZero(k.rowView(r))) out.push_back(k.row(r));
  return out;
}

}  // namespace linalg

LinearSolution solveLinear(const Field& f, const Matrix& a, const Vec& b) {
  if (b.size() != a.rows())
    fail(ErrorKind::DimensionMismatch,
         "right-hand side has " + std::to_string(b.size()) + " entries for " + std::to_string(a.rows()) + " equations");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = linalg::rowReduce(f, aug);
  LinearSolution out;
  out.kernel = linalg::nullSpace(f, a);
  if (!pivots.empty() && pivots.back() == n) return out;
  Vec x(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
  out.particular = std::move(x);
  return out;
}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace out(field, ambient);
  if (vectors.empty() || !field) return out;
  Matrix m = Matrix::fromRows(vectors, ambient);
  out.pivots_ = linalg::rowReduce(*field, m);
  for (std::size_t r = 0; r < out.pivots_.size(); ++r) out.basis_.push_back(m.row(r));
  return out;
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  Subspace out(std::move(field), ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec e(ambient, 0);
    e[i] = 1;
    out.basis_.push_back(std::move(e));
    out.pivots_.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Subspace::freeColumns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar s = v[pivots_[i]];
    if (s != 0) linalg::axpy(*field_, field_->neg(s), basis_[i], v);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) fail(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  if (basis_.empty()) return linalg::isZero(v);
  return linalg::isZero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  for (const Vec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = v[pivots_[i]];
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(field_ ? field_ : other.field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (basis_.empty() || other.basis_.empty()) return Subspace(field_ ? field_ : other.field_, ambient_);
  const Field& f = *field_;
  const std::size_t k = basis_.size();
  const std::size_t l = other.basis_.size();
  // Coefficients (a, b) with a U + b W = 0; the intersection is a U.
  Matrix eq(ambient_, k + l);
  for (std::size_t c = 0; c < ambient_; ++c) {
    for (std::size_t i = 0; i < k; ++i) eq(c, i) = basis_[i][c];
    for (std::size_t j = 0; j < l; ++j) eq(c, k + j) = other.basis_[j][c];
  }
  std::vector<Vec> vectors;
  for (const Vec& sol : linalg::nullSpace(f, eq)) {
    Vec v(ambient_, 0);
    for (std::size_t i = 0; i < k; ++i) linalg::axpy(f, sol[i], basis_[i], v);
    vectors.push_back(std::move(v));
  }
  return span(field_, ambient_, vectors);
}

Subspace Subspace::image(const Matrix& m) const {
  std::vector<Vec> vectors;
  for (const Vec& v : basis_) vectors.push_back(linalg::vecMat(*field_, v, m));
  return span(field_, m.cols(), vectors);
}

Subspace Subspace::projectPrefix(std::size_t count) const {
  std::vector<Vec> vectors;
  for (const Vec& v : basis_) vectors.emplace_back(v.begin(), v.begin() + count);
  return span(field_, count, vectors);
}

}  // namespace ppkit
