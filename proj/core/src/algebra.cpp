#include "ppkit/algebra.hpp"

#include <set>
#include <string>

#include "ppkit/errors.hpp"

namespace ppkit {

Vec Algebra::basis(std::size_t i) const {
  Vec v(dim(), 0);
  v[i] = 1;
  return v;
}

Vec Algebra::scalar(Scalar s) const { return linalg::scale(*field_, s, unit_); }

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  const Field& f = *field_;
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      linalg::axpy(f, f.mul(a[i], b[j]), table_[i][j], out);
    }
  }
  return out;
}

std::optional<std::size_t> Algebra::labelIndex(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool Algebra::sameAs(const Algebra& other) const {
  return *field_ == *other.field_ && labels_ == other.labels_ && table_ == other.table_ && unit_ == other.unit_;
}

AlgebraPtr makeAlgebra(FieldPtr field, std::vector<std::string> labels, std::vector<std::vector<Vec>> table,
                       Vec unit) {
  if (!field) fail(ErrorKind::InvalidArgument, "algebra needs a field");
  const std::size_t m = labels.size();
  if (m == 0) fail(ErrorKind::DimensionMismatch, "algebra needs at least one basis element");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != m) fail(ErrorKind::ValidationFailure, "basis labels must be distinct");
  if (table.size() != m) fail(ErrorKind::DimensionMismatch, "structure table must have one row per basis element");
  for (const auto& row : table) {
    if (row.size() != m) fail(ErrorKind::DimensionMismatch, "structure table row has wrong length");
    for (const Vec& v : row) {
      if (v.size() != m) fail(ErrorKind::DimensionMismatch, "structure constant vector has wrong length");
      for (Scalar s : v)
        if (s >= field->order()) fail(ErrorKind::ValidationFailure, "structure constant outside the field");
    }
  }
  if (unit.size() != m) fail(ErrorKind::DimensionMismatch, "unit vector has wrong length");

  std::shared_ptr<Algebra> alg(new Algebra());
  alg->field_ = std::move(field);
  alg->labels_ = std::move(labels);
  alg->table_ = std::move(table);
  alg->unit_ = std::move(unit);

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vec lhs = alg->mul(alg->table_[i][j], alg->basis(k));
        const Vec rhs = alg->mul(alg->basis(i), alg->table_[j][k]);
        if (lhs != rhs)
          fail(ErrorKind::NonAssociative, "(" + alg->labels_[i] + "*" + alg->labels_[j] + ")*" + alg->labels_[k] +
                                              " != " + alg->labels_[i] + "*(" + alg->labels_[j] + "*" +
                                              alg->labels_[k] + ")");
      }
  for (std::size_t i = 0; i < m; ++i) {
    const Vec e = alg->basis(i);
    if (alg->mul(alg->unit_, e) != e || alg->mul(e, alg->unit_) != e)
      fail(ErrorKind::BadUnit, "unit law fails on basis element " + alg->labels_[i]);
  }
  return alg;
}

AlgebraPtr fieldAlgebra(FieldPtr field) {
  return makeAlgebra(std::move(field), {"1"}, {{Vec{1}}}, Vec{1});
}

AlgebraPtr truncatedPolynomialAlgebra(FieldPtr field, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "t" : "t" + std::to_string(i));
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) table[i][j][i + j] = 1;
  Vec unit(n, 0);
  unit[0] = 1;
  return makeAlgebra(std::move(field), labels, table, unit);
}

AlgebraPtr upperTriangularAlgebra(FieldPtr field) {
  // e11 = 0, e12 = 1, e22 = 2
  std::vector<std::vector<Vec>> table(3, std::vector<Vec>(3, Vec(3, 0)));
  table[0][0][0] = 1;
  table[0][1][1] = 1;
  table[1][2][1] = 1;
  table[2][2][2] = 1;
  return makeAlgebra(std::move(field), {"e11", "e12", "e22"}, table, Vec{1, 0, 1});
}

}  // namespace ppkit
