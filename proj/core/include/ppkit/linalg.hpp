#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ppkit/field.hpp"

namespace ppkit {

using Vec = std::vector<Scalar>;

// Dense row-major matrix of field codes. Arithmetic needs a Field, so it
// lives in free functions below.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  // Throws DimensionMismatch if a row does not have `cols` entries.
  static Matrix fromRows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Scalar> rowView(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  Vec row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  std::vector<Vec> toRows() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

namespace linalg {

bool isZero(std::span<const Scalar> v) noexcept;
// y += a * x
void axpy(const Field& f, Scalar a, std::span<const Scalar> x, Vec& y);
Vec add(const Field& f, const Vec& x, const Vec& y);
Vec sub(const Field& f, const Vec& x, const Vec& y);
Vec scale(const Field& f, Scalar a, const Vec& x);
Vec concat(std::span<const Vec> parts);
// Splits a vector into consecutive blocks of the given size.
std::vector<Vec> split(const Vec& v, std::size_t block);

// v * M for a row vector v.
Vec vecMat(const Field& f, std::span<const Scalar> v, const Matrix& m);
// M * v for a column vector v.
Vec matVec(const Field& f, const Matrix& m, std::span<const Scalar> v);
Matrix mul(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, Scalar s, const Matrix& a);
Matrix transpose(const Matrix& a);

// Gauss-Jordan in place to reduced row echelon form; returns pivot columns.
// Zero rows end up at the bottom.
std::vector<std::size_t> rowReduce(const Field& f, Matrix& m);
std::size_t rank(const Field& f, Matrix m);
std::optional<Matrix> inverse(const Field& f, const Matrix& m);

// Basis of { x : A x = 0 } in reduced row echelon form.
std::vector<Vec> nullSpace(const Field& f, const Matrix& a);

}  // namespace linalg

struct LinearSolution {
  std::optional<Vec> particular;
  // Basis of the homogeneous solution space, reduced row echelon form.
  std::vector<Vec> kernel;
};

// Solves A x = b. Throws DimensionMismatch when b has the wrong length.
LinearSolution solveLinear(const Field& f, const Matrix& a, const Vec& b);

// A subspace of F^n held by its reduced row echelon basis. The basis is
// canonical, so two subspaces are equal iff their representations are.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldPtr field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  static Subspace span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(FieldPtr field, std::size_t ambient);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  // Columns that are not pivots; quotient coordinates live there.
  std::vector<std::size_t> freeColumns() const;

  // Canonical representative of v modulo the subspace.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v (assumed to lie in the subspace) w.r.t. basis().
  Vec coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Image under v -> v M.
  Subspace image(const Matrix& m) const;
  // Restriction to the first `count` coordinates.
  Subspace projectPrefix(std::size_t count) const;

  bool operator==(const Subspace& other) const noexcept {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  FieldPtr field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

// Calls fn(v) for every vector of F^n in lexicographic code order.
template <class Fn>
void forEachVector(const Field& f, std::size_t n, Fn&& fn) {
  Vec v(n, 0);
  const unsigned q = f.order();
  while (true) {
    fn(static_cast<const Vec&>(v));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++v[i] < q) break;
      v[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace ppkit
