#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppkit/field.hpp"
#include "ppkit/linalg.hpp"

namespace ppkit {

// A finite-dimensional associative unital algebra over a finite field, given
// by structure constants: e_i * e_j = sum_k table[i][j][k] e_k.
// Elements are coordinate vectors in the basis.
class Algebra {
 public:
  const Field& field() const noexcept { return *field_; }
  const FieldPtr& fieldPtr() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Vec& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::vector<std::vector<Vec>>& table() const noexcept { return table_; }
  const Vec& unit() const noexcept { return unit_; }

  Vec zero() const { return Vec(dim(), 0); }
  Vec basis(std::size_t i) const;
  Vec scalar(Scalar s) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec add(const Vec& a, const Vec& b) const { return linalg::add(*field_, a, b); }
  Vec sub(const Vec& a, const Vec& b) const { return linalg::sub(*field_, a, b); }
  Vec neg(const Vec& a) const { return linalg::sub(*field_, zero(), a); }

  std::optional<std::size_t> labelIndex(std::string_view label) const;

  // Structural equality (same field, labels, constants and unit).
  bool sameAs(const Algebra& other) const;

 private:
  friend std::shared_ptr<const Algebra> makeAlgebra(FieldPtr, std::vector<std::string>,
                                                    std::vector<std::vector<Vec>>, Vec);
  Algebra() = default;

  FieldPtr field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> table_;
  Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Validates dimensions, associativity on every basis triple and the unit
// laws. Throws DimensionMismatch, NonAssociative (message names the witness
// triple) or BadUnit.
AlgebraPtr makeAlgebra(FieldPtr field, std::vector<std::string> labels, std::vector<std::vector<Vec>> table,
                       Vec unit);

// The field itself as a one-dimensional algebra with basis label "1".
AlgebraPtr fieldAlgebra(FieldPtr field);

// k[t]/(t^n) with basis 1, t, ..., t^{n-1}; labels "1", "t", "t2", ...
AlgebraPtr truncatedPolynomialAlgebra(FieldPtr field, std::size_t n);

// Upper triangular 2x2 matrices over the field; basis e11, e12, e22.
AlgebraPtr upperTriangularAlgebra(FieldPtr field);

inline bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && a->sameAs(*b)); }

}  // namespace ppkit
