#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ppkit/algebra.hpp"
#include "ppkit/linalg.hpp"

namespace ppkit {

enum class Side { Right, Left };

constexpr Side opposite(Side s) noexcept { return s == Side::Right ? Side::Left : Side::Right; }
const char* to_string(Side s) noexcept;

// A finite module over an Algebra, stored as one action matrix per algebra
// basis element. Native convention: right modules act on row vectors
// (m.r = m * A), left modules on column vectors (r.m = A * m). Internally
// everything is also kept in "row form" (v -> v * P), where P = A for right
// modules and P = A^T for left modules, so that the numerical code is
// side-agnostic.
class ModuleRep {
 public:
  const AlgebraPtr& algebraPtr() const noexcept { return algebra_; }
  const Algebra& algebra() const noexcept { return *algebra_; }
  const Field& field() const noexcept { return algebra_->field(); }
  const FieldPtr& fieldPtr() const noexcept { return algebra_->fieldPtr(); }
  Side side() const noexcept { return side_; }
  std::size_t dim() const noexcept { return dim_; }

  const Matrix& action(std::size_t basisIndex) const { return native_[basisIndex]; }
  const std::vector<Matrix>& actions() const noexcept { return native_; }
  const Matrix& rowAction(std::size_t basisIndex) const { return row_[basisIndex]; }
  Matrix rowAction(const Vec& r) const;

  // m.r for right modules, r.m for left modules.
  Vec act(const Vec& m, const Vec& r) const;
  Vec zero() const { return Vec(dim_, 0); }

  bool sameStructure(const ModuleRep& other) const;

 private:
  friend std::shared_ptr<const ModuleRep> makeModule(AlgebraPtr, Side, std::size_t, std::vector<Matrix>);
  ModuleRep() = default;

  AlgebraPtr algebra_;
  Side side_ = Side::Right;
  std::size_t dim_ = 0;
  std::vector<Matrix> native_;
  std::vector<Matrix> row_;
};

using ModulePtr = std::shared_ptr<const ModuleRep>;

// An ordered tuple of elements of one module.
using Tuple = std::vector<Vec>;

// Checks matrix shapes and the representation law on all basis pairs.
// Throws DimensionMismatch or NotARepresentation (message names the pair).
ModulePtr makeModule(AlgebraPtr algebra, Side side, std::size_t dim, std::vector<Matrix> actions);

// R-linear map. The matrix is in row form: f(v) = v * matrix, shape
// dim(source) x dim(target), for either side.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(ModulePtr source, ModulePtr target, Matrix rowMatrix);

  const ModulePtr& source() const noexcept { return source_; }
  const ModulePtr& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  // Matrix in the sides' native convention (transpose for left modules).
  Matrix nativeMatrix() const;

  Vec apply(const Vec& v) const;
  Tuple apply(const Tuple& t) const;

  bool isInjective() const;
  bool isSurjective() const;
  bool isIsomorphism() const { return isInjective() && isSurjective(); }
  bool commutesWithActions() const;

 private:
  ModulePtr source_;
  ModulePtr target_;
  Matrix matrix_;
};

// Validating constructor; throws NotAMorphism if the matrix does not
// intertwine the actions.
ModuleMap makeMap(ModulePtr source, ModulePtr target, Matrix rowMatrix);
ModuleMap identityMap(const ModulePtr& m);
ModuleMap zeroMap(const ModulePtr& source, const ModulePtr& target);
// second o first
ModuleMap compose(const ModuleMap& second, const ModuleMap& first);
ModuleMap addMaps(const ModuleMap& a, const ModuleMap& b);

ModulePtr regularModule(const AlgebraPtr& algebra, Side side);
ModulePtr zeroModule(const AlgebraPtr& algebra, Side side);

// Hom_k(M, k) with the opposite side; the native action matrices are
// unchanged, so the row-form matrices are transposed.
ModulePtr dualModule(const ModulePtr& m);

struct DirectSum {
  ModulePtr module;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};
DirectSum directSum(const std::vector<ModulePtr>& parts, const AlgebraPtr& algebra = nullptr,
                    Side side = Side::Right);
ModulePtr power(const ModulePtr& m, std::size_t k);

struct Quotient {
  ModulePtr module;
  ModuleMap projection;
};
// Throws NotASubmodule when the subspace is not closed under the action.
Quotient quotientModule(const ModulePtr& m, const Subspace& sub);

struct Submodule {
  ModulePtr module;
  ModuleMap inclusion;
};
Submodule submodule(const ModulePtr& m, const Subspace& sub);

struct SumQuotient {
  ModulePtr module;
  std::vector<ModuleMap> injections;  // parts -> module
  std::optional<ModuleMap> projection;  // direct sum -> module, when relations given
};
// Direct sum of the parts, optionally divided by a submodule of it.
SumQuotient sumQuotient(const std::vector<ModulePtr>& parts, const std::optional<Subspace>& relations);

bool isSubmodule(const ModuleRep& m, const Subspace& sub);
// Smallest submodule containing the given vectors.
Subspace generatedSubmodule(const ModuleRep& m, const std::vector<Vec>& vectors);

// Basis of Hom_R(M, N). Throws SideMismatch / AlgebraMismatch.
std::vector<ModuleMap> homSpace(const ModulePtr& m, const ModulePtr& n);
// Some morphism M -> N sending from[i] to to[i], if one exists.
std::optional<ModuleMap> homSolve(const ModulePtr& m, const ModulePtr& n, const Tuple& from, const Tuple& to);
std::optional<ModuleMap> findIsomorphism(const ModulePtr& m, const ModulePtr& n);

// Matrix over R, stored row by row; each entry is an algebra element.
using RMatrix = std::vector<std::vector<Vec>>;

// Rows generate (as an R-module) the kernel of the free cover R^g -> M,
// g_i -> gens[i]: each row (r_1..r_g) is a relation sum g_i r_i = 0 (right)
// or sum r_i g_i = 0 (left). Throws NotGenerating if the tuple does not
// generate M.
RMatrix presentation(const ModulePtr& m, const Tuple& gens);

// The tuple followed by the standard basis vectors needed, in order, to
// generate M.
Tuple extendToGenerators(const ModuleRep& m, const Tuple& tuple);

// Free module R^k of the given side.
ModulePtr freeModule(const AlgebraPtr& algebra, Side side, std::size_t k);

}  // namespace ppkit
