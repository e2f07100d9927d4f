#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppkit/algebra.hpp"
#include "ppkit/module.hpp"

namespace ppkit {

// A pp formula  E y_1..y_t ( sum_i x_i a_ij + sum_k y_k b_kj = 0, j = 1..m )
// with coefficients in the algebra. Each equation stores one coefficient per
// variable, free variables x_1..x_n first, then bound y_1..y_t. For left
// modules coefficients multiply from the left (a_ij x_i).
class PpFormula {
 public:
  PpFormula() = default;
  // Throws DimensionMismatch if an equation has the wrong number of entries
  // or an entry is not an algebra element.
  PpFormula(AlgebraPtr algebra, Side side, std::size_t arity, std::size_t bound,
            std::vector<std::vector<Vec>> equations);

  // x = x (no equations) and x = 0 (one equation per variable).
  static PpFormula top(AlgebraPtr algebra, Side side, std::size_t arity);
  static PpFormula zero(AlgebraPtr algebra, Side side, std::size_t arity);

  const AlgebraPtr& algebraPtr() const noexcept { return algebra_; }
  const Algebra& algebra() const noexcept { return *algebra_; }
  Side side() const noexcept { return side_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t bound() const noexcept { return bound_; }
  std::size_t variables() const noexcept { return arity_ + bound_; }
  std::size_t equationCount() const noexcept { return equations_.size(); }
  const std::vector<std::vector<Vec>>& equations() const noexcept { return equations_; }
  const Vec& coefficient(std::size_t equation, std::size_t variable) const { return equations_[equation][variable]; }

  // Zero equations and unused bound variables dropped, equations sorted and
  // deduplicated. Same solution set in every module.
  PpFormula normalized() const;

  // Syntactic equality; semantic equality is equivalentAbsolute().
  bool operator==(const PpFormula& other) const;

 private:
  AlgebraPtr algebra_;
  Side side_ = Side::Right;
  std::size_t arity_ = 0;
  std::size_t bound_ = 0;
  std::vector<std::vector<Vec>> equations_;
};

// Assembles a linear system variable by variable. Variables 0..arity-1 are
// the free ones; everything created later is existentially quantified.
class FormulaBuilder {
 public:
  FormulaBuilder(AlgebraPtr algebra, Side side, std::size_t arity);

  std::size_t freshVariable();
  std::size_t freshVariables(std::size_t count);  // returns the first index
  std::size_t variableCount() const noexcept { return count_; }

  void addEquation(const std::vector<std::pair<std::size_t, Vec>>& terms);
  // Adds the equations of phi, its free variable i renamed to freeVars[i]
  // and its bound variables replaced by fresh ones.
  void embed(const PpFormula& phi, std::span<const std::size_t> freeVars);

  PpFormula build() const;

 private:
  AlgebraPtr algebra_;
  Side side_;
  std::size_t arity_;
  std::size_t count_;
  std::vector<std::vector<std::pair<std::size_t, Vec>>> equations_;
};

// Text syntax:  E y1 y2 . x1*t + y1 = 0 & y2*t = 0
// Free variables are x1..xn; the names after E are bound. Coefficients are
// basis labels, field codes, or parenthesised sums such as (1 + 2*t); they
// are written to the right of the variable for right modules and to the
// left for left modules. `true` denotes the empty system.
std::string formatFormula(const PpFormula& phi);
std::string formatElement(const Algebra& algebra, const Vec& r);
// Throws ParseError with the column of the offending token.
PpFormula parseFormula(const AlgebraPtr& algebra, Side side, std::size_t arity, std::string_view text);
Vec parseAlgebraElement(const Algebra& algebra, std::string_view text);

}  // namespace ppkit
