#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppkit/construct.hpp"
#include "ppkit/context.hpp"
#include "ppkit/module.hpp"
#include "ppkit/pp.hpp"

namespace ppkit::cli {

struct AlgebraEntry {
  std::string name;
  AlgebraPtr algebra;
};

struct ModuleEntry {
  std::string name;
  std::string algebra;
  ModulePtr module;
};

struct FormulaEntry {
  std::string name;
  std::string algebra;
  PpFormula formula;
};

struct ContextEntry {
  std::string name;
  std::string algebra;
  std::vector<std::string> generators;
  std::vector<std::pair<std::string, std::string>> pairs;  // (upper, lower) formula names
  DefinableContext context;
};

struct BudgetEntry {
  std::string name;
  Budget budget;
};

struct MapEntry {
  std::string name;
  std::string source;
  std::string target;
  ModuleMap map;
};

// Named objects from one workspace document, in definition order.
class Workspace {
 public:
  std::vector<AlgebraEntry> algebras;
  std::vector<ModuleEntry> modules;
  std::vector<FormulaEntry> formulas;
  std::vector<ContextEntry> contexts;
  std::vector<BudgetEntry> budgets;
  std::vector<MapEntry> maps;

  // Lookups throw UnknownReference naming the missing object.
  const AlgebraEntry& algebra(std::string_view name) const;
  const ModuleEntry& module(std::string_view name) const;
  const FormulaEntry& formula(std::string_view name) const;
  const ContextEntry& context(std::string_view name) const;
  const BudgetEntry& budget(std::string_view name) const;
  const MapEntry& map(std::string_view name) const;
  // Name of the algebra entry holding this algebra.
  const std::string& algebraName(const AlgebraPtr& algebra) const;

  bool contains(std::string_view name) const;
  std::size_t size() const;
};

// Throws ParseError (with line, and column inside formula bodies),
// UnknownReference or ValidationFailure. When several sections fail, the
// message lists every located error, one per line.
Workspace parseWorkspace(std::string_view text);
Workspace loadWorkspace(const std::string& path);

// Canonical text: explicit structure constants and action matrices.
std::string serializeWorkspace(const Workspace& ws);
// Same names, structures, formulas and references.
bool equivalentWorkspaces(const Workspace& a, const Workspace& b);

// Element syntax: a bracketed coordinate vector "[1,0]", a bare field
// element for one-dimensional modules, or an algebra expression such as
// "1 + t" for regular modules. Tuples separate elements with ';'.
Vec parseElement(const ModuleRep& m, std::string_view text);
Tuple parseTuple(const ModuleRep& m, std::string_view text);
std::string formatVector(const Vec& v);
std::string formatTuple(const Tuple& t);
// Rows of a matrix, "[[a,b],[c,d]]".
std::string formatMatrix(const Matrix& m);

}  // namespace ppkit::cli
