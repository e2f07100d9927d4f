#include "ppkit_cli/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "ppkit/errors.hpp"

namespace ppkit::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

template <class Entry>
const Entry& lookup(const std::vector<Entry>& entries, std::string_view name, const char* kind) {
  for (const Entry& e : entries)
    if (e.name == name) return e;
  fail(ErrorKind::UnknownReference, std::string(kind) + " \"" + std::string(name) + "\"");
}

// Bracketed lists of atoms.
struct Value {
  bool isList = false;
  std::string atom;
  std::vector<Value> items;
};

class ValueParser {
 public:
  explicit ValueParser(std::string_view text) : text_(text) {}

  Value parse() {
    Value v = parseValue();
    skipSpace();
    if (pos_ != text_.size()) fail(ErrorKind::ParseError, "unexpected text after value: \"" + std::string(text_.substr(pos_)) + "\"");
    return v;
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Value parseValue() {
    skipSpace();
    Value v;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      v.isList = true;
      skipSpace();
      if (pos_ < text_.size() && text_[pos_] == ']') {
        ++pos_;
        return v;
      }
      while (true) {
        v.items.push_back(parseValue());
        skipSpace();
        if (pos_ >= text_.size()) fail(ErrorKind::ParseError, "unterminated list");
        if (text_[pos_] == ']') {
          ++pos_;
          return v;
        }
        if (text_[pos_] != ',') fail(ErrorKind::ParseError, std::string("expected ',' or ']' but found '") + text_[pos_] + "'");
        ++pos_;
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '[') ++pos_;
    v.atom = trim(text_.substr(start, pos_ - start));
    if (v.atom.empty()) fail(ErrorKind::ParseError, "empty value");
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Value parseValue(std::string_view text) { return ValueParser(text).parse(); }

long long toInt(const std::string& atom) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(atom, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "expected an integer, found \"" + atom + "\"");
  }
  if (used != atom.size()) fail(ErrorKind::ParseError, "expected an integer, found \"" + atom + "\"");
  return v;
}

std::size_t toCount(const std::string& atom) {
  const long long v = toInt(atom);
  if (v < 0) fail(ErrorKind::ParseError, "expected a non-negative integer, found \"" + atom + "\"");
  return static_cast<std::size_t>(v);
}

const Value& requireList(const Value& v, const char* what) {
  if (!v.isList) fail(ErrorKind::ParseError, std::string("expected a bracketed list for ") + what);
  return v;
}

const std::string& requireAtom(const Value& v, const char* what) {
  if (v.isList) fail(ErrorKind::ParseError, std::string("expected a single value for ") + what);
  return v.atom;
}

Vec toVector(const Field& f, const Value& v, std::size_t len, const char* what) {
  requireList(v, what);
  if (v.items.size() != len)
    fail(ErrorKind::ParseError, std::string(what) + " needs " + std::to_string(len) + " entries, found " +
                                    std::to_string(v.items.size()));
  Vec out;
  for (const Value& x : v.items) out.push_back(f.fromInt(toInt(requireAtom(x, what))));
  return out;
}

Matrix toMatrix(const Field& f, const Value& v, std::size_t rows, std::size_t cols, const char* what) {
  requireList(v, what);
  if (v.items.size() != rows)
    fail(ErrorKind::ParseError, std::string(what) + " needs " + std::to_string(rows) + " rows, found " +
                                    std::to_string(v.items.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vec row = toVector(f, v.items[r], cols, what);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Side toSide(const std::string& s) {
  if (s == "right") return Side::Right;
  if (s == "left") return Side::Left;
  fail(ErrorKind::ParseError, "side must be right or left, found \"" + s + "\"");
}

FieldPtr toField(const std::string& text) {
  const auto caret = text.find('^');
  if (caret == std::string::npos) return Field::make(static_cast<unsigned>(toCount(text)));
  return Field::make(static_cast<unsigned>(toCount(trim(text.substr(0, caret)))),
                     static_cast<unsigned>(toCount(trim(text.substr(caret + 1)))));
}

std::string fieldSpec(const Field& f) {
  if (f.degree() == 1) return std::to_string(f.characteristic());
  return std::to_string(f.characteristic()) + "^" + std::to_string(f.degree());
}

struct KeyValue {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

struct Section {
  std::string kind;
  std::string name;
  std::size_t line = 0;
  std::vector<KeyValue> entries;

  const KeyValue* find(std::string_view key) const {
    const KeyValue* found = nullptr;
    for (const KeyValue& kv : entries)
      if (kv.key == key) found = &kv;
    return found;
  }
  const KeyValue& require(std::string_view key) const {
    const KeyValue* kv = find(key);
    if (!kv) fail(ErrorKind::ParseError, "missing key \"" + std::string(key) + "\"");
    return *kv;
  }
};

// A reference to an object whose own section failed; reported once, there.
struct Skip {};

class Builder {
 public:
  Workspace ws;
  std::vector<std::string> errors;
  ErrorKind firstKind = ErrorKind::ParseError;

  void build(const Section& s) {
    try {
      if (ws.contains(s.name)) fail(ErrorKind::ParseError, "name \"" + s.name + "\" is already defined");
      checkKeys(s);
      if (s.kind == "algebra") buildAlgebra(s);
      else if (s.kind == "module") buildModule(s);
      else if (s.kind == "formula") buildFormula(s);
      else if (s.kind == "context") buildContext(s);
      else if (s.kind == "budget") buildBudget(s);
      else if (s.kind == "map") buildMap(s);
      else fail(ErrorKind::ParseError, "unknown section kind \"" + s.kind + "\"");
    } catch (const Skip&) {
      failed_.insert(s.name);
    } catch (const Error& e) {
      failed_.insert(s.name);
      ErrorKind kind = e.kind();
      if (kind != ErrorKind::ParseError && kind != ErrorKind::UnknownReference) kind = ErrorKind::ValidationFailure;
      if (errors.empty()) firstKind = kind;
      errors.push_back("line " + std::to_string(line_) + ": [" + s.kind + " " + s.name + "]: " + to_string(e.kind()) +
                       ": " + e.detail());
    }
  }

 private:
  std::set<std::string> failed_;
  std::size_t line_ = 0;

  void at(const KeyValue& kv) { line_ = kv.line; }

  void checkKeys(const Section& s) {
    line_ = s.line;
    static const std::vector<std::pair<std::string, std::vector<std::string>>> allowed{
        {"algebra", {"field", "preset", "nilpotency", "basis", "unit", "table"}},
        {"module", {"algebra", "side", "dim", "preset", "sum", "dual", "power"}},
        {"formula", {"algebra", "side", "arity", "body"}},
        {"context", {"algebra", "side", "generators", "pair"}},
        {"budget", {"bound", "equations", "candidates", "stages"}},
        {"map", {"source", "target", "matrix"}},
    };
    for (const auto& [kind, keys] : allowed) {
      if (kind != s.kind) continue;
      std::set<std::string> seen;
      for (const KeyValue& kv : s.entries) {
        line_ = kv.line;
        const bool action = kind == "module" && kv.key.rfind("action.", 0) == 0;
        if (!action && std::find(keys.begin(), keys.end(), kv.key) == keys.end())
          fail(ErrorKind::ParseError, "unknown key \"" + kv.key + "\"");
        if (kv.key != "pair" && !seen.insert(kv.key).second)
          fail(ErrorKind::ParseError, "key \"" + kv.key + "\" given twice");
      }
    }
    line_ = s.line;
  }

  template <class Entry>
  const Entry& ref(const std::vector<Entry>& entries, const std::string& name, const char* kind) {
    if (failed_.count(name)) throw Skip{};
    return lookup(entries, name, kind);
  }

  void buildAlgebra(const Section& s) {
    const KeyValue& fkv = s.require("field");
    at(fkv);
    const FieldPtr field = toField(fkv.value);
    AlgebraPtr alg;
    if (const KeyValue* preset = s.find("preset")) {
      at(*preset);
      if (preset->value == "field") {
        alg = fieldAlgebra(field);
      } else if (preset->value == "upper-triangular") {
        alg = upperTriangularAlgebra(field);
      } else if (preset->value == "truncated") {
        const KeyValue& n = s.require("nilpotency");
        at(n);
        alg = truncatedPolynomialAlgebra(field, toCount(n.value));
      } else {
        fail(ErrorKind::ParseError, "unknown algebra preset \"" + preset->value + "\"");
      }
    } else {
      const KeyValue& basisKv = s.require("basis");
      at(basisKv);
      const Value basis = parseValue(basisKv.value);
      requireList(basis, "basis");
      std::vector<std::string> labels;
      for (const Value& v : basis.items) labels.push_back(requireAtom(v, "basis"));
      const std::size_t m = labels.size();
      const KeyValue& unitKv = s.require("unit");
      at(unitKv);
      const Vec unit = toVector(*field, parseValue(unitKv.value), m, "unit");
      const KeyValue& tableKv = s.require("table");
      at(tableKv);
      const Value table = parseValue(tableKv.value);
      requireList(table, "table");
      if (table.items.size() != m) fail(ErrorKind::ParseError, "table needs one block per basis element");
      std::vector<std::vector<Vec>> constants;
      for (const Value& block : table.items) {
        requireList(block, "table");
        if (block.items.size() != m) fail(ErrorKind::ParseError, "table block needs one entry per basis element");
        std::vector<Vec> row;
        for (const Value& entry : block.items) row.push_back(toVector(*field, entry, m, "table entry"));
        constants.push_back(std::move(row));
      }
      line_ = s.line;
      alg = makeAlgebra(field, labels, constants, unit);
    }
    ws.algebras.push_back({s.name, alg});
  }

  std::pair<std::string, Side> algebraAndSide(const Section& s) {
    const KeyValue& a = s.require("algebra");
    at(a);
    ref(ws.algebras, a.value, "algebra");
    const KeyValue& sd = s.require("side");
    at(sd);
    return {a.value, toSide(sd.value)};
  }

  void buildModule(const Section& s) {
    ModulePtr m;
    std::string algName;
    if (const KeyValue* d = s.find("dual")) {
      at(*d);
      const ModuleEntry& src = ref(ws.modules, d->value, "module");
      m = dualModule(src.module);
      algName = src.algebra;
    } else if (const KeyValue* sm = s.find("sum")) {
      at(*sm);
      const Value parts = parseValue(sm->value);
      requireList(parts, "sum");
      if (parts.items.empty()) fail(ErrorKind::ParseError, "sum needs at least one module");
      std::vector<ModulePtr> mods;
      for (const Value& p : parts.items) {
        const ModuleEntry& e = ref(ws.modules, requireAtom(p, "sum"), "module");
        if (!algName.empty() && e.algebra != algName) fail(ErrorKind::AlgebraMismatch, "summands over different algebras");
        algName = e.algebra;
        mods.push_back(e.module);
      }
      m = directSum(mods, mods[0]->algebraPtr(), mods[0]->side()).module;
    } else if (const KeyValue* pw = s.find("power")) {
      at(*pw);
      const Value v = parseValue(pw->value);
      requireList(v, "power");
      if (v.items.size() != 2) fail(ErrorKind::ParseError, "power takes [module, exponent]");
      const ModuleEntry& e = ref(ws.modules, requireAtom(v.items[0], "power"), "module");
      m = power(e.module, toCount(requireAtom(v.items[1], "power")));
      algName = e.algebra;
    } else {
      auto [an, side] = algebraAndSide(s);
      algName = an;
      const AlgebraPtr& alg = ref(ws.algebras, algName, "algebra").algebra;
      if (const KeyValue* preset = s.find("preset")) {
        at(*preset);
        if (preset->value == "regular") m = regularModule(alg, side);
        else if (preset->value == "zero") m = zeroModule(alg, side);
        else fail(ErrorKind::ParseError, "unknown module preset \"" + preset->value + "\"");
      } else {
        const KeyValue& dkv = s.require("dim");
        at(dkv);
        const std::size_t dim = toCount(dkv.value);
        std::vector<Matrix> actions;
        for (const std::string& label : alg->labels()) {
          const KeyValue& akv = s.require("action." + label);
          at(akv);
          actions.push_back(toMatrix(alg->field(), parseValue(akv.value), dim, dim, "action matrix"));
        }
        for (const KeyValue& kv : s.entries)
          if (kv.key.rfind("action.", 0) == 0 && !alg->labelIndex(kv.key.substr(7))) {
            at(kv);
            fail(ErrorKind::ParseError, "no basis element \"" + kv.key.substr(7) + "\" in " + algName);
          }
        line_ = s.line;
        m = makeModule(alg, side, dim, std::move(actions));
      }
    }
    ws.modules.push_back({s.name, algName, m});
  }

  void buildFormula(const Section& s) {
    auto [algName, side] = algebraAndSide(s);
    const AlgebraPtr& alg = ws.algebra(algName).algebra;
    const KeyValue& ar = s.require("arity");
    at(ar);
    const std::size_t arity = toCount(ar.value);
    const KeyValue& body = s.require("body");
    at(body);
    ws.formulas.push_back({s.name, algName, parseFormula(alg, side, arity, body.value)});
  }

  void buildContext(const Section& s) {
    auto [algName, side] = algebraAndSide(s);
    const AlgebraPtr& alg = ws.algebra(algName).algebra;
    ContextEntry entry;
    entry.name = s.name;
    entry.algebra = algName;
    std::vector<ModulePtr> gens;
    if (const KeyValue* g = s.find("generators")) {
      at(*g);
      const Value list = parseValue(g->value);
      requireList(list, "generators");
      for (const Value& v : list.items) {
        const ModuleEntry& e = ref(ws.modules, requireAtom(v, "generators"), "module");
        entry.generators.push_back(e.name);
        gens.push_back(e.module);
      }
    }
    std::vector<ClosedPair> pairs;
    for (const KeyValue& kv : s.entries) {
      if (kv.key != "pair") continue;
      at(kv);
      const auto comma = kv.value.find(',');
      if (comma == std::string::npos) fail(ErrorKind::ParseError, "pair takes \"upper, lower\"");
      const std::string up = trim(kv.value.substr(0, comma));
      const std::string low = trim(kv.value.substr(comma + 1));
      pairs.push_back({ref(ws.formulas, up, "formula").formula, ref(ws.formulas, low, "formula").formula});
      entry.pairs.emplace_back(up, low);
    }
    line_ = s.line;
    entry.context = makeContext(alg, side, std::move(gens), std::move(pairs));
    ws.contexts.push_back(std::move(entry));
  }

  void buildBudget(const Section& s) {
    Budget b;
    auto read = [&](const char* key, std::size_t& field) {
      if (const KeyValue* kv = s.find(key)) {
        at(*kv);
        field = toCount(kv->value);
      }
    };
    read("bound", b.bound);
    read("equations", b.equations);
    read("candidates", b.candidates);
    read("stages", b.stages);
    line_ = s.line;
    validateBudget(b);
    ws.budgets.push_back({s.name, b});
  }

  void buildMap(const Section& s) {
    const KeyValue& src = s.require("source");
    at(src);
    const ModuleEntry& source = ref(ws.modules, src.value, "module");
    const KeyValue& tgt = s.require("target");
    at(tgt);
    const ModuleEntry& target = ref(ws.modules, tgt.value, "module");
    if (source.module->side() != target.module->side()) fail(ErrorKind::SideMismatch, "source and target sides differ");
    const KeyValue& mkv = s.require("matrix");
    at(mkv);
    const Field& f = source.module->field();
    const bool right = source.module->side() == Side::Right;
    const std::size_t rows = right ? source.module->dim() : target.module->dim();
    const std::size_t cols = right ? target.module->dim() : source.module->dim();
    Matrix native = toMatrix(f, parseValue(mkv.value), rows, cols, "map matrix");
    line_ = s.line;
    ws.maps.push_back({s.name, source.name, target.name,
                       makeMap(source.module, target.module, right ? native : linalg::transpose(native))});
  }
};

}  // namespace

const AlgebraEntry& Workspace::algebra(std::string_view name) const { return lookup(algebras, name, "algebra"); }
const ModuleEntry& Workspace::module(std::string_view name) const { return lookup(modules, name, "module"); }
const FormulaEntry& Workspace::formula(std::string_view name) const { return lookup(formulas, name, "formula"); }
const ContextEntry& Workspace::context(std::string_view name) const { return lookup(contexts, name, "context"); }
const BudgetEntry& Workspace::budget(std::string_view name) const { return lookup(budgets, name, "budget"); }
const MapEntry& Workspace::map(std::string_view name) const { return lookup(maps, name, "map"); }

const std::string& Workspace::algebraName(const AlgebraPtr& algebra) const {
  for (const AlgebraEntry& e : algebras)
    if (sameAlgebra(e.algebra, algebra)) return e.name;
  fail(ErrorKind::UnknownReference, "algebra not defined in the workspace");
}

bool Workspace::contains(std::string_view name) const {
  auto has = [&](const auto& entries) {
    return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
  };
  return has(algebras) || has(modules) || has(formulas) || has(contexts) || has(budgets) || has(maps);
}

std::size_t Workspace::size() const {
  return algebras.size() + modules.size() + formulas.size() + contexts.size() + budgets.size() + maps.size();
}

Workspace parseWorkspace(std::string_view text) {
  std::vector<Section> sections;
  std::optional<long long> version;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    auto where = [&] { return "line " + std::to_string(lineNo) + ": "; };
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(ErrorKind::ParseError, where() + "section header must end with ']'");
      std::istringstream header(line.substr(1, line.size() - 2));
      Section s;
      s.line = lineNo;
      std::string extra;
      if (!(header >> s.kind >> s.name) || (header >> extra))
        fail(ErrorKind::ParseError, where() + "section header must be [kind name]");
      if (!version) fail(ErrorKind::ParseError, where() + "the document must start with \"version = 1\"");
      sections.push_back(std::move(s));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::ParseError, where() + "expected \"key = value\"");
    KeyValue kv{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineNo};
    if (kv.key.empty()) fail(ErrorKind::ParseError, where() + "missing key before '='");
    if (sections.empty()) {
      if (kv.key != "version") fail(ErrorKind::ParseError, where() + "only \"version\" may precede the first section");
      if (version) fail(ErrorKind::ParseError, where() + "version given twice");
      try {
        version = toInt(kv.value);
      } catch (const Error& e) {
        fail(ErrorKind::ParseError, where() + e.detail());
      }
      if (*version != 1) fail(ErrorKind::ParseError, where() + "unsupported version " + kv.value);
      continue;
    }
    sections.back().entries.push_back(std::move(kv));
  }
  if (!version) fail(ErrorKind::ParseError, "line 1: the document must start with \"version = 1\"");

  Builder builder;
  for (const Section& s : sections) builder.build(s);
  if (!builder.errors.empty()) {
    std::string joined;
    for (std::size_t i = 0; i < builder.errors.size(); ++i) joined += (i ? "\n" : "") + builder.errors[i];
    fail(builder.firstKind, joined);
  }
  return std::move(builder.ws);
}

Workspace loadWorkspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open workspace \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseWorkspace(buf.str());
}

std::string formatVector(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string formatTuple(const Tuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "; " : "") + formatVector(t[i]);
  return out;
}

std::string formatMatrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) out += (r ? "," : "") + formatVector(m.row(r));
  return out + "]";
}

std::string serializeWorkspace(const Workspace& ws) {
  std::ostringstream os;
  os << "version = 1\n";
  for (const AlgebraEntry& e : ws.algebras) {
    const Algebra& a = *e.algebra;
    os << "\n[algebra " << e.name << "]\n";
    os << "field = " << fieldSpec(a.field()) << "\n";
    os << "basis = [";
    for (std::size_t i = 0; i < a.dim(); ++i) os << (i ? ", " : "") << a.labels()[i];
    os << "]\n";
    os << "unit = " << formatVector(a.unit()) << "\n";
    os << "table = [";
    for (std::size_t i = 0; i < a.dim(); ++i) {
      os << (i ? "," : "") << "[";
      for (std::size_t j = 0; j < a.dim(); ++j) os << (j ? "," : "") << formatVector(a.product(i, j));
      os << "]";
    }
    os << "]\n";
  }
  for (const ModuleEntry& e : ws.modules) {
    const ModuleRep& m = *e.module;
    os << "\n[module " << e.name << "]\n";
    os << "algebra = " << e.algebra << "\n";
    os << "side = " << to_string(m.side()) << "\n";
    os << "dim = " << m.dim() << "\n";
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
      os << "action." << m.algebra().labels()[i] << " = " << formatMatrix(m.action(i)) << "\n";
  }
  for (const FormulaEntry& e : ws.formulas) {
    os << "\n[formula " << e.name << "]\n";
    os << "algebra = " << e.algebra << "\n";
    os << "side = " << to_string(e.formula.side()) << "\n";
    os << "arity = " << e.formula.arity() << "\n";
    os << "body = " << formatFormula(e.formula) << "\n";
  }
  for (const ContextEntry& e : ws.contexts) {
    os << "\n[context " << e.name << "]\n";
    os << "algebra = " << e.algebra << "\n";
    os << "side = " << to_string(e.context.side()) << "\n";
    if (!e.generators.empty()) {
      os << "generators = [";
      for (std::size_t i = 0; i < e.generators.size(); ++i) os << (i ? ", " : "") << e.generators[i];
      os << "]\n";
    }
    for (const auto& [up, low] : e.pairs) os << "pair = " << up << ", " << low << "\n";
  }
  for (const BudgetEntry& e : ws.budgets) {
    os << "\n[budget " << e.name << "]\n";
    os << "bound = " << e.budget.bound << "\nequations = " << e.budget.equations << "\ncandidates = "
       << e.budget.candidates << "\nstages = " << e.budget.stages << "\n";
  }
  for (const MapEntry& e : ws.maps) {
    os << "\n[map " << e.name << "]\n";
    os << "source = " << e.source << "\ntarget = " << e.target << "\n";
    os << "matrix = " << formatMatrix(e.map.nativeMatrix()) << "\n";
  }
  return os.str();
}

bool equivalentWorkspaces(const Workspace& a, const Workspace& b) {
  auto sameNames = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].name != y[i].name) return false;
    return true;
  };
  if (!sameNames(a.algebras, b.algebras) || !sameNames(a.modules, b.modules) || !sameNames(a.formulas, b.formulas) ||
      !sameNames(a.contexts, b.contexts) || !sameNames(a.budgets, b.budgets) || !sameNames(a.maps, b.maps))
    return false;
  for (std::size_t i = 0; i < a.algebras.size(); ++i)
    if (!a.algebras[i].algebra->sameAs(*b.algebras[i].algebra)) return false;
  for (std::size_t i = 0; i < a.modules.size(); ++i)
    if (a.modules[i].algebra != b.modules[i].algebra || !a.modules[i].module->sameStructure(*b.modules[i].module))
      return false;
  for (std::size_t i = 0; i < a.formulas.size(); ++i)
    if (a.formulas[i].algebra != b.formulas[i].algebra || !(a.formulas[i].formula == b.formulas[i].formula)) return false;
  for (std::size_t i = 0; i < a.contexts.size(); ++i) {
    const ContextEntry& x = a.contexts[i];
    const ContextEntry& y = b.contexts[i];
    if (x.algebra != y.algebra || x.generators != y.generators || x.pairs != y.pairs ||
        x.context.side() != y.context.side())
      return false;
  }
  for (std::size_t i = 0; i < a.budgets.size(); ++i) {
    const Budget& x = a.budgets[i].budget;
    const Budget& y = b.budgets[i].budget;
    if (x.bound != y.bound || x.equations != y.equations || x.candidates != y.candidates || x.stages != y.stages)
      return false;
  }
  for (std::size_t i = 0; i < a.maps.size(); ++i)
    if (a.maps[i].source != b.maps[i].source || a.maps[i].target != b.maps[i].target ||
        !(a.maps[i].map.matrix() == b.maps[i].map.matrix()))
      return false;
  return true;
}

Vec parseElement(const ModuleRep& m, std::string_view text) {
  const std::string t = trim(text);
  const Field& f = m.field();
  if (!t.empty() && t.front() == '[') return toVector(f, parseValue(t), m.dim(), "element");
  const bool integer = !t.empty() && std::all_of(t.begin() + (t.front() == '-' ? 1 : 0), t.end(),
                                                 [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (integer && m.dim() == 1) return Vec{f.fromInt(toInt(t))};
  if (m.sameStructure(*regularModule(m.algebraPtr(), m.side()))) return parseAlgebraElement(m.algebra(), t);
  fail(ErrorKind::ParseError, "cannot read element \"" + t + "\" in a module of dimension " + std::to_string(m.dim()) +
                                  "; write coordinates as [a,b,...]");
}

Tuple parseTuple(const ModuleRep& m, std::string_view text) {
  Tuple out;
  const std::string t = trim(text);
  if (t.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto semi = t.find(';', start);
    out.push_back(parseElement(m, t.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace ppkit::cli
