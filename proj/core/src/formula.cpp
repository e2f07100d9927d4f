#include "ppkit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "ppkit/errors.hpp"

namespace ppkit {

PpFormula::PpFormula(AlgebraPtr algebra, Side side, std::size_t arity, std::size_t bound,
                     std::vector<std::vector<Vec>> equations)
    : algebra_(std::move(algebra)), side_(side), arity_(arity), bound_(bound), equations_(std::move(equations)) {
  if (!algebra_) fail(ErrorKind::InvalidArgument, "formula needs an algebra");
  for (const auto& eq : equations_) {
    if (eq.size() != arity_ + bound_)
      fail(ErrorKind::DimensionMismatch, "equation has " + std::to_string(eq.size()) + " coefficients, expected " +
                                             std::to_string(arity_ + bound_));
    for (const Vec& c : eq)
      if (c.size() != algebra_->dim()) fail(ErrorKind::DimensionMismatch, "coefficient is not an algebra element");
  }
}

PpFormula PpFormula::top(AlgebraPtr algebra, Side side, std::size_t arity) {
  return PpFormula(std::move(algebra), side, arity, 0, {});
}

PpFormula PpFormula::zero(AlgebraPtr algebra, Side side, std::size_t arity) {
  std::vector<std::vector<Vec>> eqs;
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<Vec> eq(arity, algebra->zero());
    eq[i] = algebra->unit();
    eqs.push_back(std::move(eq));
  }
  return PpFormula(std::move(algebra), side, arity, 0, std::move(eqs));
}

PpFormula PpFormula::normalized() const {
  std::vector<bool> used(bound_, false);
  std::vector<std::vector<Vec>> kept;
  for (const auto& eq : equations_) {
    bool nonzero = false;
    for (const Vec& c : eq)
      if (!linalg::isZero(c)) nonzero = true;
    if (!nonzero) continue;
    for (std::size_t k = 0; k < bound_; ++k)
      if (!linalg::isZero(eq[arity_ + k])) used[k] = true;
    kept.push_back(eq);
  }
  std::vector<std::size_t> keepVars;
  for (std::size_t v = 0; v < arity_; ++v) keepVars.push_back(v);
  for (std::size_t k = 0; k < bound_; ++k)
    if (used[k]) keepVars.push_back(arity_ + k);
  for (auto& eq : kept) {
    std::vector<Vec> slim;
    slim.reserve(keepVars.size());
    for (std::size_t v : keepVars) slim.push_back(eq[v]);
    eq = std::move(slim);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return PpFormula(algebra_, side_, arity_, keepVars.size() - arity_, std::move(kept));
}

bool PpFormula::operator==(const PpFormula& other) const {
  return side_ == other.side_ && arity_ == other.arity_ && bound_ == other.bound_ &&
         equations_ == other.equations_ && sameAlgebra(algebra_, other.algebra_);
}

FormulaBuilder::FormulaBuilder(AlgebraPtr algebra, Side side, std::size_t arity)
    : algebra_(std::move(algebra)), side_(side), arity_(arity), count_(arity) {}

std::size_t FormulaBuilder::freshVariable() { return count_++; }

std::size_t FormulaBuilder::freshVariables(std::size_t count) {
  const std::size_t first = count_;
  count_ += count;
  return first;
}

void FormulaBuilder::addEquation(const std::vector<std::pair<std::size_t, Vec>>& terms) {
  for (const auto& [var, coeff] : terms)
    if (var >= count_) fail(ErrorKind::InvalidArgument, "equation mentions an undeclared variable");
  equations_.push_back(terms);
}

void FormulaBuilder::embed(const PpFormula& phi, std::span<const std::size_t> freeVars) {
  if (freeVars.size() != phi.arity()) fail(ErrorKind::ArityMismatch, "embed: variable map has wrong length");
  if (!sameAlgebra(phi.algebraPtr(), algebra_)) fail(ErrorKind::AlgebraMismatch, "embed: different algebras");
  if (phi.side() != side_) fail(ErrorKind::SideMismatch, "embed: formula is for the other side");
  const std::size_t first = freshVariables(phi.bound());
  for (const auto& eq : phi.equations()) {
    std::vector<std::pair<std::size_t, Vec>> terms;
    for (std::size_t v = 0; v < eq.size(); ++v) {
      if (linalg::isZero(eq[v])) continue;
      terms.emplace_back(v < phi.arity() ? freeVars[v] : first + (v - phi.arity()), eq[v]);
    }
    equations_.push_back(std::move(terms));
  }
}

PpFormula FormulaBuilder::build() const {
  std::vector<std::vector<Vec>> eqs;
  for (const auto& terms : equations_) {
    std::vector<Vec> eq(count_, algebra_->zero());
    for (const auto& [var, coeff] : terms) eq[var] = algebra_->add(eq[var], coeff);
    eqs.push_back(std::move(eq));
  }
  return PpFormula(algebra_, side_, arity_, count_ - arity_, std::move(eqs));
}

namespace {

std::optional<Scalar> scalarMultipleOfUnit(const Algebra& alg, const Vec& r) {
  for (unsigned s = 0; s < alg.field().order(); ++s)
    if (alg.scalar(static_cast<Scalar>(s)) == r) return static_cast<Scalar>(s);
  return std::nullopt;
}

std::string variableName(const PpFormula& phi, std::size_t v) {
  return v < phi.arity() ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - phi.arity() + 1);
}

}  // namespace

std::string formatElement(const Algebra& alg, const Vec& r) {
  if (linalg::isZero(r)) return "0";
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (r == alg.basis(i)) return alg.labels()[i];
  if (auto s = scalarMultipleOfUnit(alg, r)) return std::to_string(*s);
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (r[i] == 0) continue;
    if (!first) out += " + ";
    first = false;
    if (r[i] != 1) out += std::to_string(r[i]) + "*";
    out += alg.labels()[i];
  }
  return out + ")";
}

std::string formatFormula(const PpFormula& phi) {
  const Algebra& alg = phi.algebra();
  std::ostringstream os;
  if (phi.bound() > 0) {
    os << "E";
    for (std::size_t k = 0; k < phi.bound(); ++k) os << " y" << (k + 1);
    os << " . ";
  }
  if (phi.equationCount() == 0) {
    os << "true";
    return os.str();
  }
  for (std::size_t j = 0; j < phi.equationCount(); ++j) {
    if (j > 0) os << " & ";
    bool first = true;
    for (std::size_t v = 0; v < phi.variables(); ++v) {
      const Vec& c = phi.coefficient(j, v);
      if (linalg::isZero(c)) continue;
      if (!first) os << " + ";
      first = false;
      const std::string var = variableName(phi, v);
      if (c == alg.unit()) {
        os << var;
      } else if (phi.side() == Side::Right) {
        os << var << "*" << formatElement(alg, c);
      } else {
        os << formatElement(alg, c) << "*" << var;
      }
    }
    if (first) os << "0";
    os << " = 0";
  }
  return os.str();
}

namespace {

struct Token {
  enum Kind { Ident, Number, Symbol, End } kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({Token::Ident, std::string(text.substr(start, i - start)), start + 1});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Number, std::string(text.substr(start, i - start)), start + 1});
    } else if (std::string_view("*+-=&().").find(c) != std::string_view::npos) {
      out.push_back({Token::Symbol, std::string(1, c), start + 1});
      ++i;
    } else {
      fail(ErrorKind::ParseError, "column " + std::to_string(start + 1) + ": unexpected character '" +
                                      std::string(1, c) + "'");
    }
  }
  out.push_back({Token::End, "", text.size() + 1});
  return out;
}

// A linear form: sum over variables of coefficient, plus a constant.
struct Linear {
  std::map<std::size_t, Vec> coeffs;
  Vec constant;
};

class Parser {
 public:
  Parser(const Algebra& alg, Side side, std::size_t arity, std::string_view text)
      : alg_(alg), side_(side), arity_(arity), tokens_(tokenize(text)) {}

  std::map<std::string, std::size_t> boundNames;
  std::vector<Linear> equations;

  void parseFormula() {
    if (peekIs(Token::Ident, "E")) {
      next();
      while (peek().kind == Token::Ident) {
        const std::string name = next().text;
        if (boundNames.count(name) || variableIndex(name))
          error(peekPrev(), "variable '" + name + "' declared twice");
        boundNames.emplace(name, arity_ + boundNames.size());
      }
      expect(".");
    }
    if (peekIs(Token::Ident, "true")) {
      next();
    } else {
      parseEquation();
      while (peekIs(Token::Symbol, "&")) {
        next();
        parseEquation();
      }
    }
    if (peek().kind != Token::End) error(peek(), "unexpected '" + peek().text + "'");
  }

  Vec parseElement() {
    Linear lin = parseSum();
    if (peek().kind != Token::End) error(peek(), "unexpected '" + peek().text + "'");
    if (!lin.coeffs.empty()) error(tokens_.front(), "element contains a variable");
    return lin.constant;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& peekPrev() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }
  const Token& next() { return tokens_[pos_++]; }
  bool peekIs(Token::Kind kind, const char* text) const { return peek().kind == kind && peek().text == text; }

  [[noreturn]] void error(const Token& t, const std::string& what) const {
    fail(ErrorKind::ParseError, "column " + std::to_string(t.column) + ": " + what);
  }

  void expect(const char* symbol) {
    if (!peekIs(Token::Symbol, symbol)) error(peek(), std::string("expected '") + symbol + "'");
    next();
  }

  std::optional<std::size_t> variableIndex(const std::string& name) const {
    if (auto it = boundNames.find(name); it != boundNames.end()) return it->second;
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const std::size_t idx = std::stoul(name.substr(1));
      if (idx >= 1 && idx <= arity_) return idx - 1;
    }
    return std::nullopt;
  }

  Linear constant(Vec v) const { return Linear{{}, std::move(v)}; }

  Linear add(Linear a, const Linear& b, bool subtract) const {
    const Field& f = alg_.field();
    for (const auto& [v, c] : b.coeffs) {
      auto [it, inserted] = a.coeffs.emplace(v, alg_.zero());
      it->second = subtract ? linalg::sub(f, it->second, c) : linalg::add(f, it->second, c);
    }
    a.constant = subtract ? linalg::sub(f, a.constant, b.constant) : linalg::add(f, a.constant, b.constant);
    return a;
  }

  Linear multiply(const Linear& a, const Linear& b, const Token& at) const {
    const bool av = !a.coeffs.empty();
    const bool bv = !b.coeffs.empty();
    if (av && bv) error(at, "product of two variables");
    if (!av && !bv) return constant(alg_.mul(a.constant, b.constant));
    Linear out;
    out.constant = alg_.zero();
    if (av) {
      // variable * coefficient: right modules only, unless the factor is a scalar.
      if (side_ == Side::Left && !scalarMultipleOfUnit(alg_, b.constant))
        error(at, "left-module coefficients must precede the variable");
      if (!linalg::isZero(a.constant)) error(at, "constant term inside a product");
      for (const auto& [v, c] : a.coeffs) out.coeffs[v] = alg_.mul(c, b.constant);
    } else {
      if (side_ == Side::Right && !scalarMultipleOfUnit(alg_, a.constant))
        error(at, "right-module coefficients must follow the variable");
      if (!linalg::isZero(b.constant)) error(at, "constant term inside a product");
      for (const auto& [v, c] : b.coeffs) out.coeffs[v] = alg_.mul(a.constant, c);
    }
    return out;
  }

  Linear parseFactor() {
    const Token& t = next();
    if (t.kind == Token::Symbol && t.text == "(") {
      Linear inner = parseSum();
      expect(")");
      return inner;
    }
    if (t.kind == Token::Ident) {
      if (auto v = variableIndex(t.text)) {
        Linear out;
        out.coeffs[*v] = alg_.unit();
        out.constant = alg_.zero();
        return out;
      }
      if (auto l = alg_.labelIndex(t.text)) return constant(alg_.basis(*l));
      error(t, "unknown name '" + t.text + "'");
    }
    if (t.kind == Token::Number) {
      if (auto l = alg_.labelIndex(t.text)) return constant(alg_.basis(*l));
      return constant(alg_.scalar(alg_.field().fromInt(std::stoll(t.text))));
    }
    error(t, t.kind == Token::End ? "unexpected end of formula" : "unexpected '" + t.text + "'");
  }

  Linear parseTerm() {
    Linear acc = parseFactor();
    while (peekIs(Token::Symbol, "*")) {
      const Token& at = next();
      Linear rhs = parseFactor();
      acc = multiply(acc, rhs, at);
    }
    return acc;
  }

  Linear parseSum() {
    bool negate = false;
    if (peekIs(Token::Symbol, "-")) {
      next();
      negate = true;
    }
    Linear acc = add(constant(alg_.zero()), parseTerm(), negate);
    while (peekIs(Token::Symbol, "+") || peekIs(Token::Symbol, "-")) {
      const bool minus = next().text == "-";
      acc = add(std::move(acc), parseTerm(), minus);
    }
    return acc;
  }

  void parseEquation() {
    const Token& start = peek();
    Linear lhs = parseSum();
    expect("=");
    Linear rhs = parseSum();
    Linear eq = add(std::move(lhs), rhs, true);
    if (!linalg::isZero(eq.constant)) error(start, "equation has a nonzero constant term");
    equations.push_back(std::move(eq));
  }

  const Algebra& alg_;
  Side side_;
  std::size_t arity_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

PpFormula parseFormula(const AlgebraPtr& algebra, Side side, std::size_t arity, std::string_view text) {
  Parser parser(*algebra, side, arity, text);
  parser.parseFormula();
  const std::size_t vars = arity + parser.boundNames.size();
  std::vector<std::vector<Vec>> eqs;
  for (const Linear& lin : parser.equations) {
    std::vector<Vec> eq(vars, algebra->zero());
    for (const auto& [v, c] : lin.coeffs) eq[v] = c;
    // 0 = 0, e.g. from "x1 = x1", carries no constraint.
    if (std::all_of(eq.begin(), eq.end(), [](const Vec& c) { return linalg::isZero(c); })) continue;
    eqs.push_back(std::move(eq));
  }
  return PpFormula(algebra, side, arity, parser.boundNames.size(), std::move(eqs));
}

Vec parseAlgebraElement(const Algebra& algebra, std::string_view text) {
  Parser parser(algebra, Side::Right, 0, text);
  return parser.parseElement();
}

}  // namespace ppkit
