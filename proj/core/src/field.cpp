#include "ppkit/field.hpp"

#include <string>

#include "ppkit/errors.hpp"

namespace ppkit {
namespace {

bool isPrime(unsigned n) {
  if (n < 2) return false;
  for (unsigned k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

using Poly = std::vector<unsigned>;  // low degree first, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly polyMod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  while (a.size() >= b.size()) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - lead * b[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly fromCode(unsigned code, unsigned p, unsigned len) {
  Poly poly(len);
  for (unsigned i = 0; i < len; ++i) {
    poly[i] = code % p;
    code /= p;
  }
  return poly;
}

// Monic irreducible of the given degree with lowest code on its low
// coefficients. Irreducibility by trial division with every monic divisor of
// degree <= degree / 2.
Poly findModulus(unsigned p, unsigned degree) {
  unsigned count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= p;
  for (unsigned code = 0; code < count; ++code) {
    Poly candidate = fromCode(code, p, degree);
    candidate.push_back(1);
    if (candidate[0] == 0) continue;
    bool irreducible = true;
    for (unsigned dd = 1; dd <= degree / 2 && irreducible; ++dd) {
      unsigned divisors = 1;
      for (unsigned i = 0; i < dd; ++i) divisors *= p;
      for (unsigned dcode = 0; dcode < divisors; ++dcode) {
        Poly divisor = fromCode(dcode, p, dd);
        divisor.push_back(1);
        if (polyMod(candidate, divisor, p).empty()) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) return candidate;
  }
  fail(ErrorKind::NotAField, "no irreducible polynomial found");
}

}  // namespace

std::shared_ptr<const Field> Field::make(unsigned p, unsigned degree) {
  if (!isPrime(p)) fail(ErrorKind::NotAField, "characteristic " + std::to_string(p) + " is not prime");
  if (degree == 0) fail(ErrorKind::NotAField, "degree must be at least 1");
  unsigned q = 1;
  for (unsigned i = 0; i < degree; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(ErrorKind::NotAField, "field order exceeds " + std::to_string(kMaxOrder));
  }

  std::shared_ptr<Field> field(new Field());
  field->p_ = p;
  field->d_ = degree;
  field->q_ = q;
  Poly modulus;
  if (degree > 1) {
    modulus = findModulus(p, degree);
    field->modulus_.assign(modulus.begin(), modulus.end() - 1);
  }

  auto encode = [&](const Poly& poly) {
    unsigned code = 0;
    for (std::size_t i = poly.size(); i-- > 0;) code = code * p + poly[i];
    return static_cast<Scalar>(code);
  };

  field->add_.resize(q * q);
  field->mul_.resize(q * q);
  field->neg_.resize(q);
  field->inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const Poly pa = fromCode(a, p, degree);
    Poly na(degree);
    for (unsigned i = 0; i < degree; ++i) na[i] = (p - pa[i]) % p;
    field->neg_[a] = encode(na);
    for (unsigned b = 0; b < q; ++b) {
      const Poly pb = fromCode(b, p, degree);
      Poly sum(degree);
      for (unsigned i = 0; i < degree; ++i) sum[i] = (pa[i] + pb[i]) % p;
      field->add_[a * q + b] = encode(sum);
      Poly prod(2 * degree, 0);
      for (unsigned i = 0; i < degree; ++i)
        for (unsigned j = 0; j < degree; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      if (degree > 1) {
        prod = polyMod(prod, modulus, p);
      } else {
        trim(prod);
      }
      prod.resize(degree, 0);
      field->mul_[a * q + b] = encode(prod);
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (field->mul_[a * q + b] == 1) field->inv_[a] = static_cast<Scalar>(b);

  if (degree > 1) {
    // Field axioms on the finished tables.
    for (unsigned a = 1; a < q; ++a)
      if (field->inv_[a] == 0) fail(ErrorKind::NotAField, "element " + std::to_string(a) + " has no inverse");
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        if (field->mul_[a * q + b] != field->mul_[b * q + a])
          fail(ErrorKind::NotAField, "multiplication is not commutative");
        for (unsigned c = 0; c < q; ++c) {
          const Scalar lhs = field->mul_[field->mul_[a * q + b] * q + c];
          const Scalar rhs = field->mul_[a * q + field->mul_[b * q + c]];
          const Scalar dl = field->mul_[a * q + field->add_[b * q + c]];
          const Scalar dr = field->add_[field->mul_[a * q + b] * q + field->mul_[a * q + c]];
          if (lhs != rhs || dl != dr) fail(ErrorKind::NotAField, "field tables violate associativity/distributivity");
        }
      }
  }
  return field;
}

Scalar Field::fromInt(long long value) const {
  if (d_ == 1) {
    long long r = value % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
  }
  const long long magnitude = value < 0 ? -value : value;
  if (magnitude >= static_cast<long long>(q_))
    fail(ErrorKind::ParseError, "field code " + std::to_string(value) + " out of range for " + name());
  const auto code = static_cast<Scalar>(magnitude);
  return value < 0 ? neg(code) : code;
}

std::string Field::name() const {
  std::string out = "F" + std::to_string(p_);
  if (d_ > 1) out += "^" + std::to_string(d_);
  return out;
}

}  // namespace ppkit
