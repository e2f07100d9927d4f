#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ppkit {

using Scalar = std::uint8_t;

// The finite field F_{p^d}. An element is stored by its canonical code: the
// polynomial c_0 + c_1 X + ... + c_{d-1} X^{d-1} over F_p (reduced modulo a
// fixed monic irreducible) is encoded as c_0 + c_1 p + ... + c_{d-1} p^{d-1}.
// Equality of elements is equality of codes.
class Field {
 public:
  static constexpr unsigned kMaxOrder = 64;

  // Throws NotAField when p is not prime or p^d exceeds kMaxOrder.
  static std::shared_ptr<const Field> make(unsigned p, unsigned degree = 1);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return d_; }
  unsigned order() const noexcept { return q_; }

  // Coefficients (low degree first) of the reduction polynomial, leading 1
  // omitted. Empty for prime fields.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Scalar add(Scalar a, Scalar b) const noexcept { return add_[a * q_ + b]; }
  Scalar sub(Scalar a, Scalar b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return mul_[a * q_ + b]; }
  Scalar neg(Scalar a) const noexcept { return neg_[a]; }
  // Inverse of a nonzero element; inv(0) is 0.
  Scalar inv(Scalar a) const noexcept { return inv_[a]; }

  // Integers in [0, q) are codes; negative integers denote additive
  // inverses of codes. For prime fields any integer is reduced mod p.
  Scalar fromInt(long long value) const;

  // "F2", "F3^2", ...
  std::string name() const;

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_;
  }

 private:
  Field() = default;

  unsigned p_ = 0;
  unsigned d_ = 0;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Scalar> add_;
  std::vector<Scalar> mul_;
  std::vector<Scalar> neg_;
  std::vector<Scalar> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace ppkit
