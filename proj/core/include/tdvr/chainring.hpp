#pragma once

// Exact arithmetic in truncated discrete valuation rings.
//
// Two flavors share one payload encoding: an element is stored as an integer
// in [0, p^a) whose base-p digits are
//   EquiChar  (F_p[pi]/(pi^a)): the coefficients of 1, pi, pi^2, ...
//   MixedChar (Z/p^a):          the p-adic digits of the residue.
// With that encoding the valuation, the unit part and truncation modulo
// the uniformizer power are the same digit manipulations in both flavors;
// only addition and multiplication differ (carry-free vs. carrying).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace tdvr {

enum class Flavor : std::uint8_t {
  EquiChar,   ///< F_p[pi]/(pi^a), uniformizer pi
  MixedChar,  ///< Z/p^a, uniformizer p
};

const char* to_string(Flavor f) noexcept;

class RingSpec {
 public:
  /// Throws PreconditionError unless p is prime, a >= 1 and p^a < 2^62.
  RingSpec(std::uint32_t p, std::uint32_t a, Flavor flavor);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t length() const noexcept { return a_; }
  Flavor flavor() const noexcept { return flavor_; }
  /// p^a, the number of elements.
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// p^k for 0 <= k <= a.
  std::uint64_t p_power(std::uint32_t k) const noexcept;

  bool operator==(const RingSpec& o) const noexcept {
    return p_ == o.p_ && a_ == o.a_ && flavor_ == o.flavor_;
  }

  std::string describe() const;

 private:
  std::uint32_t p_;
  std::uint32_t a_;
  Flavor flavor_;
  std::uint64_t modulus_;
};

class Scalar {
 public:
  /// The zero element of `ring`.
  explicit Scalar(const RingSpec& ring) noexcept : ring_(ring), value_(0) {}
  /// Payload is reduced modulo p^a (see the encoding note above).
  Scalar(const RingSpec& ring, std::uint64_t payload) noexcept
      : ring_(ring), value_(payload % ring.modulus()) {}

  /// The image of the integer n under Z -> A.
  static Scalar from_integer(const RingSpec& ring, std::int64_t n);
  /// uniformizer^k; zero once k >= a.
  static Scalar uniformizer_power(const RingSpec& ring, std::uint32_t k);
  static Scalar one(const RingSpec& ring) { return Scalar(ring, 1); }

  const RingSpec& ring() const noexcept { return ring_; }
  std::uint64_t payload() const noexcept { return value_; }
  /// Base-p digit k of the payload (coefficient of pi^k for EquiChar).
  std::uint32_t digit(std::uint32_t k) const noexcept;

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept { return value_ % ring_.p() != 0; }
  /// The exponent i of x = u * uniformizer^i; a for zero.
  std::uint32_t valuation() const noexcept;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const noexcept {
    return value_ == o.value_ && ring_ == o.ring_;
  }

 private:
  RingSpec ring_;
  std::uint64_t value_;
};

/// Canonical u with x = u * uniformizer^{v(x)}. Throws on zero.
Scalar unit_part(const Scalar& x);

/// Inverse of a unit. Throws DivisionError for non-units.
Scalar inverse(const Scalar& unit);

/// Canonical q = unit_part(x) * unit_part(y)^{-1} * uniformizer^{v(x)-v(y)},
/// satisfying q * y == x. Requires y != 0 and v(x) >= v(y).
Scalar exact_divide(const Scalar& x, const Scalar& y);

/// Least e with uniformizer^e * x == 0, i.e. a - v(x).
std::uint32_t annihilator_exponent(const Scalar& x) noexcept;

/// Canonical representative of x modulo uniformizer^m: the low m digits.
/// This is the coset representative set A^{<m} used for normal forms.
Scalar truncate(const Scalar& x, std::uint32_t m);

/// The pure digit-k layer of x: digit(k) * uniformizer^k.
Scalar digit_layer(const Scalar& x, std::uint32_t k);

/// EquiChar: ascending powers, e.g. "1 + 2*pi^2"; MixedChar: decimal.
std::string to_string(const Scalar& x);
std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace tdvr
