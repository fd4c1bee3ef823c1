#include "tdvr/chainring.hpp"

#include <array>
#include <ostream>

#include "tdvr/errors.hpp"

namespace tdvr {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;
constexpr std::size_t kMaxLength = 62;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Digits = std::array<std::uint32_t, kMaxLength>;

Digits decode(std::uint64_t v, const RingSpec& r) {
  Digits d{};
  for (std::uint32_t i = 0; i < r.length(); ++i) {
    d[i] = static_cast<std::uint32_t>(v % r.p());
    v /= r.p();
  }
  return d;
}

std::uint64_t encode(const Digits& d, const RingSpec& r) {
  std::uint64_t v = 0;
  for (std::uint32_t i = r.length(); i-- > 0;) v = v * r.p() + d[i];
  return v;
}

std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t m) {
  // extended Euclid on signed 128-bit to stay clear of overflow
  i128 old_r = static_cast<i128>(x % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DivisionError("element is not invertible");
  i128 res = old_s % static_cast<i128>(m);
  if (res < 0) res += m;
  return static_cast<std::uint64_t>(res);
}

void require_same(const Scalar& x, const Scalar& y) {
  if (!(x.ring() == y.ring())) throw RingMismatch();
}

}  // namespace

const char* to_string(Flavor f) noexcept {
  return f == Flavor::EquiChar ? "pi" : "p";
}

RingSpec::RingSpec(std::uint32_t p, std::uint32_t a, Flavor flavor) : p_(p), a_(a), flavor_(flavor) {
  if (!is_prime(p)) throw PreconditionError("residue characteristic " + std::to_string(p) + " is not prime");
  if (a < 1) throw PreconditionError("ring length must be at least 1");
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < a; ++i) {
    if (m > kMaxModulus / p) throw PreconditionError("p^a does not fit in 62 bits");
    m *= p;
  }
  modulus_ = m;
}

std::uint64_t RingSpec::p_power(std::uint32_t k) const noexcept {
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < k && i < a_; ++i) m *= p_;
  return m;
}

std::string RingSpec::describe() const {
  if (flavor_ == Flavor::EquiChar)
    return "F_" + std::to_string(p_) + "[pi]/(pi^" + std::to_string(a_) + ")";
  return "Z/" + std::to_string(p_) + "^" + std::to_string(a_);
}

Scalar Scalar::from_integer(const RingSpec& ring, std::int64_t n) {
  if (ring.flavor() == Flavor::EquiChar) {
    // characteristic p: n maps into the constant digit
    std::int64_t r = n % static_cast<std::int64_t>(ring.p());
    if (r < 0) r += ring.p();
    return Scalar(ring, static_cast<std::uint64_t>(r));
  }
  const auto m = static_cast<i128>(ring.modulus());
  i128 r = static_cast<i128>(n) % m;
  if (r < 0) r += m;
  return Scalar(ring, static_cast<std::uint64_t>(r));
}

Scalar Scalar::uniformizer_power(const RingSpec& ring, std::uint32_t k) {
  if (k >= ring.length()) return Scalar(ring);
  return Scalar(ring, ring.p_power(k));
}

std::uint32_t Scalar::digit(std::uint32_t k) const noexcept {
  if (k >= ring_.length()) return 0;
  return static_cast<std::uint32_t>((value_ / ring_.p_power(k)) % ring_.p());
}

std::uint32_t Scalar::valuation() const noexcept {
  if (value_ == 0) return ring_.length();
  std::uint32_t v = 0;
  std::uint64_t x = value_;
  while (x % ring_.p() == 0) {
    x /= ring_.p();
    ++v;
  }
  return v;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(*this, o);
  if (ring_.flavor() == Flavor::MixedChar) {
    std::uint64_t s = value_ + o.value_;
    if (s >= ring_.modulus()) s -= ring_.modulus();
    return Scalar(ring_, s);
  }
  Digits x = decode(value_, ring_), y = decode(o.value_, ring_);
  for (std::uint32_t i = 0; i < ring_.length(); ++i) x[i] = (x[i] + y[i]) % ring_.p();
  return Scalar(ring_, encode(x, ring_));
}

Scalar Scalar::operator-() const {
  if (value_ == 0) return *this;
  if (ring_.flavor() == Flavor::MixedChar) return Scalar(ring_, ring_.modulus() - value_);
  Digits x = decode(value_, ring_);
  for (std::uint32_t i = 0; i < ring_.length(); ++i) x[i] = (ring_.p() - x[i]) % ring_.p();
  return Scalar(ring_, encode(x, ring_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(*this, o);
  return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(*this, o);
  if (value_ == 0 || o.value_ == 0) return Scalar(ring_);
  if (ring_.flavor() == Flavor::MixedChar) {
    const u128 prod = static_cast<u128>(value_) * o.value_;
    return Scalar(ring_, static_cast<std::uint64_t>(prod % ring_.modulus()));
  }
  const Digits x = decode(value_, ring_), y = decode(o.value_, ring_);
  Digits z{};
  const std::uint32_t a = ring_.length();
  for (std::uint32_t i = 0; i < a; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; i + j < a; ++j)
      z[i + j] = static_cast<std::uint32_t>((z[i + j] + std::uint64_t{x[i]} * y[j]) % ring_.p());
  }
  return Scalar(ring_, encode(z, ring_));
}

Scalar unit_part(const Scalar& x) {
  if (x.is_zero()) throw PreconditionError("unit_part of zero");
  const std::uint32_t v = x.valuation();
  return Scalar(x.ring(), x.payload() / x.ring().p_power(v));
}

Scalar inverse(const Scalar& u) {
  if (!u.is_unit()) throw DivisionError("inverse of a non-unit");
  const RingSpec& r = u.ring();
  if (r.flavor() == Flavor::MixedChar) return Scalar(r, mod_inverse(u.payload(), r.modulus()));
  // power-series inversion, truncated at pi^a
  const Digits c = decode(u.payload(), r);
  Digits b{};
  const std::uint64_t p = r.p();
  const std::uint64_t inv0 = mod_inverse(c[0], p);
  b[0] = static_cast<std::uint32_t>(inv0);
  for (std::uint32_t k = 1; k < r.length(); ++k) {
    std::uint64_t s = 0;
    for (std::uint32_t i = 1; i <= k; ++i) s = (s + std::uint64_t{c[i]} * b[k - i]) % p;
    b[k] = static_cast<std::uint32_t>(((p - s) % p) * inv0 % p);
  }
  return Scalar(r, encode(b, r));
}

Scalar exact_divide(const Scalar& x, const Scalar& y) {
  require_same(x, y);
  if (y.is_zero()) throw DivisionError("division by zero");
  if (x.is_zero()) return Scalar(x.ring());
  const std::uint32_t vx = x.valuation(), vy = y.valuation();
  if (vx < vy) throw DivisionError("division infeasible: v(x) < v(y)");
  return unit_part(x) * inverse(unit_part(y)) * Scalar::uniformizer_power(x.ring(), vx - vy);
}

std::uint32_t annihilator_exponent(const Scalar& x) noexcept {
  return x.ring().length() - x.valuation();
}

Scalar truncate(const Scalar& x, std::uint32_t m) {
  if (m >= x.ring().length()) return x;
  return Scalar(x.ring(), x.payload() % x.ring().p_power(m));
}

Scalar digit_layer(const Scalar& x, std::uint32_t k) {
  return Scalar(x.ring(), std::uint64_t{x.digit(k)} * x.ring().p_power(k));
}

std::string to_string(const Scalar& x) {
  if (x.ring().flavor() == Flavor::MixedChar) return std::to_string(x.payload());
  if (x.is_zero()) return "0";
  std::string out;
  for (std::uint32_t i = 0; i < x.ring().length(); ++i) {
    const std::uint32_t c = x.digit(i);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "pi";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << to_string(x); }

}  // namespace tdvr
