#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tdvr/chainring.hpp"
#include "tdvr/errors.hpp"

using namespace tdvr;
using namespace tdvr::testing;

TEST(RingSpec, RejectsBadParameters) {
  EXPECT_THROW(RingSpec(4, 2, Flavor::EquiChar), PreconditionError);
  EXPECT_THROW(RingSpec(2, 0, Flavor::MixedChar), PreconditionError);
  EXPECT_THROW(RingSpec(3, 40, Flavor::MixedChar), PreconditionError);
  EXPECT_NO_THROW(RingSpec(2, 61, Flavor::EquiChar));
}

TEST(Scalar, AdditionPerFlavor) {
  const auto e = pi_ring(2, 2);
  EXPECT_TRUE((sc(e, "1 + pi") + sc(e, "1 + pi")).is_zero());
  const auto m = zp_ring(3, 2);
  EXPECT_EQ(Scalar(m, 7) + Scalar(m, 5), Scalar(m, 3));
  EXPECT_EQ(Scalar(m, 7) + Scalar(m), Scalar(m, 7));
}

TEST(Scalar, MultiplicationPerFlavor) {
  const auto e2 = pi_ring(2, 2);
  EXPECT_EQ(sc(e2, "1 + pi") * sc(e2, "1 + pi"), Scalar::one(e2));
  const auto e3 = pi_ring(3, 3);
  EXPECT_TRUE((sc(e3, "pi") * sc(e3, "pi^2")).is_zero());
  const auto m = zp_ring(3, 2);
  EXPECT_TRUE((Scalar(m, 3) * Scalar(m, 6)).is_zero());
}

TEST(Scalar, EquiCharHasCharacteristicP) {
  const auto e = pi_ring(3, 2);
  EXPECT_TRUE(Scalar::from_integer(e, 3).is_zero());
  EXPECT_EQ(Scalar::from_integer(e, -1), Scalar(e, 2));
  const auto m = zp_ring(3, 2);
  EXPECT_EQ(Scalar::from_integer(m, 3).valuation(), 1u);
}

TEST(Scalar, Valuation) {
  const auto m = zp_ring(3, 2);
  EXPECT_EQ(Scalar(m).valuation(), 2u);
  EXPECT_EQ(Scalar(m, 6).valuation(), 1u);
  const auto e = pi_ring(5, 3);
  EXPECT_EQ(sc(e, "2 + pi").valuation(), 0u);
  EXPECT_EQ(sc(e, "3*pi^2").valuation(), 2u);
}

TEST(Scalar, UnitPart) {
  EXPECT_EQ(unit_part(Scalar(zp_ring(3, 2), 6)), Scalar(zp_ring(3, 2), 2));
  const auto e = pi_ring(2, 2);
  EXPECT_EQ(unit_part(sc(e, "pi")), Scalar::one(e));
  EXPECT_EQ(unit_part(sc(e, "1 + pi")), sc(e, "1 + pi"));
  EXPECT_THROW(unit_part(Scalar(e)), PreconditionError);
}

TEST(Scalar, ExactDivide) {
  const auto m = zp_ring(3, 2);
  const Scalar q = exact_divide(Scalar(m, 6), Scalar(m, 3));
  EXPECT_EQ(q, Scalar(m, 2));
  EXPECT_EQ(q * Scalar(m, 3), Scalar(m, 6));
  EXPECT_EQ(exact_divide(Scalar(m, 4), Scalar(m, 4)), Scalar::one(m));
  const auto e = pi_ring(2, 3);
  EXPECT_EQ(exact_divide(sc(e, "pi^2"), sc(e, "pi")), sc(e, "pi"));
  EXPECT_THROW(exact_divide(sc(e, "pi"), sc(e, "pi^2")), DivisionError);
  EXPECT_THROW(exact_divide(sc(e, "1"), Scalar(e)), PreconditionError);
}

TEST(Scalar, AnnihilatorExponent) {
  EXPECT_EQ(annihilator_exponent(Scalar(pi_ring(3, 2))), 0u);
  EXPECT_EQ(annihilator_exponent(Scalar::one(pi_ring(3, 3))), 3u);
  EXPECT_EQ(annihilator_exponent(Scalar(zp_ring(2, 3), 4)), 1u);
}

TEST(Scalar, InverseRoundTrip) {
  for (const auto& r : {pi_ring(3, 3), zp_ring(3, 3), pi_ring(5, 2), zp_ring(2, 4)}) {
    for (std::uint64_t v = 0; v < r.modulus(); ++v) {
      const Scalar s(r, v);
      if (!s.is_unit()) {
        EXPECT_THROW(inverse(s), DivisionError);
        continue;
      }
      EXPECT_EQ(s * inverse(s), Scalar::one(r)) << to_string(s);
    }
  }
}

TEST(Scalar, RingLawsExhaustiveSmall) {
  for (const auto& r : {pi_ring(2, 3), zp_ring(2, 3), pi_ring(3, 2), zp_ring(3, 2)}) {
    const std::uint64_t n = r.modulus();
    for (std::uint64_t x = 0; x < n; ++x)
      for (std::uint64_t y = 0; y < n; ++y) {
        const Scalar a(r, x), b(r, y);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a - b) + b, a);
        if (!a.is_zero() && !b.is_zero() && !(a * b).is_zero())
          EXPECT_EQ((a * b).valuation(), a.valuation() + b.valuation());
        for (std::uint64_t z = 0; z < n; ++z) {
          const Scalar c(r, z);
          EXPECT_EQ((a * b) * c, a * (b * c));
          EXPECT_EQ(a * (b + c), a * b + a * c);
        }
      }
  }
}

TEST(Scalar, TruncateAndLayers) {
  const auto e = pi_ring(3, 3);
  const Scalar x = sc(e, "2 + pi + 2*pi^2");
  EXPECT_EQ(truncate(x, 0), Scalar(e));
  EXPECT_EQ(truncate(x, 2), sc(e, "2 + pi"));
  EXPECT_EQ(truncate(x, 3), x);
  EXPECT_EQ(digit_layer(x, 2), sc(e, "2*pi^2"));
  // truncation picks the representative of x modulo pi^m
  const auto m = zp_ring(2, 3);
  EXPECT_EQ(truncate(Scalar(m, 7), 2), Scalar(m, 3));
  EXPECT_EQ((Scalar(m, 7) - truncate(Scalar(m, 7), 2)).valuation(), 2u);
}

TEST(Scalar, Printing) {
  const auto e = pi_ring(3, 3);
  EXPECT_EQ(to_string(sc(e, "1 + 2*pi^2")), "1 + 2*pi^2");
  EXPECT_EQ(to_string(Scalar(e)), "0");
  EXPECT_EQ(to_string(sc(e, "pi")), "pi");
  EXPECT_EQ(to_string(Scalar(zp_ring(5, 2), 17)), "17");
}

TEST(Scalar, MixingRingsThrows) {
  EXPECT_THROW(Scalar::one(pi_ring(2, 2)) + Scalar::one(zp_ring(2, 2)), RingMismatch);
  EXPECT_THROW(Scalar::one(pi_ring(2, 2)) * Scalar::one(pi_ring(2, 3)), RingMismatch);
}
