#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tdvr/assoc_graded.hpp"
#include "tdvr/errors.hpp"
#include "tdvr/oracle.hpp"
#include "tdvr/random.hpp"

using namespace tdvr;
using namespace tdvr::testing;

namespace {

Matrix mat(const RingSpec& r, std::vector<std::vector<std::uint64_t>> rows) {
  Matrix m(r, rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar(r, rows[i][j]);
  return m;
}

void expect_certificate(const Matrix& a, const SmithForm& s) {
  EXPECT_EQ(s.left * a * s.right, s.diagonal);
  EXPECT_EQ(s.right * s.right_inverse, Matrix::identity(a.ring(), a.cols()));
  for (std::size_t i = 0; i < s.diagonal.rows(); ++i)
    for (std::size_t j = 0; j < s.diagonal.cols(); ++j) {
      if (i == j && i < s.exponents.size())
        EXPECT_EQ(s.diagonal.at(i, j), Scalar::uniformizer_power(a.ring(), s.exponents[i]));
      else
        EXPECT_TRUE(s.diagonal.at(i, j).is_zero());
    }
  EXPECT_TRUE(std::is_sorted(s.exponents.begin(), s.exponents.end()));
}

}  // namespace

TEST(Smith, Examples) {
  const auto e = pi_ring(2, 2);
  const Matrix a = mat(e, {{2, 0}, {0, 1}});  // payload 2 is pi
  const SmithForm s = smith_over_chain_ring(a);
  EXPECT_EQ(s.exponents, (std::vector<std::uint32_t>{0, 1}));
  expect_certificate(a, s);

  const auto z = zp_ring(2, 2);
  const Matrix b = mat(z, {{2, 2}, {0, 2}});
  const SmithForm t = smith_over_chain_ring(b);
  EXPECT_EQ(t.exponents, (std::vector<std::uint32_t>{1, 1}));
  expect_certificate(b, t);

  const Matrix zero(z, 2, 3);
  EXPECT_TRUE(smith_over_chain_ring(zero).exponents.empty());
}

TEST(Smith, RandomCertificates) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    const RingSpec r(k % 2 ? 3 : 2, 1 + k % 4, k % 3 ? Flavor::MixedChar : Flavor::EquiChar);
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    Matrix a(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = random_scalar(r, rng);
    expect_certificate(a, smith_over_chain_ring(a));
  }
}

TEST(Invariants, Examples) {
  const auto m = module(pi_ring(2, 2), {"x"});
  const auto i1 = quotient_invariants(els(m, {"pi*x"}), 1);
  EXPECT_EQ(i1.exponents, (std::vector<std::uint32_t>{1}));
  EXPECT_FALSE(i1.is_free());
  const auto i2 = quotient_invariants(els(m, {"x"}), 1);
  EXPECT_TRUE(i2.exponents.empty());
  EXPECT_EQ(i2.free_rank(), 0u);
  const auto i3 = quotient_invariants(els(m, {"x^2"}), 1);
  EXPECT_EQ(i3.free_rank(), 1u);
}

TEST(Invariants, Preconditions) {
  const auto m = module(pi_ring(2, 2), {"x"});
  EXPECT_THROW(quotient_invariants({}, 1), PreconditionError);
  EXPECT_THROW(quotient_invariants({Element(m)}, 1), PreconditionError);
  EXPECT_THROW(quotient_invariants(els(m, {"x + 1"}), 1), PreconditionError);
}

TEST(OracleFlat, Examples) {
  const auto m = module(pi_ring(2, 2), {"x"});
  const auto r = oracle_is_flat(els(m, {"pi*x"}), 3);
  EXPECT_FALSE(r.flat);
  EXPECT_EQ(r.first_non_free_degree, 1u);
  EXPECT_EQ(r.per_degree.size(), 4u);
  const auto m2 = module(zp_ring(3, 2), {"x", "y"});
  EXPECT_TRUE(oracle_is_flat(els(m2, {"x - y"}), 3).flat);
}

TEST(OracleMembership, Examples) {
  const auto m = module(pi_ring(2, 2), {"x"});
  const auto F = els(m, {"pi*x"});
  EXPECT_TRUE(oracle_membership(el(m, "pi*x^2"), F));
  EXPECT_FALSE(oracle_membership(el(m, "x"), F));
  EXPECT_TRUE(oracle_membership(Element(m), F));
  EXPECT_THROW(oracle_membership(el(m, "x + 1"), F), PreconditionError);
}

TEST(OracleGr, Examples) {
  const auto z = module(zp_ring(2, 2), {"x"});
  const auto g = graded_module_of(z);
  EXPECT_EQ(oracle_gr(els(z, {"2*x"}), 1, 1, g), std::vector<Element>{el(g, "pi*x")});
  EXPECT_TRUE(oracle_gr(els(z, {"2*x"}), 0, 1, g).empty());
  EXPECT_EQ(oracle_gr(els(z, {"x"}), 0, 1, g), std::vector<Element>{el(g, "x")});
  EXPECT_TRUE(oracle_gr(els(z, {"x"}), 2, 1, g).empty());
  EXPECT_THROW(oracle_gr(els(z, {"x"}), 0, 1, z), PreconditionError);
}

TEST(OracleGr, DimensionsAddUpToLength) {
  // sum over i of dim gr^i(M)_d is the composition length of M_d
  std::mt19937_64 rng(41);
  for (int k = 0; k < 80; ++k) {
    auto shape = random_shape(rng);
    shape.x_homogeneous = true;
    const auto inst = random_instance(shape, rng);
    const auto g = graded_module_of(inst.module);
    const std::uint32_t a = shape.a;
    for (std::uint64_t d = 0; d <= 3; ++d) {
      std::uint64_t total = 0;
      for (std::uint32_t i = 0; i < a; ++i) total += oracle_gr(inst.generators, i, d, g).size();
      const auto inv = quotient_invariants(inst.generators, d);
      const std::uint64_t n = module_monomials_of_degree(*inst.module, d).size();
      EXPECT_EQ(total + inv.total_length(), n * a);
    }
  }
}

TEST(RankModP, Basics) {
  EXPECT_EQ(rank_mod_p({{1, 2}, {2, 1}}, 3), 1u);
  EXPECT_EQ(rank_mod_p({{1, 2}, {2, 1}}, 5), 2u);
  EXPECT_EQ(rank_mod_p({{1, 2}, {2, 4}}, 5), 1u);
  EXPECT_EQ(rank_mod_p({}, 2), 0u);
  EXPECT_EQ(rank_mod_p({{0, 0}}, 2), 0u);
}

TEST(LeadingValuations, GroundFieldFixture) {
  const auto m = module(zp_ring(5, 1), {"x", "y"}, 1, "deglex pot");
  const auto lead = oracle_leading_valuations(els(m, {"x^2 + y", "x*y"}), 4, 4);
  EXPECT_EQ(lead.at(monomial_key(el(m, "y^2").lp())), 0u);
  EXPECT_EQ(lead.at(monomial_key(el(m, "y").lp())), 1u);
  EXPECT_EQ(lead.at(monomial_key(el(m, "x").lp())), 1u);
}
