#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tdvr/errors.hpp"
#include "tdvr/groebner.hpp"
#include "tdvr/oracle.hpp"
#include "tdvr/random.hpp"

using namespace tdvr;
using namespace tdvr::testing;

namespace {

ModulePtr f2pi() { return module(pi_ring(2, 2), {"x", "y"}, 1, "deglex pot"); }

}  // namespace

TEST(Reduction, SingleStep) {
  const auto m = f2pi();
  const auto F = els(m, {"x + pi"});
  const auto step = reduce_step(el(m, "x^2"), F);
  ASSERT_TRUE(step);
  EXPECT_EQ(step->first, el(m, "pi*x"));
  EXPECT_EQ(step->second.reducer, 0u);
  EXPECT_EQ(step->second.shift, Monomial({1, 0}));
  EXPECT_FALSE(reduce_step(el(m, "x"), els(m, {"pi*x"})));
  const Element g = el(m, "x*y + pi*y^2");
  const auto exact = reduce_step(g.mul_term(Scalar::one(m->ring()), Monomial({1, 0})), std::vector<Element>{g});
  ASSERT_TRUE(exact);
  EXPECT_TRUE(exact->first.is_zero());
  EXPECT_THROW(reduce_step(Element(m), F), PreconditionError);
}

TEST(Reduction, PrefersLeastValuation) {
  const auto m = f2pi();
  const auto F = els(m, {"pi*x", "x + y"});
  const auto step = reduce_step(el(m, "x"), F);
  ASSERT_TRUE(step);
  EXPECT_EQ(step->second.reducer, 1u);
}

TEST(Reduction, ToMinimal) {
  const auto m = f2pi();
  const auto t = reduce_to_minimal(el(m, "x^2"), els(m, {"x + pi"}));
  EXPECT_TRUE(t.final.is_zero());
  EXPECT_EQ(t.steps.size(), 2u);
  const auto stuck = reduce_to_minimal(el(m, "x + y"), els(m, {"pi*x"}));
  EXPECT_EQ(stuck.final, el(m, "x + y"));
  EXPECT_TRUE(stuck.steps.empty());
  const auto zero = reduce_to_minimal(Element(m), els(m, {"pi*x"}));
  EXPECT_TRUE(zero.final.is_zero());
  EXPECT_TRUE(zero.steps.empty());
}

TEST(Reduction, TraceReplays) {
  const auto m = module(zp_ring(3, 2), {"x", "y"}, 1, "deglex pot");
  const auto G = els(m, {"x^2 + 3*y", "3*x*y + y", "y^2"});
  const Element f = el(m, "x^3*y + 2*x*y^2 + 4*y");
  const auto t = reduce_to_minimal(f, G);
  Element replay = f;
  for (const auto& s : t.steps) replay = replay.minus_multiple(s.multiplier, s.shift, G[s.reducer]);
  // steps also act on tail terms after the leading term was set aside
  EXPECT_EQ(replay, t.final);
}

TEST(Membership, Examples) {
  const auto m = f2pi();
  const Basis G = buchberger(els(m, {"x + pi"}));
  EXPECT_TRUE(is_member(el(m, "x^2"), G));
  EXPECT_TRUE(is_member(G[0], G));
  const Basis P = buchberger(els(m, {"pi*x"}));
  EXPECT_FALSE(is_member(el(m, "x"), P));
  EXPECT_THROW(is_member(el(m, "x"), Basis(m, els(m, {"x"}))), PreconditionError);
}

TEST(Pairs, SPairAndAnnihilatorPair) {
  const auto m = f2pi();
  const auto s = s_pair(el(m, "x + pi"), el(m, "pi*y"));
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->is_zero());
  const auto m2 = module(pi_ring(2, 2), {"x"}, 2);
  EXPECT_FALSE(s_pair(el(m2, "x*e1"), el(m2, "x*e2")));
  const auto a = ann_pair(el(m, "pi*x + pi*y"));
  ASSERT_TRUE(a);
  EXPECT_TRUE(a->is_zero());
  EXPECT_EQ(*ann_pair(el(m, "pi*x + y")), el(m, "pi*y"));
  EXPECT_FALSE(ann_pair(el(m, "x + y")));
}

TEST(Pairs, SPairCancelsLeadingTermsWithNonTrivialUnits) {
  const auto m = module(zp_ring(5, 2), {"x", "y"}, 1, "deglex pot");
  const Element gi = el(m, "2*x + y"), gj = el(m, "15*y + 3");
  const Element gk = el(m, "3*x*y + 1");
  const auto s = s_pair(gi, gk);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->is_zero() || m->order().compare(s->lp(), {Monomial({1, 1}), 0}) < 0);
  const auto t = s_pair(gj, gk);
  ASSERT_TRUE(t);
  EXPECT_TRUE(t->is_zero() || m->order().compare(t->lp(), {Monomial({1, 1}), 0}) < 0);
}

TEST(Completion, SmallExamples) {
  const auto m = f2pi();
  EXPECT_EQ(buchberger(els(m, {"x + pi"})).elements(), els(m, {"x + pi"}));
  EXPECT_EQ(buchberger(els(m, {"pi*x"})).elements(), els(m, {"pi*x"}));
  const auto z = module(zp_ring(2, 2), {"x"});
  EXPECT_EQ(buchberger(els(z, {"2*x + 2"})).elements(), els(z, {"2*x + 2"}));
  const auto f5 = module(zp_ring(5, 1), {"x", "y"}, 1, "deglex pot");
  EXPECT_EQ(minimalize(buchberger(els(f5, {"x^2 + y", "x*y"}))).elements(), els(f5, {"x^2 + y", "x*y", "y^2"}));
}

TEST(Completion, RejectsZeroInputAndHonoursBudget) {
  const auto m = f2pi();
  EXPECT_THROW(buchberger({Element(m)}), PreconditionError);
  EXPECT_THROW(buchberger({}), PreconditionError);
  CompletionOptions o;
  o.pair_budget = 1;
  EXPECT_THROW(buchberger(els(m, {"x^2 + y", "x*y + pi", "y^2 + x"}), o), PairBudgetExceeded);
}

TEST(Completion, Deterministic) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 40; ++k) {
    const auto inst = random_instance(random_shape(rng), rng);
    EXPECT_EQ(buchberger(inst.generators), buchberger(inst.generators));
  }
}

TEST(Completion, FifoStrategyGeneratesSameModule) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    const auto inst = random_instance(random_shape(rng), rng);
    CompletionOptions fifo;
    fifo.strategy = PairStrategy::Fifo;
    const Basis a = buchberger(inst.generators), b = buchberger(inst.generators, fifo);
    EXPECT_FALSE(check_groebner_certificate(b.elements()));
    for (const auto& g : a.elements()) EXPECT_TRUE(is_member(g, b));
    for (const auto& g : b.elements()) EXPECT_TRUE(is_member(g, a));
  }
}

TEST(Completion, CofactorsExpressBasisInInputs) {
  std::mt19937_64 rng(99);
  CompletionOptions o;
  o.track_cofactors = true;
  for (int k = 0; k < 60; ++k) {
    const auto inst = random_instance(random_shape(rng), rng);
    const auto res = buchberger_full(inst.generators, o);
    ASSERT_EQ(res.cofactors.size(), res.basis.size());
    for (std::size_t j = 0; j < res.basis.size(); ++j)
      EXPECT_EQ(apply_cofactors(res.cofactors[j], inst.generators), res.basis[j]);
  }
}

TEST(Completion, CoprimeCriterionOffGivesSameModule) {
  std::mt19937_64 rng(123);
  for (int k = 0; k < 40; ++k) {
    auto shape = random_shape(rng);
    shape.rank = 1;
    const auto inst = random_instance(shape, rng);
    CompletionOptions off;
    off.coprime_criterion = false;
    const Basis a = buchberger(inst.generators), b = buchberger(inst.generators, off);
    EXPECT_FALSE(check_groebner_certificate(a.elements()));
    for (const auto& g : b.elements()) EXPECT_TRUE(is_member(g, a));
  }
}

// Every oracle-enumerated member of a slice has a leading term divisible by
// some leading term of G, and reduces to zero.
TEST(Completion, LeadingTermSaturationAgainstOracle) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 60; ++k) {
    auto shape = random_shape(rng);
    shape.x_homogeneous = true;
    const auto inst = random_instance(shape, rng);
    const Basis G = buchberger(inst.generators);
    for (std::uint64_t d = 0; d <= 4; ++d) {
      const DegreeSlice s = build_slice(inst.generators, d);
      for (std::size_t r = 0; r < s.matrix.rows(); ++r) {
        // random A-combinations of slice rows
        std::vector<Term> terms;
        for (std::size_t rr = 0; rr < s.matrix.rows(); ++rr) {
          const Scalar c = random_scalar(inst.module->ring(), rng);
          for (std::size_t j = 0; j < s.basis.size(); ++j) terms.push_back({c * s.matrix.at(rr, j), s.basis[j]});
        }
        const Element f(inst.module, std::move(terms));
        if (f.is_zero()) continue;
        EXPECT_TRUE(is_member(f, G));
        bool divisible = false;
        for (const auto& g : G.elements())
          if (divides(g.lp(), f.lp()) && g.lc().valuation() <= f.lc().valuation()) divisible = true;
        EXPECT_TRUE(divisible);
      }
    }
  }
}

TEST(Minimalize, Examples) {
  const auto m = module(pi_ring(2, 2), {"x"});
  const Basis G(m, els(m, {"x + pi", "x^2"}), BasisStatus::Groebner);
  EXPECT_EQ(minimalize(G).elements(), els(m, {"x + pi"}));
  EXPECT_EQ(minimalize(G).status(), BasisStatus::MinimalGroebner);
  const Basis P(m, els(m, {"pi*x", "pi*x^2"}), BasisStatus::Groebner);
  EXPECT_EQ(minimalize(P).elements(), els(m, {"pi*x"}));
  EXPECT_EQ(minimalize(minimalize(P)), minimalize(P));
}

TEST(Homogenize, Examples) {
  const auto m3 = module(pi_ring(3, 2), {"x"});
  const Basis U(m3, els(m3, {"(1+pi)*x"}), BasisStatus::Groebner);
  EXPECT_EQ(homogenize_basis(U).elements(), els(m3, {"x"}));
  const Basis H(m3, els(m3, {"pi*x", "x^2"}), BasisStatus::Groebner);
  EXPECT_EQ(homogenize_basis(H).elements(), H.elements());
  const auto z = module(zp_ring(2, 2), {"x"});
  EXPECT_THROW(homogenize_basis(buchberger(els(z, {"x"}))), PreconditionError);
}

TEST(Homogenize, KeepsLeadingLayer) {
  const auto m = module(pi_ring(2, 3), {"x", "y"}, 1, "deglex pot");
  const Basis G(m, els(m, {"pi*x + pi^2*y", "pi^2*y"}), BasisStatus::Groebner);
  EXPECT_EQ(homogenize_basis(G).elements(), els(m, {"pi*x", "pi^2*y"}));
  const Basis H(m, els(m, {"pi*x + pi*y + pi^2*y"}), BasisStatus::Groebner);
  EXPECT_THROW(homogenize_basis(H), PreconditionError);
}

TEST(Certificate, DetectsIncompleteBasis) {
  const auto m = f2pi();
  const auto bad = check_groebner_certificate(els(m, {"x^2 + y", "x*y"}));
  ASSERT_TRUE(bad);
  EXPECT_FALSE(bad->remainder.is_zero());
  EXPECT_FALSE(check_groebner_certificate(buchberger(els(m, {"x^2 + y", "x*y"})).elements()));
  EXPECT_TRUE(check_groebner_certificate(els(m, {"pi*x + y"})));
}
