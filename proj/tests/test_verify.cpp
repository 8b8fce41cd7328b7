#include "support.hpp"

#include "bibaz/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace bibaz;
using support::C;
using support::cr;
using support::S;

namespace {

using R = Rational;
using T = CaratheodoryTuple<R>;

const ClassParams<R> identity{};

bool has_finding(const Findings& f, const std::string& id) {
  return std::any_of(f.begin(), f.end(), [&](const Finding& x) { return x.id == id; });
}

}  // namespace

TEST(SchwarzMap, Examples) {
  EXPECT_EQ(schwarz_from_caratheodory(S::constant(C(1), 2)), S::zero(2));
  EXPECT_EQ(schwarz_from_caratheodory(S({C(1), cr(2), cr(2)})), S({C(0), C(1), C(0)}));
  Sampler rng(51, 0);
  for (int i = 0; i < 50; ++i) {
    const C p1 = rng.rational_disc(R(2), 5), p2 = rng.rational_disc(R(2), 5);
    const S p({C(1), p1, p2});
    const S u = schwarz_from_caratheodory(p);
    EXPECT_EQ(u, S({C(0), cr(1, 2) * p1, cr(1, 2) * (p2 - cr(1, 2) * p1 * p1)}));
    EXPECT_EQ(support::poly(u), oracle::divide(support::poly(p - S::constant(C(1), 2)), support::poly(p + S::constant(C(1), 2))));
    EXPECT_EQ(caratheodory_from_schwarz(u), p);
  }
}

TEST(CaratheodoryTupleTest, Admissibility) {
  EXPECT_TRUE((T{cr(2), cr(2), cr(-2), cr(-2)}.admissible()));
  EXPECT_FALSE((T{cr(2), cr(2), cr(2), cr(2)}.admissible()));
  EXPECT_FALSE((T{cr(0), cr(3), cr(0), cr(0)}.admissible()));
  EXPECT_FALSE((T{cr(2), cr(-2), cr(-2), cr(2)}.strictly_admissible()));
  EXPECT_TRUE((T{cr(2), cr(2), cr(-2), cr(2)}.strictly_admissible()));
  EXPECT_TRUE((T{cr(0), cr(2), cr(0), cr(-2)}.strictly_admissible()));
}

TEST(ProofRelationsTest, ZeroTuple) {
  const auto r = proof_relations(identity, R(2), R(2), T{});
  EXPECT_TRUE(r.a2_linear.is_zero());
  EXPECT_TRUE(r.a2sq_closed.is_zero());
  EXPECT_TRUE(r.a3_closed.is_zero());
  EXPECT_TRUE(r.residual_square.is_zero());
  EXPECT_TRUE(r.residual_sum.is_zero());
}

TEST(ProofRelationsTest, CornerValuesReachTheBounds) {
  const auto r = proof_relations(identity, R(2), R(2), T{cr(2), cr(2), cr(-2), cr(2)});
  EXPECT_EQ(r.a2sq_closed, cr(2));
  EXPECT_EQ(R(r.a2sq_closed.re), bound_a2_squared(identity, R(2), R(2)));
  const auto s = proof_relations(identity, R(2), R(2), T{cr(2), cr(2), cr(-2), cr(-2)});
  EXPECT_EQ(s.a3_closed, cr(5));
  EXPECT_EQ(R(s.a3_closed.re), bound_a3(identity, R(2), R(2)));
}

TEST(ProofRelationsTest, ZeroDenominatorThrows) {
  EXPECT_THROW(proof_relations(identity, R(1), R(2), T{cr(1), cr(1), cr(-1), cr(1)}), ZeroDenominator);
}

TEST(ExpansionCheck, Examples) {
  EXPECT_EQ(expansion_check(identity, R(2), R(2), T{}), R(0));
  EXPECT_EQ(expansion_check(identity, R(2), R(2), T{cr(1), cr(1), cr(-1), cr(0)}), R(0));
  const ClassParams<R> p{1, R(1), R(1), R(1), R(1), R(2)};
  Sampler rng(52, 0);
  for (int i = 0; i < 20; ++i) {
    const R b1 = rng.rational(R(1, 3), R(3), 3), b2 = rng.rational(R(-3), R(3), 3);
    const C p1 = rng.rational_disc(R(2), 4);
    const T t{p1, rng.rational_disc(R(2), 4), -p1, rng.rational_disc(R(2), 4)};
    EXPECT_EQ(expansion_check(p, b1, b2, t), R(0));
    EXPECT_EQ(inverse_expansion_check(p, b1, b2, t), R(0));
  }
}

TEST(ExpansionCheck, InverseSideExamples) {
  EXPECT_EQ(inverse_expansion_check(identity, R(2), R(2), T{}), R(0));
  const T t{cr(1, 3), cr(-1, 2), cr(-1, 3), C(R(1, 5), R(-3, 4))};
  EXPECT_EQ(inverse_expansion_check(identity, R(3, 2), R(-1, 3), t), R(0));
  ClassParams<R> g1 = identity;
  g1.gamma = R(1);
  g1.k = 2;
  g1.alpha = R(1, 2);
  g1.beta = R(3, 4);
  g1.delta = R(2);
  EXPECT_EQ(inverse_expansion_check(g1, R(3, 2), R(-1, 3), t), R(0));
}

TEST(ExpansionCheck, InjectedSignFaultIsDetected) {
  const T t{cr(1), cr(1), cr(-1), cr(1, 2)};
  EXPECT_GT(expansion_check(identity, R(2), R(1), t, VerifyOptions{true}), R(0));
  EXPECT_GT(inverse_expansion_check(identity, R(2), R(1), t, VerifyOptions{true}), R(0));
  // p1 = 0 leaves a2 = 0, so a flipped sign is invisible there
  EXPECT_EQ(expansion_check(identity, R(2), R(1), T{}, VerifyOptions{true}), R(0));
}

TEST(RelationConsistency, HoldsAtRandomRationalPoints) {
  Sampler rng(53, 0);
  int nonzero_gap = 0;
  for (int i = 0; i < 100; ++i) {
    ClassParams<R> p{static_cast<int>(rng.between(0, 3)), make_rational(rng.between(1, 4), 4), R(1),
                     rng.rational(R(1, 4), R(2), 4), R(rng.between(0, 2)), rng.rational(R(0), R(3), 3)};
    const R b1 = rng.rational(R(1, 4), R(3), 4), b2 = rng.rational(R(-3), R(3), 4);
    const auto r = relation_consistency(p, b1, b2, rng.rational_disc(R(2), 4), rng.rational_disc(R(2), 4));
    EXPECT_TRUE(r.all_zero()) << p;
    EXPECT_EQ(r.tuple.h1, -r.tuple.p1);
    nonzero_gap += !r.unsquared_gap.is_zero();
  }
  EXPECT_GT(nonzero_gap, 0);
}

TEST(RelationConsistency, UnsquaredFormAgreesOnlyAtGammaZero) {
  const auto r = relation_consistency(identity, R(2), R(3), cr(1), cr(1, 2));
  EXPECT_TRUE(r.unsquared_gap.is_zero());
  ClassParams<R> p = identity;
  p.gamma = R(1);
  EXPECT_FALSE(relation_consistency(p, R(2), R(3), cr(1), cr(1, 2)).unsquared_gap.is_zero());
}

TEST(VerifySuite, PassesWithZeroResiduals) {
  const auto r = run_verify(40, 1);
  EXPECT_TRUE(r.passed());
  for (const auto& s : r.suites) {
    EXPECT_GT(s.checked, 0) << s.name;
    EXPECT_EQ(s.failures, 0) << s.name;
  }
  EXPECT_EQ(r.suite("reversion").checked, 40);
}

TEST(VerifySuite, RecordsPrintDefectFindings) {
  const auto r = run_verify(20, 1);
  for (const char* id : {"reversion_w4_coefficient", "a3_display_unsquared", "order_zeta_phi_missing_z",
                         "order_zeta_phi_extra_one", "janowski_phi_prose", "schwarz_expansion_missing_plus"})
    EXPECT_TRUE(has_finding(r.findings, id)) << id;
  for (const auto& f : r.findings) {
    EXPECT_FALSE(f.witness.empty()) << f.id;
    EXPECT_NE(f.printed, f.derived) << f.id;
  }
}

TEST(VerifySuite, InjectedFaultFailsWithWitness) {
  const auto r = run_verify(5, 1, VerifyOptions{true});
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures.front().suite, "proof_chain");
  EXPECT_NE(r.failures.front().input.find("B1="), std::string::npos);
}

TEST(VerifySuite, Deterministic) {
  const auto a = run_verify(5, 7), b = run_verify(5, 7);
  ASSERT_EQ(a.findings.size(), b.findings.size());
  for (std::size_t i = 0; i < a.findings.size(); ++i) EXPECT_EQ(a.findings[i].witness, b.findings[i].witness);
  EXPECT_THROW(run_verify(0, 1), InvalidParameter);
}
