#include "bibaz/audit.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace bibaz;

namespace {

const std::vector<AuditEntry>& entries() {
  static const auto e = audit_corollaries(200, 1);
  return e;
}

const AuditEntry& entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.corollary_id == id) return e;
  throw std::out_of_range(id);
}

const PrintedCorollary& printed(const std::string& id) {
  for (const auto& c : printed_corollaries())
    if (c.id == id) return c;
  throw std::out_of_range(id);
}

}  // namespace

TEST(AuditTable, CoversEveryPrintedSpecialization) {
  std::set<std::string> ids;
  for (const auto& c : printed_corollaries()) ids.insert(c.id);
  EXPECT_EQ(ids.size(), printed_corollaries().size());
  for (int i = 2; i <= 9; ++i) EXPECT_TRUE(ids.count("Cor 2." + std::to_string(i))) << i;
  for (int i = 2; i <= 18; ++i)
    if (i != 10) EXPECT_TRUE(ids.count("Cor 3." + std::to_string(i))) << i;
  EXPECT_TRUE(ids.count("Thm 3.1"));
  EXPECT_TRUE(ids.count("Thm 3.2"));
  EXPECT_EQ(ids.size(), 26u);
}

TEST(AuditResults, GeneralSpecializationsMatch) {
  for (int i = 2; i <= 9; ++i) {
    const auto& e = entry("Cor 2." + std::to_string(i));
    EXPECT_EQ(e.status, AuditStatus::Match) << e.corollary_id;
    EXPECT_EQ(e.samples, 200);
  }
  EXPECT_EQ(entry("Thm 3.2").status, AuditStatus::Match);
}

TEST(AuditResults, JanowskiTheoremSignMismatchCarriesWitness) {
  const auto& e = entry("Thm 3.1");
  EXPECT_EQ(e.status, AuditStatus::Mismatch);
  EXPECT_EQ(e.a2_status, AuditStatus::Mismatch);
  EXPECT_EQ(e.a3_status, AuditStatus::Match);
  EXPECT_FALSE(e.witness.a2_match);
  EXPECT_FALSE(e.witness.params.empty());
  EXPECT_NE(e.witness.phi.find("janowski"), std::string::npos);
  if (e.witness.printed_a2) EXPECT_NE(*e.witness.printed_a2, e.witness.derived_a2);
  // B = −1 removes the disputed term, so those points agree
  EXPECT_LT(e.a2_mismatches, e.samples);
}

TEST(AuditResults, SignMismatchVanishesAtBMinusOne) {
  const auto& c = printed("Thm 3.1");
  AuditDraw d;
  d.params = {1, Rational(1, 2), Rational(3, 4), Rational(1), Rational(1), Rational(1, 2)};
  d.family = Family::Janowski;
  d.a = Rational(1, 3);
  d.b = Rational(-1);
  const auto coeffs = phi_coefficients(d.phi());
  EXPECT_EQ(*c.a2_squared(d), bound_a2_squared(d.params, coeffs.b1, coeffs.b2));
  d.b = Rational(0);
  const auto c2 = phi_coefficients(d.phi());
  EXPECT_NE(c.a2_squared(d), MaybeRational(bound_a2_squared(d.params, c2.b1, c2.b2)));
}

TEST(AuditResults, PrintedFormUndefinedAtUnitATrivialB) {
  // k = δ = γ = 0, A = 1, B = 0: printed |(A−B) − (B+1)| is zero
  const auto& c = printed("Cor 3.8");
  AuditDraw d;
  d.family = Family::Janowski;
  d.a = Rational(1);
  d.b = Rational(0);
  EXPECT_FALSE(c.a2_squared(d).has_value());
  EXPECT_EQ(bound_a2_squared(d.params, Rational(1), Rational(0)), Rational(1, 2));
}

TEST(AuditResults, ZetaEntries) {
  for (const char* id : {"Cor 3.11", "Cor 3.14", "Cor 3.15", "Cor 3.17", "Cor 3.18"})
    EXPECT_EQ(entry(id).status, AuditStatus::Match) << id;
  EXPECT_EQ(entry("Cor 3.13").a2_status, AuditStatus::Mismatch);
}

TEST(AuditResults, UnsignedRootMismatchOnlyWithNegativeMultiplier) {
  // a printed sqrt of X without absolute value: negative u3 makes it undefined
  const auto& c = printed("Cor 3.12");
  AuditDraw d;
  d.family = Family::OrderZeta;
  d.zeta = Rational(1, 2);
  d.params = {1, Rational(1, 2), Rational(1, 2), Rational(1), Rational(0), Rational(1)};
  d.params.alpha = Rational(1, 4);
  d.params.beta = Rational(1, 4);
  ASSERT_LT(multiplier(d.params, 3), 0);
  EXPECT_FALSE(c.a2_squared(d).has_value());
  d.params.alpha = Rational(3, 4);
  d.params.beta = Rational(3, 4);
  const auto coeffs = phi_coefficients(d.phi());
  EXPECT_EQ(*c.a2_squared(d), bound_a2_squared(d.params, coeffs.b1, coeffs.b2));
}

TEST(AuditComparison, IsExact) {
  // a transcription off by 10^-30 must be caught
  PrintedCorollary off = printed("Cor 2.2");
  const auto base = off.a2_squared;
  off.a2_squared = [base](const AuditDraw& d) -> MaybeRational {
    auto v = base(d);
    if (v) *v += Rational(1) / Rational(BigInt(10) * BigInt("1000000000000000000000000000000"));
    return v;
  };
  const auto e = audit_corollary(off, 20, 1, 0);
  EXPECT_EQ(e.status, AuditStatus::Mismatch);
  EXPECT_EQ(e.a2_mismatches, 20);
}

TEST(AuditDeterminism, SameSeedSameEntries) {
  const auto a = audit_corollaries(30, 9), b = audit_corollaries(30, 9);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].witness.params, b[i].witness.params);
    EXPECT_EQ(a[i].a2_mismatches, b[i].a2_mismatches);
    EXPECT_EQ(a[i].resampled, b[i].resampled);
  }
}

TEST(AuditDeterminism, SingleSampleStillWitnessesEveryEntry) {
  const auto e = audit_corollaries(1, 1);
  EXPECT_EQ(e.size(), 26u);
  for (const auto& x : e) {
    EXPECT_EQ(x.samples, 1);
    EXPECT_FALSE(x.witness.params.empty());
  }
  EXPECT_THROW(audit_corollaries(0, 1), InvalidParameter);
}

TEST(AuditFindings, OnePerMismatchedEntry) {
  const auto f = audit_findings(entries());
  std::size_t mismatched = 0;
  for (const auto& e : entries()) mismatched += e.status == AuditStatus::Mismatch;
  EXPECT_EQ(f.size(), mismatched);
  for (const auto& x : f) EXPECT_FALSE(x.witness.empty());
}
