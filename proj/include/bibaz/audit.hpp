#pragma once

// Audit of printed specializations against the general bound.
//
// Each printed corollary is transcribed as an evaluator of (|a_2|^2, |a_3|)
// in exact rationals. At random rational parameter points inside the
// corollary's regime the transcription is compared, exactly, with the
// general formulas after substituting the regime's γ, k, δ and φ. Squares of
// the a_2 bounds are rational, so no comparison needs a tolerance.

#include "bibaz/bounds.hpp"
#include "bibaz/findings.hpp"
#include "bibaz/parallel.hpp"
#include "bibaz/random.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace bibaz {

enum class Family { Generic, Janowski, OrderZeta };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::Generic: return "generic";
    case Family::Janowski: return "janowski";
    case Family::OrderZeta: return "zeta";
  }
  return "?";
}

enum class AuditStatus { Match, Mismatch };

inline const char* to_string(AuditStatus s) { return s == AuditStatus::Match ? "MATCH" : "MISMATCH"; }

/// One random point of a corollary's regime.
struct AuditDraw {
  ClassParams<Rational> params;
  Family family = Family::Generic;
  Rational b1{1}, b2{0};     // Generic
  Rational a{1}, b{-1};      // Janowski
  Rational zeta{0};          // OrderZeta

  PhiSpec<Rational> phi() const {
    switch (family) {
      case Family::Generic: return phi::Generic<Rational>{b1, b2};
      case Family::Janowski: return phi::Janowski<Rational>{a, b};
      case Family::OrderZeta: break;
    }
    return phi::OrderZeta<Rational>{zeta};
  }

  std::string params_text() const {
    std::ostringstream os;
    os << params;
    return os.str();
  }
  std::string phi_text() const {
    std::ostringstream os;
    switch (family) {
      case Family::Generic: os << "generic{B1=" << b1 << ", B2=" << b2 << "}"; break;
      case Family::Janowski: os << "janowski{A=" << a << ", B=" << b << "}"; break;
      case Family::OrderZeta: os << "zeta{zeta=" << zeta << "}"; break;
    }
    return os.str();
  }
};

using MaybeRational = std::optional<Rational>;

struct PrintedCorollary {
  std::string id;
  std::string regime;
  Family family = Family::Generic;
  std::optional<int> gamma;  // fixed γ, or free when empty
  bool k_zero = false;
  bool delta_zero = false;
  // Empty optional: the printed form is undefined at the point (division by
  // zero, or a square root of a negative number).
  std::function<MaybeRational(const AuditDraw&)> a2_squared;
  std::function<MaybeRational(const AuditDraw&)> a3;
};

namespace audit_detail {

inline MaybeRational quot(const Rational& num, const Rational& den) {
  if (den == 0) return std::nullopt;
  return Rational(num / den);
}
inline Rational absr(const Rational& x) { return x < 0 ? Rational(-x) : x; }
inline Rational sq(const Rational& x) { return x * x; }
inline MaybeRational add(const MaybeRational& x, const MaybeRational& y) {
  if (!x || !y) return std::nullopt;
  return Rational(*x + *y);
}
inline MaybeRational sqm(const MaybeRational& x) {
  if (!x) return std::nullopt;
  return sq(*x);
}
/// (num)^2... helper for printed a_2 forms  c / sqrt(|den|)  →  c^2 / |den|.
inline MaybeRational over_abs(const Rational& num_sq, const Rational& den) { return quot(num_sq, absr(den)); }
/// sqrt(v) printed without absolute value: undefined for v < 0.
inline MaybeRational radicand(const MaybeRational& v) {
  if (!v || *v < 0) return std::nullopt;
  return v;
}

// The multipliers as each printed form writes them.
inline Rational full2(const AuditDraw& d) { return multiplier(d.params, 2); }
inline Rational full3(const AuditDraw& d) { return multiplier(d.params, 3); }
inline Rational cd2(const AuditDraw& d) { return c_delta(d.params.delta, 2); }
inline Rational cd3(const AuditDraw& d) { return c_delta(d.params.delta, 3); }
inline Rational up2(const AuditDraw& d) { return upsilon(d.params, 2); }
inline Rational up3(const AuditDraw& d) { return upsilon(d.params, 3); }

using Mult = Rational (*)(const AuditDraw&);

// γ = 0, generic φ:  B1 sqrt(B1)/sqrt|B1^2(2U3 − U2^2) − (B2−B1)U2^2|,  B1/(2U3) + (B1/U2)^2
inline PrintedCorollary generic_gamma0(std::string id, std::string regime, bool kz, bool dz, Mult m2, Mult m3) {
  return {std::move(id), std::move(regime), Family::Generic, 0, kz, dz,
          [=](const AuditDraw& d) {
            const Rational u2 = m2(d), u3 = m3(d);
            return over_abs(d.b1 * d.b1 * d.b1, sq(d.b1) * (2 * u3 - sq(u2)) - (d.b2 - d.b1) * sq(u2));
          },
          [=](const AuditDraw& d) { return add(quot(d.b1, 2 * m3(d)), sqm(quot(d.b1, m2(d)))); }};
}

// γ = 1, generic φ:  B1 sqrt(B1)/sqrt|3B1^2 U3 − 4(B2−B1)U2^2|,  B1/(3U3) + (B1/(2U2))^2
inline PrintedCorollary generic_gamma1(std::string id, std::string regime, bool kz, bool dz, Mult m2, Mult m3) {
  return {std::move(id), std::move(regime), Family::Generic, 1, kz, dz,
          [=](const AuditDraw& d) {
            const Rational u2 = m2(d), u3 = m3(d);
            return over_abs(d.b1 * d.b1 * d.b1, 3 * sq(d.b1) * u3 - 4 * (d.b2 - d.b1) * sq(u2));
          },
          [=](const AuditDraw& d) { return add(quot(d.b1, 3 * m3(d)), sqm(quot(d.b1, 2 * m2(d)))); }};
}

// γ = 0, Janowski:  (A−B)/sqrt|(A−B)(2U3 − U2^2) − (B+1)U2^2|,  (A−B)/(2U3) + ((A−B)/U2)^2
inline PrintedCorollary janowski_gamma0(std::string id, std::string regime, bool kz, bool dz, Mult m2, Mult m3) {
  return {std::move(id), std::move(regime), Family::Janowski, 0, kz, dz,
          [=](const AuditDraw& d) {
            const Rational u2 = m2(d), u3 = m3(d), w = d.a - d.b;
            return over_abs(sq(w), w * (2 * u3 - sq(u2)) - (d.b + 1) * sq(u2));
          },
          [=](const AuditDraw& d) {
            const Rational w = d.a - d.b;
            return add(quot(w, 2 * m3(d)), sqm(quot(w, m2(d))));
          }};
}

// γ = 1, Janowski:  (A−B)/sqrt|3(A−B)U3 − 4(B+1)U2^2|,  (A−B)/(3U3) + ((A−B)/(2U2))^2
inline PrintedCorollary janowski_gamma1(std::string id, std::string regime, bool kz, bool dz, Mult m2, Mult m3) {
  return {std::move(id), std::move(regime), Family::Janowski, 1, kz, dz,
          [=](const AuditDraw& d) {
            const Rational u2 = m2(d), u3 = m3(d), w = d.a - d.b;
            return over_abs(sq(w), 3 * w * u3 - 4 * (d.b + 1) * sq(u2));
          },
          [=](const AuditDraw& d) {
            const Rational w = d.a - d.b;
            return add(quot(w, 3 * m3(d)), sqm(quot(w, 2 * m2(d))));
          }};
}

// γ = 0, order ζ:  sqrt(2(1−ζ))/sqrt|2U3 − U2^2|,  (1−ζ)/U3 + (2(1−ζ)/U2)^2
inline PrintedCorollary zeta_gamma0(std::string id, std::string regime, bool kz, bool dz, Mult m2, Mult m3) {
  return {std::move(id), std::move(regime), Family::OrderZeta, 0, kz, dz,
          [=](const AuditDraw& d) { return over_abs(2 * (1 - d.zeta), 2 * m3(d) - sq(m2(d))); },
          [=](const AuditDraw& d) { return add(quot(1 - d.zeta, m3(d)), sqm(quot(2 * (1 - d.zeta), m2(d)))); }};
}

// γ = 1, order ζ:  sqrt(2(1−ζ)/(3U3)),  2(1−ζ)/(3U3) + ((1−ζ)/U2)^2
inline PrintedCorollary zeta_gamma1(std::string id, std::string regime, bool kz, bool dz, Mult m2, Mult m3) {
  return {std::move(id), std::move(regime), Family::OrderZeta, 1, kz, dz,
          [=](const AuditDraw& d) { return radicand(quot(2 * (1 - d.zeta), 3 * m3(d))); },
          [=](const AuditDraw& d) { return add(quot(2 * (1 - d.zeta), 3 * m3(d)), sqm(quot(1 - d.zeta, m2(d)))); }};
}

inline Rational composite_x_with(const AuditDraw& d, const Rational& u2, const Rational& u3) {
  const Rational& g = d.params.gamma;
  return 2 * (g + 2) * u3 + (g - 1) * (g + 2) * sq(u2);
}

}  // namespace audit_detail

/// Every printed corollary and specialized theorem, transcribed literally
/// except where noted.
inline const std::vector<PrintedCorollary>& printed_corollaries() {
  using namespace audit_detail;
  static const std::vector<PrintedCorollary> table = [] {
    std::vector<PrintedCorollary> t;
    t.push_back(generic_gamma0("Cor 2.2", "gamma=0", false, false, full2, full3));
    t.push_back(generic_gamma1("Cor 2.3", "gamma=1", false, false, full2, full3));
    t.push_back(generic_gamma0("Cor 2.4", "gamma=0, k=0", true, false, cd2, cd3));
    t.push_back(generic_gamma1("Cor 2.5", "gamma=1, k=0", true, false, cd2, cd3));
    t.push_back(generic_gamma0("Cor 2.6", "gamma=0, delta=0", false, true, up2, up3));
    // printed with an unbalanced parenthesis, "4(B2 - B1[U2]^2"; read as 4(B2 - B1)U2^2
    t.push_back(generic_gamma1("Cor 2.7", "gamma=1, delta=0", false, true, up2, up3));

    t.push_back({"Cor 2.8", "gamma=0, k=delta=0", Family::Generic, 0, true, true,
                 [](const AuditDraw& d) { return over_abs(d.b1 * d.b1 * d.b1, sq(d.b1) - (d.b2 - d.b1)); },
                 [](const AuditDraw& d) { return MaybeRational(d.b1 / 2 + sq(d.b1)); }});
    t.push_back({"Cor 2.9", "gamma=1, k=delta=0", Family::Generic, 1, true, true,
                 [](const AuditDraw& d) { return over_abs(d.b1 * d.b1 * d.b1, 3 * sq(d.b1) - 4 * (d.b2 - d.b1)); },
                 [](const AuditDraw& d) { return MaybeRational(d.b1 / 3 + sq(d.b1 / 2)); }});

    // sqrt(2)(A−B)/sqrt|(A−B)X − 2(B+1)(γ+1)^2 U2^2|,  (A−B)/((γ+2)U3) + ((A−B)/((γ+1)U2))^2
    t.push_back({"Thm 3.1", "janowski, gamma free", Family::Janowski, std::nullopt, false, false,
                 [](const AuditDraw& d) {
                   const Rational u2 = full2(d), u3 = full3(d), w = d.a - d.b, g1 = d.params.gamma + 1;
                   return over_abs(2 * sq(w), w * composite_x_with(d, u2, u3) - 2 * (d.b + 1) * sq(g1) * sq(u2));
                 },
                 [](const AuditDraw& d) {
                   const Rational w = d.a - d.b;
                   return add(quot(w, (d.params.gamma + 2) * full3(d)), sqm(quot(w, (d.params.gamma + 1) * full2(d))));
                 }});
    t.push_back(janowski_gamma0("Cor 3.2", "janowski, gamma=0", false, false, full2, full3));
    t.push_back(janowski_gamma1("Cor 3.3", "janowski, gamma=1", false, false, full2, full3));
    t.push_back(janowski_gamma0("Cor 3.4", "janowski, gamma=0, k=0", true, false, cd2, cd3));
    t.push_back(janowski_gamma1("Cor 3.5", "janowski, gamma=1, k=0", true, false, cd2, cd3));
    t.push_back(janowski_gamma0("Cor 3.6", "janowski, gamma=0, delta=0", false, true, up2, up3));
    t.push_back(janowski_gamma1("Cor 3.7", "janowski, gamma=1, delta=0", false, true, up2, up3));
    t.push_back({"Cor 3.8", "janowski, gamma=0, k=delta=0", Family::Janowski, 0, true, true,
                 [](const AuditDraw& d) {
                   const Rational w = d.a - d.b;
                   return over_abs(sq(w), w - (d.b + 1));
                 },
                 [](const AuditDraw& d) {
                   const Rational w = d.a - d.b;
                   return MaybeRational(w / 2 + sq(w));
                 }});
    t.push_back({"Cor 3.9", "janowski, gamma=1, k=delta=0", Family::Janowski, 1, true, true,
                 [](const AuditDraw& d) {
                   const Rational w = d.a - d.b;
                   return over_abs(sq(w), 3 * sq(w) - 4 * (d.b + 1));
                 },
                 [](const AuditDraw& d) {
                   const Rational w = d.a - d.b;
                   return MaybeRational(w / 3 + sq(w / 2));
                 }});

    // 2 sqrt(1−ζ)/sqrt|X|,  2(1−ζ)/((γ+2)U3) + (2(1−ζ)/((γ+1)U2))^2
    t.push_back({"Thm 3.2", "zeta, gamma free", Family::OrderZeta, std::nullopt, false, false,
                 [](const AuditDraw& d) { return over_abs(4 * (1 - d.zeta), composite_x_with(d, full2(d), full3(d))); },
                 [](const AuditDraw& d) {
                   const Rational c = 2 * (1 - d.zeta);
                   return add(quot(c, (d.params.gamma + 2) * full3(d)), sqm(quot(c, (d.params.gamma + 1) * full2(d))));
                 }});
    t.push_back(zeta_gamma0("Cor 3.11", "zeta, gamma=0", false, false, full2, full3));
    t.push_back(zeta_gamma1("Cor 3.12", "zeta, gamma=1", false, false, full2, full3));
    // numerator printed as 2(1−ζ) rather than sqrt(2(1−ζ))
    t.push_back({"Cor 3.13", "zeta, gamma=0, k=0", Family::OrderZeta, 0, true, false,
                 [](const AuditDraw& d) { return over_abs(sq(2 * (1 - d.zeta)), 2 * cd3(d) - sq(cd2(d))); },
                 [](const AuditDraw& d) { return add(quot(1 - d.zeta, cd3(d)), sqm(quot(2 * (1 - d.zeta), cd2(d)))); }});
    t.push_back(zeta_gamma1("Cor 3.14", "zeta, gamma=1, k=0", true, false, cd2, cd3));
    t.push_back(zeta_gamma0("Cor 3.15", "zeta, gamma=0, delta=0", false, true, up2, up3));
    t.push_back(zeta_gamma1("Cor 3.16", "zeta, gamma=1, delta=0", false, true, up2, up3));
    t.push_back({"Cor 3.17", "zeta, gamma=0, k=delta=0", Family::OrderZeta, 0, true, true,
                 [](const AuditDraw& d) { return MaybeRational(2 * (1 - d.zeta)); },
                 [](const AuditDraw& d) { return MaybeRational((1 - d.zeta) + 4 * sq(1 - d.zeta)); }});
    t.push_back({"Cor 3.18", "zeta, gamma=1, k=delta=0", Family::OrderZeta, 1, true, true,
                 [](const AuditDraw& d) { return MaybeRational(2 * (1 - d.zeta) / 3); },
                 [](const AuditDraw& d) { return MaybeRational(2 * (1 - d.zeta) / 3 + sq(1 - d.zeta)); }});
    return t;
  }();
  return table;
}

/// Printed and derived values at one point. a_2 values are the bounds
/// themselves (square roots of the exactly compared squares).
struct AuditWitness {
  std::string params;
  std::string phi;
  std::optional<double> printed_a2;  // empty: printed form undefined here
  double derived_a2 = 0;
  std::optional<double> printed_a3;
  double derived_a3 = 0;
  bool a2_match = true;
  bool a3_match = true;
};

struct AuditEntry {
  std::string corollary_id;
  std::string regime;
  AuditStatus status = AuditStatus::Match;
  AuditStatus a2_status = AuditStatus::Match;
  AuditStatus a3_status = AuditStatus::Match;
  int samples = 0;
  int resampled = 0;  // draws rejected because the general formula was undefined there
  int a2_mismatches = 0;
  int a3_mismatches = 0;
  /// First mismatching point, or the first sampled point when everything matched.
  AuditWitness witness;
};

/// Draws a point of the corollary's regime. Denominators stay small so the
/// exact comparisons remain cheap.
inline AuditDraw draw_point(const PrintedCorollary& c, Sampler& rng) {
  AuditDraw d;
  auto unit_interval = [&] {  // (0, 1]
    const auto q = rng.between(1, 8);
    return make_rational(rng.between(1, q), q);
  };
  d.params.k = c.k_zero ? 0 : static_cast<int>(rng.between(0, 3));
  d.params.alpha = unit_interval();
  d.params.beta = unit_interval();
  d.params.lambda = rng.rational(Rational(0), Rational(2), 6);
  d.params.delta = c.delta_zero ? Rational(0) : Rational(rng.between(0, 3));
  d.params.gamma = c.gamma ? Rational(*c.gamma) : rng.rational(Rational(0), Rational(3), 6);
  d.family = c.family;
  switch (c.family) {
    case Family::Generic: {
      const auto q = rng.between(1, 6);
      d.b1 = make_rational(rng.between(1, 4 * q), q);
      d.b2 = rng.rational(Rational(-4), Rational(4), 6);
      break;
    }
    case Family::Janowski: {
      Rational x, y;
      do {
        x = rng.rational(Rational(-1), Rational(1), 8);
        y = rng.rational(Rational(-1), Rational(1), 8);
      } while (x == y);
      d.a = x > y ? x : y;
      d.b = x > y ? y : x;
      break;
    }
    case Family::OrderZeta: {
      const auto q = rng.between(1, 8);
      d.zeta = make_rational(rng.between(0, q - 1), q);
      break;
    }
  }
  return d;
}

inline std::optional<double> sqrt_of(const MaybeRational& sq) {
  if (!sq) return std::nullopt;
  return std::sqrt(to_double(*sq));
}

/// Audits one printed corollary at `samples` non-degenerate points.
inline AuditEntry audit_corollary(const PrintedCorollary& c, int samples, std::uint64_t seed, std::uint64_t stream) {
  if (samples < 1) throw InvalidParameter("audit needs samples >= 1");
  Sampler rng(seed, stream);
  AuditEntry e;
  e.corollary_id = c.id;
  e.regime = c.regime;
  bool have_witness = false;
  bool have_failure = false;
  while (e.samples < samples) {
    const AuditDraw d = draw_point(c, rng);
    Rational derived_a2sq, derived_a3;
    try {
      const auto coeffs = phi_coefficients(d.phi());
      derived_a2sq = bound_a2_squared(d.params, coeffs.b1, coeffs.b2);
      derived_a3 = bound_a3(d.params, coeffs.b1, coeffs.b2);
    } catch (const DegenerateOperator&) {
      ++e.resampled;
      continue;
    } catch (const ZeroDenominator&) {
      ++e.resampled;
      continue;
    }
    ++e.samples;
    const MaybeRational printed_a2sq = c.a2_squared(d);
    const MaybeRational printed_a3 = c.a3(d);
    AuditWitness w;
    w.params = d.params_text();
    w.phi = d.phi_text();
    w.printed_a2 = sqrt_of(printed_a2sq);
    w.derived_a2 = std::sqrt(to_double(derived_a2sq));
    w.printed_a3 = printed_a3 ? std::optional<double>(to_double(*printed_a3)) : std::nullopt;
    w.derived_a3 = to_double(derived_a3);
    w.a2_match = printed_a2sq && *printed_a2sq == derived_a2sq;
    w.a3_match = printed_a3 && *printed_a3 == derived_a3;
    if (!w.a2_match) ++e.a2_mismatches;
    if (!w.a3_match) ++e.a3_mismatches;
    const bool failed = !w.a2_match || !w.a3_match;
    if (!have_witness || (failed && !have_failure)) {
      e.witness = w;
      have_witness = true;
      have_failure = failed;
    }
  }
  e.a2_status = e.a2_mismatches ? AuditStatus::Mismatch : AuditStatus::Match;
  e.a3_status = e.a3_mismatches ? AuditStatus::Mismatch : AuditStatus::Match;
  e.status = (e.a2_mismatches || e.a3_mismatches) ? AuditStatus::Mismatch : AuditStatus::Match;
  return e;
}

/// Audits every printed corollary; entry i draws from its own seeded stream,
/// so results do not depend on evaluation order.
inline std::vector<AuditEntry> audit_corollaries(int samples, std::uint64_t seed) {
  const auto& table = printed_corollaries();
  return parallel_map<AuditEntry>(table.size(), [&](std::size_t i) { return audit_corollary(table[i], samples, seed, i); });
}

inline Findings audit_findings(const std::vector<AuditEntry>& entries) {
  Findings out;
  for (const auto& e : entries) {
    if (e.status == AuditStatus::Match) continue;
    auto fmt = [](const std::optional<double>& v) {
      if (!v) return std::string("undefined");
      std::ostringstream os;
      os.precision(17);
      os << *v;
      return os.str();
    };
    std::ostringstream derived;
    derived.precision(17);
    derived << "a2=" << e.witness.derived_a2 << ", a3=" << e.witness.derived_a3;
    out.push_back({"corollary_mismatch", e.corollary_id + " (" + e.regime + ")",
                   "a2=" + fmt(e.witness.printed_a2) + ", a3=" + fmt(e.witness.printed_a3), derived.str(),
                   e.witness.params + " " + e.witness.phi});
  }
  return out;
}

}  // namespace bibaz
