#include "bibaz/io.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bibaz;

namespace {

GridSpec zeta_grid() {
  GridSpec g;
  g.family = PhiFamily::OrderZeta;
  g.phi_first = parse_range("0:1/2:2");
  g.gamma = parse_range("1");
  return g;
}

}  // namespace

TEST(ParseRange, SingleAndStepped) {
  const auto r = parse_range("1/4");
  EXPECT_EQ(r.steps, 1);
  EXPECT_EQ(r.start, Rational(1, 4));
  const auto s = parse_range("0:1:5");
  ASSERT_EQ(s.exact_values().size(), 5u);
  EXPECT_EQ(s.exact_values()[1], Rational(1, 4));
  EXPECT_EQ(s.exact_values().back(), Rational(1));
  EXPECT_EQ(parse_range("2:2:1").exact_values(), std::vector<Rational>{Rational(2)});
}

TEST(ParseRange, RejectsMalformedInput) {
  for (const char* bad : {"", "x", "0:1", "0:1:0", "0:1:-2", "0:1:1", "0:1:2:3", "0:1:2.5", "1/0"})
    EXPECT_ANY_THROW(parse_range(bad)) << bad;
}

TEST(Formatting, FixedSixAndShortest) {
  EXPECT_EQ(fixed6(std::sqrt(2.0)), "1.414214");
  EXPECT_EQ(fixed6(-1e-9), "0.000000");
  EXPECT_EQ(fixed6(5), "5.000000");
  Sampler rng(61, 0);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-1e6, 1e6) / std::pow(10.0, static_cast<double>(rng.between(0, 12)));
    EXPECT_EQ(parse_double(shortest(x)), x);
  }
  EXPECT_EQ(shortest(0.5), "0.5");
  EXPECT_THROW(parse_double("1.5x"), InvalidParameter);
}

TEST(Csv, EscapeAndParseRoundTrip) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  const std::vector<std::string> cells = {"x", "", "a,b", "q\"q", "l1\nl2", "B1=1;B2=0"};
  const auto t = parse_csv(csv_line({"c1", "c2", "c3", "c4", "c5", "c6"}) + csv_line(cells) + csv_line(cells));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0], cells);
  EXPECT_EQ(t.column("c4"), 3u);
  EXPECT_THROW(t.column("missing"), InvalidParameter);
  EXPECT_THROW(parse_csv("a\n\"open"), InvalidParameter);
}

TEST(PhiParams, TextRoundTrip) {
  for (const PhiSpec<double>& s : {PhiSpec<double>(phi::Generic<double>{1.5, -0.25}), PhiSpec<double>(phi::Janowski<double>{0.75, -1}),
                                   PhiSpec<double>(phi::OrderZeta<double>{1.0 / 3})}) {
    const auto back = parse_phi(family_name(s), phi_params_text(s));
    const auto a = phi_coefficients(s), b = phi_coefficients(back);
    EXPECT_EQ(a.b1, b.b1);
    EXPECT_EQ(a.b2, b.b2);
  }
  EXPECT_ANY_THROW(parse_phi("generic", "B1=1"));
  EXPECT_ANY_THROW(parse_phi("other", "zeta=0"));
}

TEST(Grid, SizeIsProductOfStepCounts) {
  GridSpec g;
  g.k = parse_range("0:2:3");
  g.alpha = parse_range("1/2:1:2");
  g.gamma = parse_range("0:2:5");
  g.phi_first = parse_range("1:2:2");
  g.phi_second = parse_range("-1:1:3");
  EXPECT_EQ(g.size(), 3u * 2 * 5 * 2 * 3);
  EXPECT_EQ(expand_grid(g).size(), g.size());
  g.family = PhiFamily::OrderZeta;
  g.phi_first = parse_range("0:1/2:4");
  EXPECT_EQ(g.size(), 3u * 2 * 5 * 4);
  EXPECT_EQ(evaluate_grid(g).size(), g.size());
}

TEST(Grid, LexicographicOrder) {
  GridSpec g;
  g.k = parse_range("0:1:2");
  g.gamma = parse_range("0:1:2");
  g.phi_first = parse_range("1:2:2");
  const auto pts = expand_grid(g);
  ASSERT_EQ(pts.size(), 8u);
  EXPECT_EQ(pts[0].params.k, 0);
  EXPECT_EQ(pts[3].params.k, 0);
  EXPECT_EQ(pts[4].params.k, 1);
  EXPECT_EQ(pts[1].params.gamma, 0);
  EXPECT_EQ(pts[2].params.gamma, 1);
  EXPECT_EQ(phi_coefficients(pts[0].phi).b1, 1);
  EXPECT_EQ(phi_coefficients(pts[1].phi).b1, 2);
}

TEST(Grid, InvalidPointsAndNonIntegerK) {
  GridSpec g;
  g.alpha = parse_range("0:1:3");
  EXPECT_THROW(expand_grid(g), InvalidParameter);
  GridSpec h;
  h.k = parse_range("0:1:3");
  EXPECT_THROW(expand_grid(h), InvalidParameter);
}

TEST(Grid, CountsSumToRows) {
  GridSpec g;
  g.k = parse_range("0:1:2");
  g.lambda = parse_range("0:1:2");
  g.phi_first = parse_range("1:2:2");
  g.phi_second = parse_range("1:2:2");
  const auto rows = evaluate_grid(g);
  const auto c = count_rows(rows);
  EXPECT_EQ(c.total(), rows.size());
  // four rows with k = 1, λ = 0, plus (B1, B2) = (1, 2) for both k = 0 rows, where D = 0
  EXPECT_EQ(c.degenerate, 6u);
  EXPECT_EQ(c.evaluated, 10u);
}

TEST(Grid, MatchesSinglePointEvaluation) {
  const auto rows = evaluate_grid(zeta_grid());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_DOUBLE_EQ(*rows[0].result.a2_bound, std::sqrt(2.0 / 3));
  EXPECT_DOUBLE_EQ(*rows[1].result.a2_bound, std::sqrt(1.0 / 3));
  for (const auto& r : rows) {
    const auto single = evaluate_bounds(r.point.params, r.point.phi);
    EXPECT_EQ(single.a2_bound, r.result.a2_bound);
    EXPECT_EQ(single.a3_bound, r.result.a3_bound);
  }
}

TEST(CsvRows, ReparseAndReevaluate) {
  GridSpec g;
  g.k = parse_range("0:2:3");
  g.alpha = parse_range("1/3:1:3");
  g.lambda = parse_range("1/2:2:2");
  g.delta = parse_range("0:2:3");
  g.gamma = parse_range("0:3/2:4");
  g.family = PhiFamily::Janowski;
  g.phi_first = parse_range("1/2:1:2");
  g.phi_second = parse_range("-1:0:3");
  const auto rows = evaluate_grid(g);
  const auto t = parse_csv(rows_csv(rows));
  EXPECT_EQ(t.header, table_columns());
  ASSERT_EQ(t.rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& cells = t.rows[i];
    const auto r = evaluate_bounds(point_from_csv(t, cells).params, point_from_csv(t, cells).phi);
    const auto check = [&](const char* col, const std::optional<double>& v) {
      const auto& s = cells[t.column(col)];
      if (!v) {
        EXPECT_TRUE(s.empty());
        return;
      }
      EXPECT_LE(std::fabs(parse_double(s) - *v), 1e-12 * std::max(1.0, std::fabs(*v))) << col << " row " << i;
    };
    check("a2_bound", r.a2_bound);
    check("a3_bound", r.a3_bound);
    check("denom", r.denom_value);
  }
}

TEST(CsvRows, DegenerateRowHasBlankBoundsAndJoinedFlags) {
  const GridRow row = evaluate_point({{1, 1, 1, 0, 0, 0}, phi::Generic<double>{1, 1}});
  const auto cells = row_cells(row);
  const auto& cols = table_columns();
  ASSERT_EQ(cells.size(), cols.size());
  EXPECT_TRUE(cells[10].empty());
  EXPECT_TRUE(cells[11].empty());
  EXPECT_EQ(cells[13], "degenerate_operator;zero_denominator");
}

TEST(Json, StableKeyOrderAndNullBlanks) {
  RunReport meta;
  meta.command = "bibaz grid";
  GridRow ok = evaluate_point({{}, phi::OrderZeta<double>{0.5}});
  GridRow bad = evaluate_point({{1, 1, 1, 0, 0, 0}, phi::Generic<double>{1, 1}});
  meta.counts = count_rows({ok, bad});
  const Json j = rows_json(meta, {ok, bad});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"meta", "rows"}));
  keys.clear();
  for (const auto& [k, v] : j["meta"].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "engine_version", "counts", "findings"}));
  EXPECT_EQ(j["meta"]["counts"]["total"], 2);
  keys.clear();
  for (const auto& [k, v] : j["rows"][0].items()) keys.push_back(k);
  EXPECT_EQ(keys, table_columns());
  EXPECT_TRUE(j["rows"][1]["a2_bound"].is_null());
  EXPECT_EQ(j["rows"][0]["a2_bound"].get<double>(), *ok.result.a2_bound);
  EXPECT_EQ(dump(j), dump(rows_json(meta, {ok, bad})));
}

TEST(Text, BoundsUsesSixDecimals) {
  const auto text = bounds_text(evaluate_point({{0, 1, 1, 1, 0, 1}, phi::OrderZeta<double>{0.5}}));
  EXPECT_NE(text.find("a2=0.577350\n"), std::string::npos);
  EXPECT_NE(text.find("a3=0.583333\n"), std::string::npos);
}
