// bibaz: coefficient bounds for bi-univalent Bazilevič-type classes.
//
//   bibaz bounds   --k 0 --gamma 1 --zeta 1/2
//   bibaz grid     --zeta 0:1/2:2 --gamma 1 --format csv
//   bibaz audit    --samples 1000 --seed 1
//   bibaz verify   --draws 100 --seed 1
//   bibaz extremal --B1 2 --B2 2 --target a3 --strict
//
// Exit codes: 0 ok, 1 invalid input, 2 degenerate operator or denominator,
// 3 nonzero residual in verify.

#include "bibaz/io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace bibaz;

enum Exit { kOk = 0, kInvalid = 1, kDegenerate = 2, kResidual = 3 };

struct ParamFlags {
  std::string k = "0", alpha = "1", beta = "1", lambda = "1", delta = "0", gamma = "0";
  std::optional<std::string> b1, b2, a, b, zeta;

  void attach(CLI::App& cmd) {
    cmd.add_option("--k", k, "operator power k (integer >= 0)");
    cmd.add_option("--alpha", alpha, "alpha in (0,1]");
    cmd.add_option("--beta", beta, "beta in (0,1]");
    cmd.add_option("--lambda", lambda, "lambda >= 0");
    cmd.add_option("--delta", delta, "delta >= 0");
    cmd.add_option("--gamma", gamma, "Bazilevic type gamma >= 0");
    auto* ob1 = cmd.add_option("--B1", b1, "generic phi: B1 > 0");
    auto* ob2 = cmd.add_option("--B2", b2, "generic phi: B2");
    auto* oa = cmd.add_option("--A", a, "Janowski phi: A");
    auto* ob = cmd.add_option("--B", b, "Janowski phi: B");
    auto* oz = cmd.add_option("--zeta", zeta, "order-zeta phi: zeta in [0,1)");
    ob2->needs(ob1);
    ob1->needs(ob2);
    oa->needs(ob);
    ob->needs(oa);
    for (auto* generic : {ob1, ob2})
      for (auto* other : {oa, ob, oz}) generic->excludes(other);
    for (auto* janowski : {oa, ob}) janowski->excludes(oz);
  }

  PhiFamily family() const {
    if (b1) return PhiFamily::Generic;
    if (a) return PhiFamily::Janowski;
    if (zeta) return PhiFamily::OrderZeta;
    throw InvalidParameter("choose a target phi: --B1/--B2, --A/--B or --zeta");
  }

  static double number(const std::string& s) { return to_double(parse_rational(s)); }

  ClassParams<double> params() const {
    const Rational kr = parse_rational(k);
    if (!is_integer(kr)) throw InvalidParameter("--k must be an integer");
    ClassParams<double> p{static_cast<int>(kr.convert_to<long long>()), number(alpha), number(beta),
                          number(lambda), number(delta), number(gamma)};
    p.validate();
    return p;
  }

  PhiSpec<double> phi() const {
    PhiSpec<double> spec;
    switch (family()) {
      case PhiFamily::Generic:
        spec = phi::Generic<double>{number(*b1), number(*b2)};
        break;
      case PhiFamily::Janowski:
        spec = phi::Janowski<double>{number(*a), number(*b)};
        break;
      case PhiFamily::OrderZeta:
        spec = phi::OrderZeta<double>{number(*zeta)};
        break;
    }
    validate(spec);
    return spec;
  }

  GridSpec grid() const {
    GridSpec g;
    g.k = parse_range(k);
    g.alpha = parse_range(alpha);
    g.beta = parse_range(beta);
    g.lambda = parse_range(lambda);
    g.delta = parse_range(delta);
    g.gamma = parse_range(gamma);
    g.family = family();
    switch (g.family) {
      case PhiFamily::Generic:
        g.phi_first = parse_range(*b1);
        g.phi_second = parse_range(*b2);
        break;
      case PhiFamily::Janowski:
        g.phi_first = parse_range(*a);
        g.phi_second = parse_range(*b);
        break;
      case PhiFamily::OrderZeta:
        g.phi_first = parse_range(*zeta);
        break;
    }
    return g;
  }
};

int cmd_bounds(const ParamFlags& f, const std::string& format, RunReport meta) {
  const GridRow row = evaluate_point({f.params(), f.phi()});
  meta.counts = count_rows({row});
  if (format == "json")
    std::cout << dump(rows_json(meta, {row}));
  else if (format == "csv")
    std::cout << rows_csv({row});
  else
    std::cout << bounds_text(row);
  if (row.error) return kInvalid;
  return row.result.degenerate ? kDegenerate : kOk;
}

int cmd_grid(const ParamFlags& f, const std::string& format, RunReport meta) {
  const auto rows = evaluate_grid(f.grid());
  meta.counts = count_rows(rows);
  if (format == "json")
    std::cout << dump(rows_json(meta, rows));
  else
    std::cout << rows_csv(rows);
  return kOk;
}

int cmd_audit(int samples, std::uint64_t seed, const std::string& format, RunReport meta) {
  if (samples < 1) throw InvalidParameter("--samples must be >= 1");
  const auto entries = audit_corollaries(samples, seed);
  meta.counts.evaluated = entries.size();
  meta.findings = audit_findings(entries);
  if (format == "json")
    std::cout << dump(audit_json(meta, entries));
  else
    std::cout << audit_text(entries);
  return kOk;
}

int cmd_verify(int draws, std::uint64_t seed, bool inject, const std::string& format, RunReport meta) {
  const auto report = run_verify(draws, seed, VerifyOptions{inject});
  meta.counts = verify_counts(report);
  meta.findings = report.findings;
  if (format == "json")
    std::cout << dump(Json{{"meta", to_json(meta)}, {"report", to_json(report)}});
  else
    std::cout << verify_text(report);
  return report.passed() ? kOk : kResidual;
}

int cmd_extremal(const ParamFlags& f, const std::string& target, const SearchOptions& opt, const std::string& format,
                 RunReport meta) {
  const auto p = f.params();
  const auto spec = f.phi();
  const auto c = phi_coefficients(spec);
  if (multipliers(p).degenerate()) throw DegenerateOperator("operator multipliers vanish (u2 or u3 = 0)");
  std::vector<ExtremalReport> reports;
  for (Target t : {Target::A2, Target::A3})
    if (target == "both" || target == to_string(t)) reports.push_back(extremal_search(p, c.b1, c.b2, t, opt));
  for (const auto& r : reports) meta.counts.evaluated += r.candidates;
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::cout << dump(Json{{"meta", to_json(meta)}, {"report", std::move(arr)}});
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << extremal_text(reports[i]);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient bounds for bi-univalent Bazilevic-type function classes"};
  app.require_subcommand(1);

  std::string format;
  std::uint64_t seed = 1;
  int samples = 1000, draws = 100;
  bool strict = false, inject = false;
  std::string target = "both";
  SearchOptions search;

  ParamFlags bounds_flags, grid_flags, extremal_flags;

  auto* bounds = app.add_subcommand("bounds", "a2 and a3 bounds at one parameter point");
  bounds_flags.attach(*bounds);
  bounds->add_option("--format", format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));

  auto* grid = app.add_subcommand("grid", "bound table over parameter ranges (start or start:stop:steps)");
  grid_flags.attach(*grid);
  grid->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* audit = app.add_subcommand("audit", "compare printed closed forms with the general bounds");
  audit->add_option("--samples", samples, "points per entry");
  audit->add_option("--seed", seed, "random seed");
  audit->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "exact-rational residual suite");
  verify->add_option("--draws", draws, "random draws per suite");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--inject-sign-fault", inject)->group("");  // negative control for tests

  auto* extremal = app.add_subcommand("extremal", "maximize |a2|, |a3| over Caratheodory tuples");
  extremal_flags.attach(*extremal);
  extremal->add_option("--target", target, "a2 | a3 | both")->check(CLI::IsMember({"a2", "a3", "both"}));
  extremal->add_option("--resolution", search.resolution, "real grid spacing on [-2,2]");
  extremal->add_option("--draws", search.random_draws, "random polydisc draws");
  extremal->add_option("--seed", seed, "random seed");
  extremal->add_flag("--strict", strict, "also search the exact coefficient body");
  extremal->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kInvalid;
  }

  RunReport meta;
  meta.command = command_echo(argc, argv);
  try {
    if (*bounds) return cmd_bounds(bounds_flags, format.empty() ? "text" : format, meta);
    if (*grid) return cmd_grid(grid_flags, format.empty() ? "csv" : format, meta);
    if (*audit) return cmd_audit(samples, seed, format.empty() ? "text" : format, meta);
    if (*verify) return cmd_verify(draws, seed, inject, format.empty() ? "text" : format, meta);
    if (*extremal) {
      search.seed = seed;
      search.strict = strict;
      return cmd_extremal(extremal_flags, target, search, format.empty() ? "text" : format, meta);
    }
  } catch (const DegenerateOperator& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kDegenerate;
  } catch (const ZeroDenominator& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
