#include "pdiag/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

#include "pdiag/errors.hpp"
#include "pdiag/sequence.hpp"

namespace pdiag::cli {
namespace {

Cell exact(const ExactArea& a) { return a.value(); }
Cell decimal(const ExactArea& a) { return Decimal{a.value()}; }

Integer parse_integer_arg(const std::string& name, const std::string& text) {
  Rational value;
  try {
    value = parse_fraction(text);
  } catch (const std::invalid_argument&) {
    throw ValidationError(name, "expected an integer, got '" + text + "'");
  }
  if (value.get_den() != 1 || text.find('/') != std::string::npos)
    throw ValidationError(name, "expected an integer, got '" + text + "'");
  return value.get_num();
}

}  // namespace

int cmd_area(const AreaRequest& request, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> methods = {"closed", "general", "shoelace", "pick", "all"};
  if (std::find(methods.begin(), methods.end(), request.method) == methods.end()) {
    err << "error: unknown method '" << request.method << "'\n";
    return kExitUsage;
  }

  std::optional<SpecialPolynomial> parsed;
  try {
    parsed = build_polynomial(request.q, request.n, request.k);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const SpecialPolynomial& p = *parsed;
  if (request.method == "closed" && p.k() != 2) {
    err << "error: method 'closed' is only defined for k = 2 (got k = " << p.k() << ")\n";
    return kExitUsage;
  }

  const auto diagram = build_diagram(p);
  if (diagram.degenerate()) err << "warning: degenerate diagram (q = 1): every vertex has x = 1, area is 0\n";

  Document doc;
  doc.params["q"] = p.q().get_str();
  doc.params["n"] = p.n();
  doc.params["k"] = p.k();
  doc.params["method"] = request.method;
  doc.columns = {"method", "area", "decimal"};
  auto add_row = [&](const std::string& method, const ExactArea& a) {
    doc.rows.push_back({method, exact(a), decimal(a)});
  };

  int status = kExitOk;
  if (request.method == "closed") {
    add_row("closed", area_closed_form_k2(p.q(), p.n()));
  } else if (request.method == "general") {
    add_row("general", area_general(p));
  } else if (request.method == "shoelace") {
    add_row("shoelace", area_shoelace(diagram));
  } else if (request.method == "pick") {
    try {
      const auto pick = area_pick(diagram, request.pick_budget);
      add_row("pick", pick.area);
      doc.extras["pick"] = {{"interior", pick.interior.get_str()}, {"boundary", pick.boundary.get_str()}};
    } catch (const ValidationError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const OracleBudgetExceeded& e) {
      err << "error: " << e.what() << " (raise --pick-budget)\n";
      return kExitUsage;
    }
  } else {
    const auto check = cross_check(p, request.pick_budget);
    if (check.closed_form) add_row("closed", *check.closed_form);
    add_row("general", check.general_formula);
    add_row("shoelace", check.shoelace);
    if (check.pick) add_row("pick", *check.pick);
    else if (!diagram.degenerate()) err << "note: pick oracle skipped, diagram wider than --pick-budget\n";
    doc.extras["agree"] = check.agree;
    if (!check.agree) {
      err << "error: area methods disagree for q=" << p.q().get_str() << " n=" << p.n()
          << " k=" << p.k() << '\n';
      status = kExitFailure;
    }
  }

  emit(doc, request.format, request.digits, out);
  return status;
}

int cmd_table(const TableRequest& request, std::ostream& out, std::ostream& err) {
  AreaSequence s;
  try {
    build_polynomial(request.q_from, request.n, request.k);
    if (request.q_to < request.q_from)
      throw ValidationError("q_to", "empty range " + request.q_from.get_str() + ".." +
                                        request.q_to.get_str());
    // One extra value so the last row has its ratio.
    s = area_sequence(static_cast<unsigned long>(request.k), static_cast<unsigned long>(request.n),
                      request.q_from, request.q_to + 1);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto ratios = ratio_sequence(s);

  Document doc;
  doc.params["k"] = request.k;
  doc.params["n"] = request.n;
  doc.params["q_from"] = request.q_from.get_str();
  doc.params["q_to"] = request.q_to.get_str();
  doc.columns = {"q", "area", "area_decimal", "ratio", "ratio_decimal"};
  for (std::size_t j = 0; j + 1 < s.values.size(); ++j) {
    std::vector<Cell> row = {s.q_at(j), exact(s.values[j]), decimal(s.values[j])};
    if (ratios[j]) {
      row.emplace_back(*ratios[j]);
      row.emplace_back(Decimal{*ratios[j]});
    } else {
      row.emplace_back(Undefined{});
      row.emplace_back(Undefined{});
    }
    doc.rows.push_back(std::move(row));
  }
  emit(doc, request.format, request.digits, out);
  return kExitOk;
}

int cmd_diff(const DiffRequest& request, std::ostream& out, std::ostream& err) {
  std::vector<Rational> diffs;
  AreaSequence s;
  try {
    build_polynomial(request.q_from, request.n, request.k);
    s = area_sequence(static_cast<unsigned long>(request.k), static_cast<unsigned long>(request.n),
                      request.q_from, request.q_to);
    diffs = finite_difference(s, request.order);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Document doc;
  doc.params["k"] = request.k;
  doc.params["n"] = request.n;
  doc.params["q_from"] = request.q_from.get_str();
  doc.params["q_to"] = request.q_to.get_str();
  doc.params["order"] = request.order;
  doc.columns = {"q", "difference", "decimal"};
  for (std::size_t j = 0; j < diffs.size(); ++j)
    doc.rows.push_back({s.q_at(j), diffs[j], Decimal{diffs[j]}});
  emit(doc, request.format, request.digits, out);
  return kExitOk;
}

int cmd_verify(const VerifyRequest& request, OutputFormat format, std::ostream& out,
               std::ostream& err) {
  if (request.q_max == 0 || request.k_max == 0) {
    err << "error: --q-max and --k-max must be positive\n";
    return kExitUsage;
  }
  const auto report = run_verification(request);

  Document doc;
  doc.params["q_max"] = request.q_max;
  doc.params["n_max"] = request.n_max;
  doc.params["k_max"] = request.k_max;
  doc.params["pick_budget"] = request.pick_budget;
  doc.columns = {"metric", "value"};
  doc.rows.push_back({std::string("points"), Integer(std::to_string(report.points))});
  doc.rows.push_back({std::string("checks"), Integer(std::to_string(report.checks))});
  doc.rows.push_back({std::string("pick_runs"), Integer(std::to_string(report.pick_runs))});
  doc.rows.push_back({std::string("failures"), Integer(std::to_string(report.failures))});
  doc.rows.push_back({std::string("table1_golden"),
                      std::string(!report.table1.included ? "not-in-range"
                                  : report.table1.passed  ? "pass"
                                                          : "fail")});
  doc.rows.push_back({std::string("status"), std::string(report.passed() ? "pass" : "fail")});

  doc.extras["passed"] = report.passed();
  if (report.first_failure) {
    const auto& f = *report.first_failure;
    doc.extras["first_failure"] = {{"q", f.q}, {"n", f.n}, {"k", f.k}, {"check", f.check},
                                   {"expected", f.expected}, {"actual", f.actual}};
  } else {
    doc.extras["first_failure"] = nullptr;
  }
  if (report.table1.included)
    doc.extras["table1_golden"] = {{"rows_compared", report.table1.rows_compared},
                                   {"passed", report.table1.passed},
                                   {"mismatches", report.table1.mismatches}};
  emit(doc, format, kDefaultDigits, out);

  if (report.first_failure) {
    const auto& f = *report.first_failure;
    err << "verification failed at q=" << f.q << " n=" << f.n << " k=" << f.k << " (" << f.check
        << "): expected " << f.expected << ", got " << f.actual << '\n';
  }
  for (const auto& m : report.table1.mismatches) err << "table 1 mismatch: " << m << '\n';
  return report.passed() ? kExitOk : kExitFailure;
}

int cmd_render(const RenderRequest& request, std::ostream& out, std::ostream& err) {
  std::optional<SpecialPolynomial> parsed;
  try {
    parsed = build_polynomial(request.q, request.n, request.k);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto& spec = request.spec;
  if (spec.width_px <= 2 * spec.margins || spec.height_px <= 2 * spec.margins) {
    err << "error: margins leave no drawing area\n";
    return kExitUsage;
  }

  const auto result = render_svg(build_diagram(*parsed), spec);
  for (const auto& w : result.warnings) err << "warning: " << w << '\n';

  if (!request.out_path) {
    out << result.svg;
    return kExitOk;
  }
  std::ofstream file(*request.out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << result.svg) || !file.flush()) {
    err << "error: cannot write '" << *request.out_path << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial diagrams: exact areas, area sequences and renderings"};
  app.name("pdiag");
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"csv", "json", "markdown"};
  unsigned digits = kDefaultDigits;
  std::string q_text = "2", q_from_text, q_to_text;

  AreaRequest area;
  auto* area_cmd = app.add_subcommand("area", "Area of one diagram");
  area_cmd->add_option("--q", q_text, "Base q >= 1 (arbitrary precision)")->required();
  area_cmd->add_option("--n", area.n, "Exponent offset n >= 0");
  area_cmd->add_option("--k", area.k, "Degree k >= 1");
  area_cmd->add_option("--method", area.method, "closed | general | shoelace | pick | all")
      ->check(CLI::IsMember({"closed", "general", "shoelace", "pick", "all"}));
  area_cmd->add_option("--pick-budget", area.pick_budget, "Column budget for the Pick oracle");

  TableRequest table;
  auto* table_cmd = app.add_subcommand("table", "Areas and consecutive ratios over a q range");
  table_cmd->add_option("--k", table.k);
  table_cmd->add_option("--n", table.n);
  table_cmd->add_option("--q-from", q_from_text);
  table_cmd->add_option("--q-to", q_to_text);

  DiffRequest diff;
  auto* diff_cmd = app.add_subcommand("diff", "Forward differences of the area sequence");
  diff_cmd->add_option("--k", diff.k);
  diff_cmd->add_option("--n", diff.n);
  diff_cmd->add_option("--q-from", q_from_text);
  diff_cmd->add_option("--q-to", q_to_text);
  diff_cmd->add_option("--order", diff.order, "Difference order d >= 1");

  VerifyRequest verify;
  auto* verify_cmd = app.add_subcommand("verify", "Grid sweep of every area method and invariant");
  verify_cmd->add_option("--q-max", verify.q_max);
  verify_cmd->add_option("--n-max", verify.n_max);
  verify_cmd->add_option("--k-max", verify.k_max);
  verify_cmd->add_option("--pick-budget", verify.pick_budget);
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0: all cores)");

  RenderRequest render;
  std::string out_path;
  auto* render_cmd = app.add_subcommand("render", "SVG drawing of one diagram");
  render_cmd->add_option("--q", q_text)->required();
  render_cmd->add_option("--n", render.n);
  render_cmd->add_option("--k", render.k);
  render_cmd->add_option("--width", render.spec.width_px);
  render_cmd->add_option("--height", render.spec.height_px);
  render_cmd->add_option("--margins", render.spec.margins);
  render_cmd->add_flag("--log-x", render.spec.log_x, "Place vertices at log_q(x)");
  render_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  // Each subcommand gets its own --format/--digits; only one is ever parsed.
  std::string area_format = "csv", table_format = "csv", diff_format = "csv", verify_format = "json";
  for (auto [sub, target] : {std::pair{area_cmd, &area_format}, std::pair{table_cmd, &table_format},
                             std::pair{diff_cmd, &diff_format}, std::pair{verify_cmd, &verify_format}}) {
    sub->add_option("--format", *target, "csv | json | markdown")->check(CLI::IsMember(formats));
    sub->add_option("--digits", digits, "Decimal places in rendered decimals");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (area_cmd->parsed()) {
      area.q = parse_integer_arg("q", q_text);
      area.format = *parse_format(area_format);
      area.digits = digits;
      return cmd_area(area, out, err);
    }
    if (table_cmd->parsed()) {
      if (!q_from_text.empty()) table.q_from = parse_integer_arg("q_from", q_from_text);
      if (!q_to_text.empty()) table.q_to = parse_integer_arg("q_to", q_to_text);
      table.format = *parse_format(table_format);
      table.digits = digits;
      return cmd_table(table, out, err);
    }
    if (diff_cmd->parsed()) {
      if (!q_from_text.empty()) diff.q_from = parse_integer_arg("q_from", q_from_text);
      if (!q_to_text.empty()) diff.q_to = parse_integer_arg("q_to", q_to_text);
      diff.format = *parse_format(diff_format);
      diff.digits = digits;
      return cmd_diff(diff, out, err);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify, *parse_format(verify_format), out, err);
    if (render_cmd->parsed()) {
      render.q = parse_integer_arg("q", q_text);
      if (!out_path.empty()) render.out_path = out_path;
      return cmd_render(render, out, err);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pdiag::cli
