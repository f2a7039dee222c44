#include "pdiag/cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

#include "pdiag/diagram.hpp"
#include "pdiag/polynomial.hpp"
#include "pdiag/sequence.hpp"

namespace pdiag::cli {

const std::vector<Table1Row>& table1_reference() {
  static const std::vector<Table1Row> rows = {
      {2, make_fraction(5, 2), make_fraction(24, 10)},   {3, Rational(6), make_fraction(175, 100)},
      {4, make_fraction(21, 2), make_fraction(152, 100)}, {5, Rational(16), make_fraction(14, 10)},
      {6, make_fraction(45, 2), make_fraction(13, 10)},   {16, make_fraction(285, 2), make_fraction(112, 100)},
  };
  return rows;
}

GoldenComparison compare_table1() {
  GoldenComparison out;
  out.included = true;
  for (const auto& row : table1_reference()) {
    const auto s = area_sequence(2, 0, row.q, row.q + 1);
    const auto ratio = ratio_sequence(s).front();
    ++out.rows_compared;
    if (s.values[0].value() != row.area)
      out.mismatches.push_back("q=" + std::to_string(row.q) + " area " +
                               to_fraction_string(s.values[0].value()) + " != " +
                               to_fraction_string(row.area));
    if (!ratio || abs(*ratio - row.printed_ratio) > kTable1Tolerance)
      out.mismatches.push_back("q=" + std::to_string(row.q) + " ratio " +
                               (ratio ? to_decimal_string(*ratio, 4) : std::string("undefined")) +
                               " vs printed " + to_decimal_string(row.printed_ratio, 2));
  }
  out.passed = out.mismatches.empty();
  return out;
}

namespace {

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t pick_runs = 0;
  std::uint64_t failures = 0;
  std::optional<VerifyFailure> first_failure;

  void check(bool ok, unsigned long q, unsigned long n, unsigned long k, const char* name,
             const std::string& expected, const std::string& actual) {
    ++checks;
    if (ok) return;
    ++failures;
    if (!first_failure) first_failure = VerifyFailure{q, n, k, name, expected, actual};
  }
};

std::string fraction(const ExactArea& a) { return to_fraction_string(a.value()); }

std::string describe(const AreaCrossCheck& c) {
  std::string text = "general=" + fraction(c.general_formula) + " shoelace=" + fraction(c.shoelace);
  if (c.closed_form) text += " closed=" + fraction(*c.closed_form);
  if (c.pick) text += " pick=" + fraction(*c.pick);
  return text;
}

// All n for one (q, k). Failures are recorded in increasing n.
Tally verify_column(unsigned long q_value, unsigned long k, const VerifyRequest& request) {
  Tally t;
  const Integer q = q_value;
  std::vector<ExactArea> areas;
  areas.reserve(request.n_max + 1);

  for (unsigned long n = 0; n <= request.n_max; ++n) {
    const auto p = build_polynomial(q, static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
    const auto c = cross_check(p, request.pick_budget);
    if (c.pick) ++t.pick_runs;
    t.check(c.agree, q_value, n, k, "area cross-check", "all methods equal", describe(c));
    areas.push_back(c.general_formula);

    const auto den = c.general_formula.denominator();
    t.check(den == 1 || den == 2, q_value, n, k, "area denominator", "1 or 2", den.get_str());

    const auto diagram = build_diagram(p);
    const auto diag = validate_diagram(diagram);
    t.check(diag.vertex_count == k + 2, q_value, n, k, "vertex count", std::to_string(k + 2),
            std::to_string(diag.vertex_count));
    if (q_value >= 2) {
      t.check(!diag.degenerate, q_value, n, k, "non-degenerate", "false", "true");
      t.check(diag.simple, q_value, n, k, "simple polygon", "true", "false");
      t.check(diag.chain_slopes_increasing, q_value, n, k, "chain slopes increasing", "true", "false");
      const bool convex_expected = k < 2;
      t.check(diag.convex == convex_expected, q_value, n, k, "convexity",
              convex_expected ? "convex" : "non-convex", diag.convex ? "convex" : "non-convex");
    } else {
      t.check(diag.degenerate, q_value, n, k, "degenerate flag", "true", "false");
      t.check(c.general_formula.is_zero(), q_value, n, k, "degenerate area", "0/1",
              fraction(c.general_formula));
    }

    const auto points = monomial_map(p);
    bool geometric = points.size() == k + 1;
    for (std::size_t i = 0; geometric && i + 1 < points.size(); ++i)
      geometric = points[i].x * q == points[i + 1].x && points[i].y == k - i;
    t.check(geometric, q_value, n, k, "monomial map", "(q^{n+i}, k-i)", "mismatch");

    const Integer at_one = evaluate_polynomial(p, 1);
    const Integer expected_at_one =
        q_value >= 2 ? Integer(power(q, n) * (power(q, k + 1) - 1) / (q - 1)) : Integer(k + 1);
    t.check(at_one == expected_at_one, q_value, n, k, "P(1) geometric sum",
            expected_at_one.get_str(), at_one.get_str());
  }

  for (unsigned long n = 0; n < request.n_max; ++n) {
    const ExactArea scaled(Rational(areas[n].value() * q));
    t.check(areas[n + 1] == scaled, q_value, n, k, "scaling S(n+1) = q S(n)", fraction(scaled),
            fraction(areas[n + 1]));
  }
  return t;
}

// k = 2, n = 0 over q = 1..q_max: second differences are 1 and the ratio is
// q(q+4) / ((q+3)(q-1)), strictly decreasing and above 1.
Tally verify_k2_sequence(unsigned long q_max) {
  Tally t;
  if (q_max < 3) return t;
  const auto s = area_sequence(2, 0, 1, q_max);
  const auto second = finite_difference(s, 2);
  for (std::size_t j = 0; j < second.size(); ++j)
    t.check(second[j] == 1, j + 1, 0, 2, "second difference", "1/1", to_fraction_string(second[j]));

  const auto ratios = ratio_sequence(s);
  for (std::size_t j = 1; j < ratios.size(); ++j) {
    const unsigned long q = j + 1;
    const Rational expected = make_fraction(q * (q + 4), (q + 3) * (q - 1));
    const bool ok = ratios[j] && *ratios[j] == expected && *ratios[j] > 1 &&
                    (j == 1 || *ratios[j] < *ratios[j - 1]);
    t.check(ok, q, 0, 2, "ratio identity", to_fraction_string(expected),
            ratios[j] ? to_fraction_string(*ratios[j]) : "undefined");
  }
  return t;
}

bool earlier(const VerifyFailure& a, const VerifyFailure& b) {
  return std::tie(a.q, a.n, a.k) < std::tie(b.q, b.n, b.k);
}

}  // namespace

VerifyReport run_verification(const VerifyRequest& request) {
  VerifyReport report;
  if (request.q_max == 0 || request.k_max == 0) return report;

  const std::size_t tasks = request.q_max * request.k_max;
  std::vector<Tally> results(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks; i = next++)
      results[i] = verify_column(i / request.k_max + 1, i % request.k_max + 1, request);
  };

  unsigned threads = request.threads ? request.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(tasks, 64)));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  results.push_back(verify_k2_sequence(request.k_max >= 2 ? request.q_max : 0));

  report.points = tasks * (request.n_max + 1);
  for (const auto& t : results) {
    report.checks += t.checks;
    report.pick_runs += t.pick_runs;
    report.failures += t.failures;
    if (t.first_failure && (!report.first_failure || earlier(*t.first_failure, *report.first_failure)))
      report.first_failure = t.first_failure;
  }

  if (request.q_max >= 16 && request.k_max >= 2) report.table1 = compare_table1();
  return report;
}

}  // namespace pdiag::cli
