#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdiag/area.hpp"
#include "pdiag/rational.hpp"

namespace pdiag::cli {

struct VerifyRequest {
  unsigned long q_max = 50;
  unsigned long n_max = 10;
  unsigned long k_max = 12;
  std::uint64_t pick_budget = kDefaultPickBudget;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct VerifyFailure {
  unsigned long q = 0;
  unsigned long n = 0;
  unsigned long k = 0;
  std::string check;
  std::string expected;
  std::string actual;
};

/// Comparison against the published k = 2, n = 0 table (q = 2..6 and 16):
/// areas exactly, ratios to within 0.05 of the printed decimals.
struct GoldenComparison {
  bool included = false;
  bool passed = false;
  std::size_t rows_compared = 0;
  std::vector<std::string> mismatches;
};

struct VerifyReport {
  std::uint64_t points = 0;
  std::uint64_t checks = 0;
  std::uint64_t pick_runs = 0;
  std::uint64_t failures = 0;
  std::optional<VerifyFailure> first_failure;  // lowest (q, n, k)
  GoldenComparison table1;

  bool passed() const { return failures == 0 && (!table1.included || table1.passed); }
};

struct Table1Row {
  unsigned long q;
  Rational area;
  Rational printed_ratio;
};

/// The rows printed in the published table, as printed.
const std::vector<Table1Row>& table1_reference();

inline const Rational kTable1Tolerance{1, 20};

GoldenComparison compare_table1();

/// Sweeps q = 1..q_max, n = 0..n_max, k = 1..k_max. Every point runs the area
/// cross-check, the structural invariants of its diagram, the denominator bound,
/// the n -> n+1 scaling law and the polynomial identities; k = 2, n = 0 sequences
/// are also checked against the second-difference and ratio identities. Grid
/// points are spread over worker threads; the report is merged in (q, n, k) order.
VerifyReport run_verification(const VerifyRequest& request);

}  // namespace pdiag::cli
