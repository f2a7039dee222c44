#include <doctest.h>

#include <algorithm>

#include "pdiag/errors.hpp"
#include "pdiag/sequence.hpp"

using namespace pdiag;

namespace {

std::vector<Rational> values_of(const AreaSequence& s) {
  std::vector<Rational> out;
  for (const auto& v : s.values) out.push_back(v.value());
  return out;
}

// k = 2 area straight from the product form, for oracles below.
Rational k2_area(unsigned long q, unsigned long n) {
  return make_fraction(power(q, n) * Integer(q + 3) * (Integer(q) - 1), 2);
}

bool all_equal(const std::vector<Rational>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace

TEST_CASE("area_sequence") {
  const auto s = area_sequence(2, 0, 2, 6);
  CHECK(s.q_start == 2);
  CHECK(s.q_at(4) == 6);
  CHECK(values_of(s) == std::vector<Rational>{make_fraction(5, 2), 6, make_fraction(21, 2), 16,
                                              make_fraction(45, 2)});

  CHECK(values_of(area_sequence(2, 0, 1, 1)) == std::vector<Rational>{0});
  // Shoelace by hand: (1,0),(1,3),(2,2),(4,1),(8,0) sums to -15 and
  // (1,0),(1,3),(3,2),(9,1),(27,0) to 3 - 7 - 15 - 27 = -46.
  CHECK(values_of(area_sequence(3, 0, 2, 3)) == std::vector<Rational>{make_fraction(15, 2), 23});

  CHECK_THROWS_AS(area_sequence(2, 0, 5, 4), ValidationError);
  CHECK_THROWS_AS(area_sequence(2, 0, 0, 4), ValidationError);
  CHECK_THROWS_AS(area_sequence(0, 0, 1, 4), ValidationError);
}

TEST_CASE("ratio_sequence") {
  const auto table = ratio_sequence(area_sequence(2, 0, 2, 17));
  REQUIRE(table.size() == 15);
  CHECK(*table.front() == make_fraction(12, 5));
  CHECK(*table.back() == make_fraction(64, 57));

  // (27 * 6) / (8 * 5/2), from the product form at q = 2, 3 with n = 3
  CHECK(k2_area(3, 3) / k2_area(2, 3) == make_fraction(81, 10));
  CHECK(*ratio_sequence(area_sequence(2, 3, 2, 3)).front() == make_fraction(81, 10));

  const auto with_zero = ratio_sequence(area_sequence(2, 0, 1, 3));
  REQUIRE(with_zero.size() == 2);
  CHECK_FALSE(with_zero[0]);
  CHECK(*with_zero[1] == make_fraction(12, 5));

  CHECK(ratio_sequence(area_sequence(2, 0, 4, 4)).empty());
}

TEST_CASE("finite differences") {
  const auto s = area_sequence(2, 0, 1, 40);
  for (const auto& d : finite_difference(s, 2)) CHECK(d == 1);

  const std::vector<Rational> constant(5, make_fraction(7, 3));
  for (const auto& d : forward_difference(constant, 1)) CHECK(d == 0);

  // 42 - 2*18 + 5 from the product form
  CHECK(k2_area(4, 1) - 2 * k2_area(3, 1) + k2_area(2, 1) == 11);
  CHECK(finite_difference(area_sequence(2, 1, 2, 4), 2) == std::vector<Rational>{11});

  CHECK_THROWS_AS(finite_difference(area_sequence(2, 0, 3, 3), 1), ValidationError);
  CHECK_THROWS_AS(finite_difference(area_sequence(2, 0, 3, 5), 3), ValidationError);
  CHECK_THROWS_AS(finite_difference(area_sequence(2, 0, 3, 5), 0), ValidationError);
}

TEST_CASE("binomial difference matches repeated first differences") {
  const auto s = area_sequence(4, 2, 1, 25);
  std::vector<Rational> repeated = values_of(s);
  for (unsigned d = 1; d <= 6; ++d) {
    std::vector<Rational> next;
    for (std::size_t j = 0; j + 1 < repeated.size(); ++j) next.push_back(repeated[j + 1] - repeated[j]);
    repeated = next;
    CHECK(finite_difference(s, d) == repeated);
  }
}

TEST_CASE("order n+3 differences vanish for k = 2") {
  for (unsigned long n = 0; n <= 5; ++n) {
    const auto s = area_sequence(2, n, 1, 30);
    for (const auto& d : finite_difference(s, static_cast<unsigned>(n + 3))) CHECK(d == 0);
    CHECK_FALSE(all_equal(finite_difference(s, static_cast<unsigned>(n + 1))));
  }
}

TEST_CASE("second difference is not constant outside k = 2, n = 0") {
  CHECK_FALSE(all_equal(finite_difference(area_sequence(3, 0, 2, 10), 2)));
  CHECK_FALSE(all_equal(finite_difference(area_sequence(2, 1, 2, 10), 2)));
}

TEST_CASE("convergence_report") {
  const auto report = convergence_report(area_sequence(2, 0, 2, 17));
  CHECK(report.monotone_decreasing);
  CHECK_FALSE(report.insufficient_data);
  CHECK(*report.ratios.back() == make_fraction(64, 57));
  CHECK(*report.distance_to_limit == make_fraction(7, 57));
  CHECK(report.difference_order == 2);
  CHECK(report.differences.size() == 14);

  const Integer million = 1'000'000;
  const auto far = convergence_report(area_sequence(2, 0, million, million + 1));
  REQUIRE(far.distance_to_limit);
  CHECK(*far.distance_to_limit < make_fraction(1, 100'000));
  CHECK(far.differences.empty());

  const auto zeros = convergence_report(area_sequence(5, 3, 1, 1));
  CHECK(zeros.insufficient_data);
  CHECK_FALSE(zeros.monotone_decreasing);
  CHECK_FALSE(zeros.distance_to_limit);

  // q = 1 at the front: its undefined ratio is skipped.
  const auto from_one = convergence_report(area_sequence(2, 0, 1, 10));
  CHECK_FALSE(from_one.ratios.front());
  CHECK(from_one.monotone_decreasing);
}
