#pragma once

#include <cstdint>
#include <optional>

#include "pdiag/diagram.hpp"
#include "pdiag/polynomial.hpp"
#include "pdiag/rational.hpp"

namespace pdiag {

/// Unsigned area as a reduced rational. Diagram areas always have denominator 1 or 2.
class ExactArea {
 public:
  ExactArea() = default;
  explicit ExactArea(Rational value) : value_(std::move(value)) { value_.canonicalize(); }

  const Rational& value() const noexcept { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }

  friend bool operator==(const ExactArea& a, const ExactArea& b) { return a.value_ == b.value_; }
  friend ExactArea operator+(const ExactArea& a, const ExactArea& b) {
    return ExactArea(Rational(a.value_ + b.value_));
  }

 private:
  Rational value_;
};

/// q^n (q+3)(q-1) / 2, the area when k = 2.
ExactArea area_closed_form_k2(const Integer& q, unsigned long n);

/// Slab between x = q^{n+m} and x = q^{n+m+1} under the chain:
/// (q^{n+m+1} - q^{n+m})(2k - 2m - 1) / 2. Requires k >= 2 and m <= k-2;
/// otherwise throws ValidationError("m", ...).
ExactArea trapezoid_area(const SpecialPolynomial& p, unsigned long m);

/// Right triangle under the last chain edge: (q^{n+k} - q^{n+k-1}) / 2.
ExactArea triangle_area(const SpecialPolynomial& p);

/// Sum of the k-1 trapezoids plus the closing triangle.
ExactArea area_general(const SpecialPolynomial& p);

/// |shoelace sum| / 2 over the closed vertex cycle.
ExactArea area_shoelace(const PolynomialDiagram& d);

struct PickCount {
  Integer interior;
  Integer boundary;
  ExactArea area;
};

inline constexpr std::uint64_t kDefaultPickBudget = 1'000'000;

/// Pick's theorem, A = I + B/2 - 1. B comes from edge gcds, I from scanning
/// every integer column of the diagram. Throws ValidationError for a degenerate
/// diagram and OracleBudgetExceeded when the x-extent is more than `column_budget`.
PickCount area_pick(const PolynomialDiagram& d, std::uint64_t column_budget = kDefaultPickBudget);

struct AreaCrossCheck {
  std::optional<ExactArea> closed_form;  // k = 2 only
  ExactArea general_formula;
  ExactArea shoelace;
  std::optional<ExactArea> pick;  // absent for degenerate or over-budget diagrams
  bool agree = false;
};

AreaCrossCheck cross_check(const SpecialPolynomial& p,
                           std::uint64_t pick_budget = kDefaultPickBudget);

}  // namespace pdiag
