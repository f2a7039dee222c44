#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pdiag/area.hpp"
#include "pdiag/rational.hpp"

namespace pdiag {

/// values[j] = area_general(q_start + j, n, k).
struct AreaSequence {
  unsigned long k = 0;
  unsigned long n = 0;
  Integer q_start;
  std::vector<ExactArea> values;

  Integer q_at(std::size_t index) const { return q_start + index; }
};

/// Areas for q = q_from..q_to inclusive. Throws ValidationError for an empty
/// range or parameters build_polynomial() rejects.
AreaSequence area_sequence(unsigned long k, unsigned long n, const Integer& q_from,
                           const Integer& q_to);

/// Entry j is S^{q+1}/S^q for q = q_at(j); std::nullopt where S^q = 0.
std::vector<std::optional<Rational>> ratio_sequence(const AreaSequence& s);

/// Order-d forward difference sum_i (-1)^{d-i} C(d,i) a_{j+i} for every
/// admissible j. Throws ValidationError("order", ...) unless 1 <= d < size.
std::vector<Rational> forward_difference(std::span<const Rational> values, unsigned d);
std::vector<Rational> finite_difference(const AreaSequence& s, unsigned d);

struct SequenceReport {
  std::vector<std::optional<Rational>> ratios;
  unsigned difference_order = 0;
  std::vector<Rational> differences;  // empty when the sequence is too short
  /// Defined ratios strictly decrease from one q to the next.
  bool monotone_decreasing = false;
  /// |last defined ratio - 1|.
  std::optional<Rational> distance_to_limit;
  /// No defined ratio at all.
  bool insufficient_data = true;
};

SequenceReport convergence_report(const AreaSequence& s, unsigned difference_order = 2);

}  // namespace pdiag
