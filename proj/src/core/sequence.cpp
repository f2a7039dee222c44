#include "pdiag/sequence.hpp"

#include <limits>
#include <string>

#include "pdiag/errors.hpp"

namespace pdiag {

AreaSequence area_sequence(unsigned long k, unsigned long n, const Integer& q_from,
                           const Integer& q_to) {
  if (q_from < 1) throw ValidationError("q_from", "must be a positive integer, got " + q_from.get_str());
  if (q_to < q_from)
    throw ValidationError("q_to", "empty range " + q_from.get_str() + ".." + q_to.get_str());
  const Integer length = q_to - q_from + 1;
  if (!length.fits_ulong_p() ||
      length.get_ui() > std::numeric_limits<std::size_t>::max() / sizeof(ExactArea))
    throw ValidationError("q_to", "range too long: " + length.get_str() + " values");

  AreaSequence s;
  s.k = k;
  s.n = n;
  s.q_start = q_from;
  s.values.reserve(length.get_ui());
  for (Integer q = q_from; q <= q_to; ++q)
    s.values.push_back(area_general(build_polynomial(q, static_cast<std::int64_t>(n),
                                                     static_cast<std::int64_t>(k))));
  return s;
}

std::vector<std::optional<Rational>> ratio_sequence(const AreaSequence& s) {
  std::vector<std::optional<Rational>> ratios;
  if (s.values.size() < 2) return ratios;
  ratios.reserve(s.values.size() - 1);
  for (std::size_t j = 0; j + 1 < s.values.size(); ++j) {
    if (s.values[j].is_zero()) {
      ratios.emplace_back(std::nullopt);
    } else {
      ratios.emplace_back(Rational(s.values[j + 1].value() / s.values[j].value()));
    }
  }
  return ratios;
}

std::vector<Rational> forward_difference(std::span<const Rational> values, unsigned d) {
  if (d == 0) throw ValidationError("order", "difference order must be at least 1");
  if (d >= values.size())
    throw ValidationError("order", "order " + std::to_string(d) + " needs more than " +
                                       std::to_string(d) + " values, got " +
                                       std::to_string(values.size()));

  // Signed binomial weights (-1)^{d-i} C(d,i).
  std::vector<Integer> weights(d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    mpz_bin_uiui(weights[i].get_mpz_t(), d, i);
    if ((d - i) % 2 == 1) weights[i] = -weights[i];
  }

  std::vector<Rational> out;
  out.reserve(values.size() - d);
  for (std::size_t j = 0; j + d < values.size(); ++j) {
    Rational acc = 0;
    for (unsigned i = 0; i <= d; ++i) acc += weights[i] * values[j + i];
    out.push_back(acc);
  }
  return out;
}

std::vector<Rational> finite_difference(const AreaSequence& s, unsigned d) {
  std::vector<Rational> values;
  values.reserve(s.values.size());
  for (const auto& v : s.values) values.push_back(v.value());
  return forward_difference(values, d);
}

SequenceReport convergence_report(const AreaSequence& s, unsigned difference_order) {
  SequenceReport report;
  report.ratios = ratio_sequence(s);
  report.difference_order = difference_order;
  if (difference_order >= 1 && difference_order < s.values.size())
    report.differences = finite_difference(s, difference_order);

  const Rational* previous = nullptr;
  bool decreasing = true;
  for (const auto& r : report.ratios) {
    if (!r) continue;
    if (previous && !(*r < *previous)) decreasing = false;
    previous = &*r;
  }
  report.insufficient_data = previous == nullptr;
  report.monotone_decreasing = !report.insufficient_data && decreasing;
  if (previous) report.distance_to_limit = Rational(abs(*previous - 1));
  return report;
}

}  // namespace pdiag
