#pragma once

#include <cstdint>
#include <vector>

#include "pdiag/lattice_point.hpp"
#include "pdiag/rational.hpp"

namespace pdiag {

/// P(x) = sum_{i=0}^{k} q^{n+i} x^{k-i}, identified by the triple (q, n, k).
///
/// Only build_polynomial() creates instances, so every value in circulation
/// satisfies q >= 1, n >= 0, k >= 1. q = 1 is legal; its diagram is degenerate.
class SpecialPolynomial {
 public:
  const Integer& q() const noexcept { return q_; }
  unsigned long n() const noexcept { return n_; }
  unsigned long k() const noexcept { return k_; }

  /// Coefficient of x^{k-i}, i.e. q^{n+i}. Requires i <= k.
  Integer coefficient(unsigned long i) const;

  bool degenerate() const { return q_ == 1; }

  friend bool operator==(const SpecialPolynomial& a, const SpecialPolynomial& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.k_ == b.k_;
  }

 private:
  friend SpecialPolynomial build_polynomial(const Integer& q, std::int64_t n, std::int64_t k);

  SpecialPolynomial(Integer q, unsigned long n, unsigned long k)
      : q_(std::move(q)), n_(n), k_(k) {}

  Integer q_;
  unsigned long n_;
  unsigned long k_;
};

/// Throws ValidationError naming "q", "n" or "k" when q < 1, n < 0 or k < 1.
SpecialPolynomial build_polynomial(const Integer& q, std::int64_t n, std::int64_t k);

Integer evaluate_polynomial(const SpecialPolynomial& p, const Integer& x);

/// Monomial q^{n+i} x^{k-i} goes to the lattice point (q^{n+i}, k-i); i = 0..k in order.
std::vector<LatticePoint> monomial_map(const SpecialPolynomial& p);

}  // namespace pdiag
