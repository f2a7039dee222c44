#include "pdiag/polynomial.hpp"

#include <string>

#include "pdiag/errors.hpp"

namespace pdiag {

Integer SpecialPolynomial::coefficient(unsigned long i) const { return power(q_, n_ + i); }

SpecialPolynomial build_polynomial(const Integer& q, std::int64_t n, std::int64_t k) {
  if (q < 1) throw ValidationError("q", "must be a positive integer, got " + q.get_str());
  if (n < 0) throw ValidationError("n", "must be non-negative, got " + std::to_string(n));
  if (k < 1) throw ValidationError("k", "degree must be at least 1, got " + std::to_string(k));
  return SpecialPolynomial(q, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

Integer evaluate_polynomial(const SpecialPolynomial& p, const Integer& x) {
  // Horner over coefficients q^n, q^{n+1}, ..., q^{n+k}.
  Integer acc = 0;
  Integer coeff = power(p.q(), p.n());
  for (unsigned long i = 0; i <= p.k(); ++i) {
    acc = acc * x + coeff;
    coeff *= p.q();
  }
  return acc;
}

std::vector<LatticePoint> monomial_map(const SpecialPolynomial& p) {
  std::vector<LatticePoint> points;
  points.reserve(p.k() + 1);
  Integer coeff = power(p.q(), p.n());
  for (unsigned long i = 0; i <= p.k(); ++i) {
    points.push_back({coeff, p.k() - i});
    coeff *= p.q();
  }
  return points;
}

}  // namespace pdiag
