#include "pdiag/rational.hpp"

#include <stdexcept>
#include <string>

namespace pdiag {

Integer power(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational make_fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational result(num, den);
  result.canonicalize();
  return result;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_text(text))
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = 1;
  if (slash != std::string_view::npos) den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return make_fraction(num, den);
}

std::string to_decimal_string(const Rational& value, unsigned digits) {
  const Integer scale = power(10, digits);
  const Rational scaled = abs(value) * scale;

  Integer whole;
  mpz_fdiv_q(whole.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const Rational frac = scaled - whole;
  const int cmp_half = cmp(frac, Rational(1, 2));
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(whole.get_mpz_t()))) ++whole;

  std::string text = whole.get_str();
  if (digits > 0) {
    if (text.size() <= digits) text.insert(0, digits - text.size() + 1, '0');
    text.insert(text.size() - digits, 1, '.');
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  if (sgn(value) < 0 && whole != 0) text.insert(0, 1, '-');
  return text;
}

Integer ceil(const Rational& value) {
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

}  // namespace pdiag
