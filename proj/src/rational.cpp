#include "riffle/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace riffle {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(trim(s.substr(0, slash)));
    BigInt den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal '" + std::string(s) + "'");
    BigInt num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(negative ? BigInt(-num) : num, den);
    r.canonicalize();
    return r;
  }

  return Rational(parse_integer(s));
}

std::string to_string(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: argument must be positive");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace riffle
