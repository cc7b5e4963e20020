#pragma once

// Dense univariate polynomials with exact rational coefficients, plus the
// q-analogs [n]!, q-binomials and q-multinomials built on them.

#include <initializer_list>
#include <vector>

#include "riffle/permutation.hpp"
#include "riffle/rational.hpp"

namespace riffle {

class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial monomial(const Rational& coefficient, int degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Zero for powers above the degree.
  Rational coefficient(int power) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact long division; throws std::domain_error if divisor is zero or
  /// the remainder is nonzero.
  Polynomial divide_exact(const Polynomial& divisor) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomials in q whose coefficients count inversions.
using QPolynomial = Polynomial;

/// [j] = 1 + q + ... + q^(j-1).
QPolynomial q_integer(int j);
/// [n]! = prod_{i=1..n} [i].
QPolynomial q_factorial(int n);
/// Gaussian binomial via the q-Pascal rule; zero outside 0 <= k <= n.
QPolynomial q_binomial(int n, int k);
/// [n]! / ([b1]! ... [ba]!).  Throws std::invalid_argument if sum(parts) != n.
QPolynomial q_multinomial(int n, const Composition& parts);

}  // namespace riffle
