#include "riffle/polynomial.hpp"

#include <stdexcept>

namespace riffle {

Polynomial::Polynomial(const Rational& constant) : coeffs_{constant} { trim(); }

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::monomial(const Rational& coefficient, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw std::domain_error("polynomial division leaves a remainder");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const Rational& lead = divisor.coeffs_.back();
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("polynomial division leaves a remainder");
  return Polynomial(std::move(quot));
}

QPolynomial q_integer(int j) {
  if (j < 0) throw std::invalid_argument("q_integer: negative argument");
  return QPolynomial(std::vector<Rational>(static_cast<std::size_t>(j), Rational(1)));
}

QPolynomial q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  QPolynomial r(Rational(1));
  for (int i = 2; i <= n; ++i) r *= q_integer(i);
  return r;
}

QPolynomial q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  // Row-by-row q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j].
  std::vector<QPolynomial> row{QPolynomial(Rational(1))};
  for (int m = 1; m <= n; ++m) {
    std::vector<QPolynomial> next(static_cast<std::size_t>(m) + 1);
    next[0] = Rational(1);
    next[static_cast<std::size_t>(m)] = Rational(1);
    for (int j = 1; j < m; ++j)
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] +
          QPolynomial::monomial(1, j) * row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

QPolynomial q_multinomial(int n, const Composition& parts) {
  if (parts.total() != n)
    throw std::invalid_argument("q_multinomial: parts sum to " + std::to_string(parts.total()) +
                                ", expected " + std::to_string(n));
  QPolynomial denominator(Rational(1));
  for (int b : parts.parts()) denominator *= q_factorial(b);
  return q_factorial(n).divide_exact(denominator);
}

}  // namespace riffle
