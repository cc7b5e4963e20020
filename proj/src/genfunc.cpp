#include "riffle/genfunc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "riffle/necklace.hpp"

namespace riffle {

namespace {

void check_series_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("deck size must be non-negative");
  if (n > cap)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the series cap " + std::to_string(cap));
}

Rational monomial_weight(const Composition& r, const BiasVector& bias) {
  Rational w = 1;
  for (int i = 0; i < r.size(); ++i) w *= pow(bias[i], static_cast<unsigned long>(r[i]));
  return w;
}

}  // namespace

// ---------------------------------------------------------- CyclePolynomial

Rational CyclePolynomial::coefficient(const CycleType& type) const {
  auto it = terms.find(type);
  return it == terms.end() ? Rational(0) : it->second;
}

Rational CyclePolynomial::total() const {
  Rational s = 0;
  for (const auto& [type, c] : terms) s += c;
  return s;
}

Polynomial CyclePolynomial::fixed_point_marginal() const {
  Polynomial p;
  for (const auto& [type, c] : terms) p += Polynomial::monomial(c, type.count(1));
  return p;
}

CyclePolynomial cycle_structure_pgf(int n, const BiasVector& bias, int cap) {
  check_series_cap(n, cap);
  // by_length[i][m] = coefficient of y^m in prod_r (1 - p^r y)^{-M(r)}, y = u^i x_i.
  std::vector<std::vector<Rational>> by_length(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    const int top = n / i;
    std::vector<Rational> series(static_cast<std::size_t>(top) + 1);
    series[0] = 1;
    for (const auto& r : weak_compositions(i, bias.size())) {
      const BigInt mult = primitive_count(r);
      const Rational c = monomial_weight(r, bias);
      if (mult == 0 || c == 0) continue;
      // (1 - c y)^{-M} = sum_m C(M + m - 1, m) c^m y^m
      std::vector<Rational> factor(static_cast<std::size_t>(top) + 1);
      BigInt choose = 1;
      Rational cpow = 1;
      for (int m = 0; m <= top; ++m) {
        factor[static_cast<std::size_t>(m)] = Rational(choose) * cpow;
        choose = choose * (mult + m) / (m + 1);
        cpow *= c;
      }
      std::vector<Rational> next(static_cast<std::size_t>(top) + 1);
      for (int x = 0; x <= top; ++x)
        for (int y = 0; x + y <= top; ++y)
          next[static_cast<std::size_t>(x + y)] += series[static_cast<std::size_t>(x)] * factor[static_cast<std::size_t>(y)];
      series = std::move(next);
    }
    by_length[static_cast<std::size_t>(i)] = std::move(series);
  }

  CyclePolynomial out;
  out.n = n;
  for (const auto& type : cycle_types_of(n)) {
    Rational c = 1;
    for (int i = 1; i <= n && c != 0; ++i) c *= by_length[static_cast<std::size_t>(i)][static_cast<std::size_t>(type.count(i))];
    if (c != 0) out.terms.emplace(type, c);
  }
  return out;
}

CyclePolynomial cycle_structure_pgf(const ShuffleSpec& spec, int cap) {
  return cycle_structure_pgf(spec.n, tensor_power(spec.bias, spec.k), cap);
}

Rational expected_fixed_points(const ShuffleSpec& spec) {
  if (spec.n < 0 || spec.k < 0) throw std::invalid_argument("invalid shuffle spec");
  Rational e = 0;
  for (int j = 1; j <= spec.n; ++j)
    e += pow(spec.bias.power_sum(static_cast<unsigned long>(j)), static_cast<unsigned long>(spec.k));
  return e;
}

Polynomial fixed_point_pgf(int n, const BiasVector& bias, int cap) {
  check_series_cap(n, cap);
  const auto len = static_cast<std::size_t>(n) + 1;
  // series[m] is the coefficient of y^m, a polynomial in x.
  std::vector<Polynomial> series(len);
  series[0] = Rational(1);
  for (const auto& p : bias.probabilities()) {
    for (std::size_t m = len; m-- > 1;) series[m] -= series[m - 1] * p;
    const Polynomial px = Polynomial::monomial(p, 1);
    for (std::size_t m = 1; m < len; ++m) series[m] += series[m - 1] * px;
  }
  for (std::size_t m = 1; m < len; ++m) series[m] += series[m - 1];
  return series[static_cast<std::size_t>(n)];
}

Polynomial fixed_point_pgf(const ShuffleSpec& spec, int cap) {
  return fixed_point_pgf(spec.n, tensor_power(spec.bias, spec.k), cap);
}

// ---------------------------------------------------------------- QSeries

QSeries QSeries::q_exponential(const Rational& c, int truncation) {
  QSeries s;
  s.truncation = truncation;
  Rational cpow = 1;
  for (int j = 0; j <= truncation; ++j) {
    s.coefficients.emplace_back(cpow);
    cpow *= c;
  }
  return s;
}

QSeries QSeries::operator*(const QSeries& rhs) const {
  if (truncation != rhs.truncation) throw std::invalid_argument("QSeries truncations differ");
  QSeries out;
  out.truncation = truncation;
  out.coefficients.resize(static_cast<std::size_t>(truncation) + 1);
  for (int m = 0; m <= truncation; ++m)
    for (int j = 0; j <= m; ++j) {
      const auto& f = coefficients[static_cast<std::size_t>(j)];
      const auto& g = rhs.coefficients[static_cast<std::size_t>(m - j)];
      if (f.is_zero() || g.is_zero()) continue;
      out.coefficients[static_cast<std::size_t>(m)] += q_binomial(m, j) * f * g;
    }
  return out;
}

QPolynomial inversion_pgf(int n, const BiasVector& bias, int cap) {
  check_series_cap(n, cap);
  QSeries product;
  product.truncation = n;
  product.coefficients.resize(static_cast<std::size_t>(n) + 1);
  product.coefficients[0] = Rational(1);
  for (const auto& p : bias.probabilities()) product = product * QSeries::q_exponential(p, n);
  return product.coefficients[static_cast<std::size_t>(n)];
}

QPolynomial inversion_pgf(const ShuffleSpec& spec, int cap) {
  return inversion_pgf(spec.n, tensor_power(spec.bias, spec.k), cap);
}

QPolynomial inversion_pgf_by_compositions(int n, const BiasVector& bias, int cap) {
  check_series_cap(n, cap);
  QPolynomial total;
  for (const auto& b : weak_compositions(n, bias.size())) {
    const Rational w = monomial_weight(b, bias);
    if (w == 0) continue;
    total += q_multinomial(n, b) * w;
  }
  return total;
}

Rational expected_inversions(const ShuffleSpec& spec) {
  if (spec.n < 0 || spec.k < 0) throw std::invalid_argument("invalid shuffle spec");
  const Rational pairs(binomial(spec.n, 2));
  return pairs / 2 * (1 - pow(spec.bias.power_sum(2), static_cast<unsigned long>(spec.k)));
}

Rational expected_descents(const ShuffleSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("expected_descents needs n >= 1");
  if (spec.k < 0) throw std::invalid_argument("invalid shuffle spec");
  return 1 + Rational(spec.n - 1) / 2 * (1 - pow(spec.bias.power_sum(2), static_cast<unsigned long>(spec.k)));
}

double euler_identity_residual(double x, double q, int terms) {
  if (!(std::abs(x) < 1.0) || !(std::abs(q) < 1.0))
    throw std::domain_error("Euler's identity needs |x| < 1 and |q| < 1");
  if (terms < 0) throw std::domain_error("terms must be non-negative");
  double product = 1.0;
  double qj = 1.0;
  for (int j = 0; j < terms; ++j) {
    product /= 1.0 - x * qj;
    qj *= q;
  }
  double series = 1.0;
  double term = 1.0;
  double qi = 1.0;
  for (int j = 1; j < 100000; ++j) {
    qi *= q;
    term *= x / (1.0 - qi);
    series += term;
    if (std::abs(term) <= 1e-18 * std::abs(series)) break;
  }
  return std::abs(product - series);
}

bool translate_identity_check(int n, int a) {
  if (n < 0 || n > 7 || a < 1 || a > 3)
    throw std::invalid_argument("translate_identity_check supports n <= 7 and a <= 3");
  struct Row {
    DescentSet descents;
    CycleType type;
  };
  std::vector<Row> rows;
  for_each_permutation(n, [&](const Permutation& p) { rows.push_back({descent_set(p), cycle_type(p)}); });

  for (const auto& b : weak_compositions(n, a)) {
    const DescentSet allowed = DescentSet::from_composition(b);
    std::map<CycleType, long> by_permutation;
    for (const auto& row : rows)
      if (row.descents.is_subset_of(allowed)) ++by_permutation[row.type];
    std::map<CycleType, long> by_necklaces;
    for (const auto& ms : enumerate_primitive_multisets(b)) ++by_necklaces[ms.lengths()];
    if (by_permutation != by_necklaces) return false;
  }
  return true;
}

}  // namespace riffle
