#pragma once

/**
 * Generating functions for statistics of a biased shuffle.
 *
 * Cycle structure comes from the necklace product
 *   sum_n u^n E_n prod x_i^{N_i}
 *     = prod_i prod_{r_1+..+r_a = i} (1 - p^r u^i x_i)^{-M(r)},
 * inversions from the q-exponential product
 *   sum_n u^n/[n]! E_n q^Inv = prod_i sum_j (u p_i)^j / [j]!,
 * and the moment formulas for fixed points, inversions and descents are
 * closed forms in the power sums of p.  Statistics after k shuffles use the
 * k-fold tensored bias, so they do not need an enumeration of S_n.
 */

#include <map>
#include <vector>

#include "riffle/permutation.hpp"
#include "riffle/polynomial.hpp"
#include "riffle/rational.hpp"
#include "riffle/shuffle.hpp"

namespace riffle {

inline constexpr int kSeriesCap = 8;

/// Joint probability generating function of (N_1, .., N_n) at degree n.
struct CyclePolynomial {
  int n = 0;
  std::map<CycleType, Rational> terms;  // zero coefficients omitted

  Rational coefficient(const CycleType& type) const;
  Rational total() const;
  /// Set x_1 = x and every other x_i = 1.
  Polynomial fixed_point_marginal() const;

  friend bool operator==(const CyclePolynomial&, const CyclePolynomial&) = default;
};

/// Series in u whose coefficient of u^m is stored times [m]!, i.e.
/// F = sum_m coefficients[m] u^m / [m]!.
struct QSeries {
  int truncation = 0;
  std::vector<QPolynomial> coefficients;  // size truncation + 1

  /// sum_j (c u)^j / [j]! truncated at u^truncation.
  static QSeries q_exponential(const Rational& c, int truncation);
  /// Product in the q-exponential basis: (FG)_m = sum_j [m choose j]_q F_j G_{m-j}.
  QSeries operator*(const QSeries& rhs) const;
};

CyclePolynomial cycle_structure_pgf(int n, const BiasVector& bias, int cap = kSeriesCap);
CyclePolynomial cycle_structure_pgf(const ShuffleSpec& spec, int cap = kSeriesCap);

/// sum_{j=1..n} (p_1^j + .. + p_a^j)^k.
Rational expected_fixed_points(const ShuffleSpec& spec);

/// Coefficient of y^n in 1/(1-y) prod_i (1 - p_i y)/(1 - p_i x y), as a
/// polynomial in x.
Polynomial fixed_point_pgf(int n, const BiasVector& bias, int cap = kSeriesCap);
Polynomial fixed_point_pgf(const ShuffleSpec& spec, int cap = kSeriesCap);

/// E q^Inv by coefficient extraction from the q-exponential product.
QPolynomial inversion_pgf(int n, const BiasVector& bias, int cap = kSeriesCap);
QPolynomial inversion_pgf(const ShuffleSpec& spec, int cap = kSeriesCap);
/// The same polynomial as sum over cuts b of prod p_i^{b_i} [n; b]_q.
QPolynomial inversion_pgf_by_compositions(int n, const BiasVector& bias, int cap = kSeriesCap);

/// (C(n,2)/2) (1 - (sum p_i^2)^k).
Rational expected_inversions(const ShuffleSpec& spec);
/// 1 + ((n-1)/2) (1 - (sum p_i^2)^k); n counts as a descent.  Needs n >= 1.
Rational expected_descents(const ShuffleSpec& spec);

/// |prod_{j<terms} 1/(1 - x q^j) - sum_{j>=0} x^j / ((1-q)..(1-q^j))|.
/// The product is truncated at `terms` factors; the series is summed to
/// convergence, so the residual is the product's truncation error.
/// Throws std::domain_error unless |x| < 1 and |q| < 1.
double euler_identity_residual(double x, double q, int terms);

/// For every cut b of n into a parts and every cycle type: permutations with
/// descent set within the partial sums of b and that cycle type are exactly
/// as many as multisets of primitive necklaces with content b and those
/// lengths.  Throws std::invalid_argument above n = 7 or a = 3.
bool translate_identity_check(int n, int a);

}  // namespace riffle
