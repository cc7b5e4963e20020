#pragma once

// Counting permutations and n-cycles by descent set, and involutions by
// descent class through symmetric matrices.  Each closed form has a
// brute-force counterpart over S_n.
//
// Two descent-set conventions appear.  DescentSet always contains n; the
// determinant entry points take J as a subset of {1..n-1} and append n
// themselves.

#include <functional>
#include <span>
#include <vector>

#include "riffle/permutation.hpp"
#include "riffle/rational.hpp"

namespace riffle {

inline constexpr int kBruteForceCap = 10;

/// Permutations with descent set within the partial sums of parts:
/// the multinomial n! / prod b_i!.
BigInt count_descent_subset(const Composition& parts);

/// Inclusion-exclusion over K within J (K containing n).
BigInt count_descent_exact(const DescentSet& j);

/// Determinant det[C(n - j_l, j_{m+1} - j_l)]_{l,m=0..k} for interior
/// positions j_1 < .. < j_k in {1..n-1}.
BigInt count_descent_det(std::span<const int> interior, int n);
BigInt count_descent_det(const DescentSet& j);

/// n-cycles with descent set exactly J, by inclusion-exclusion over M(C(K)).
BigInt ncycles_descent_ie(const DescentSet& j);

/// n-cycles with descent set exactly J, by the divisor sum of determinants.
/// Throws std::logic_error if the divisor sum is not a multiple of n.
BigInt ncycles_descent_det(const DescentSet& j);

/// Involutions with descent set within K, as the number of symmetric
/// non-negative integer matrices with row sums k_i - k_{i-1}.
BigInt involutions_descent_subset(const DescentSet& k);

/// Symmetric r x r non-negative integer matrices with the given row sums.
std::vector<std::vector<std::vector<int>>> symmetric_matrices(std::span<const int> row_sums);

/// Exact count over all n! permutations.  Throws above `cap`.
BigInt brute_count(int n, const std::function<bool(const Permutation&)>& predicate,
                   int cap = kBruteForceCap);

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> matrix);

}  // namespace riffle
