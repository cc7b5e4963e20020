#include "riffle/counting.hpp"

#include <stdexcept>
#include <string>

#include "riffle/necklace.hpp"

namespace riffle {

BigInt count_descent_subset(const Composition& parts) { return multinomial(parts); }

namespace {

// Calls fn(K, sign) for each K with n in K within J; sign = (-1)^{|J|-|K|}.
void for_each_sub_descent_set(const DescentSet& j, const std::function<void(const DescentSet&, int)>& fn) {
  const std::vector<int> interior = j.interior();
  const auto k = interior.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> chosen;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) chosen.push_back(interior[i]);
    const int missing = static_cast<int>(k - chosen.size());
    fn(DescentSet(j.n(), std::move(chosen)), missing % 2 == 0 ? 1 : -1);
  }
}

}  // namespace

BigInt count_descent_exact(const DescentSet& j) {
  BigInt total = 0;
  for_each_sub_descent_set(j, [&](const DescentSet& k, int sign) { total += sign * multinomial(k.composition()); });
  return total;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t c = k + 1; c < n; ++c) {
        BigInt v = m[i][c] * m[k][k] - m[i][k] * m[k][c];
        m[i][c] = v / prev;  // exact by Sylvester's identity
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt count_descent_det(std::span<const int> interior, int n) {
  if (n < 1) throw std::invalid_argument("count_descent_det: n must be positive");
  std::vector<int> j{0};
  for (int x : interior) {
    if (x < 1 || x >= n || x <= j.back())
      throw std::invalid_argument("descent positions must be strictly increasing within 1..n-1");
    j.push_back(x);
  }
  j.push_back(n);
  const std::size_t size = j.size() - 1;  // k + 1
  std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size));
  for (std::size_t l = 0; l < size; ++l)
    for (std::size_t c = 0; c < size; ++c) m[l][c] = binomial(n - j[l], j[c + 1] - j[l]);
  return bareiss_determinant(std::move(m));
}

BigInt count_descent_det(const DescentSet& j) {
  const auto interior = j.interior();
  return count_descent_det(interior, j.n());
}

BigInt ncycles_descent_ie(const DescentSet& j) {
  BigInt total = 0;
  for_each_sub_descent_set(j, [&](const DescentSet& k, int sign) {
    total += sign * primitive_count(k.composition());
  });
  return total;
}

BigInt ncycles_descent_det(const DescentSet& j) {
  const int n = j.n();
  if (n < 1) throw std::invalid_argument("ncycles_descent_det: n must be positive");
  const std::vector<int> interior = j.interior();
  BigInt sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    std::vector<int> scaled;
    for (int x : interior)
      if (x % d == 0) scaled.push_back(x / d);
    const int sign = (interior.size() - scaled.size()) % 2 == 0 ? 1 : -1;
    sum += mu * sign * count_descent_det(scaled, n / d);
  }
  if (sum % n != 0)
    throw std::logic_error("arithmetic fault: n-cycle divisor sum " + sum.get_str() + " is not divisible by " +
                           std::to_string(n));
  return sum / n;
}

namespace {

// Fills the upper triangle row by row; `left[i]` is what row i still needs.
void fill_symmetric(std::size_t row, std::size_t col, std::vector<int>& left, std::vector<std::vector<int>>& m,
                    std::vector<std::vector<std::vector<int>>>* out, BigInt& count) {
  const std::size_t r = left.size();
  if (row == r) {
    ++count;
    if (out) out->push_back(m);
    return;
  }
  if (col == r) {
    if (left[row] == 0) fill_symmetric(row + 1, row + 1, left, m, out, count);
    return;
  }
  if (col == row) {
    // Diagonal entry takes whatever the rest of the row cannot; try every value.
    for (int v = 0; v <= left[row]; ++v) {
      m[row][row] = v;
      left[row] -= v;
      fill_symmetric(row, col + 1, left, m, out, count);
      left[row] += v;
    }
    m[row][row] = 0;
    return;
  }
  const int cap = std::min(left[row], left[col]);
  for (int v = 0; v <= cap; ++v) {
    m[row][col] = m[col][row] = v;
    left[row] -= v;
    left[col] -= v;
    fill_symmetric(row, col + 1, left, m, out, count);
    left[row] += v;
    left[col] += v;
  }
  m[row][col] = m[col][row] = 0;
}

BigInt walk_symmetric(std::span<const int> row_sums, std::vector<std::vector<std::vector<int>>>* out) {
  std::vector<int> left(row_sums.begin(), row_sums.end());
  for (int s : left)
    if (s < 0) throw std::invalid_argument("row sums must be non-negative");
  std::vector<std::vector<int>> m(left.size(), std::vector<int>(left.size(), 0));
  BigInt count = 0;
  fill_symmetric(0, 0, left, m, out, count);
  return count;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> symmetric_matrices(std::span<const int> row_sums) {
  std::vector<std::vector<std::vector<int>>> out;
  walk_symmetric(row_sums, &out);
  return out;
}

BigInt involutions_descent_subset(const DescentSet& k) {
  const auto parts = k.composition();
  return walk_symmetric(parts.parts(), nullptr);
}

BigInt brute_count(int n, const std::function<bool(const Permutation&)>& predicate, int cap) {
  if (n < 0) throw std::invalid_argument("brute_count: negative n");
  if (n > cap)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the brute-force cap " + std::to_string(cap));
  BigInt count = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    if (predicate(p)) ++count;
  });
  return count;
}

}  // namespace riffle
