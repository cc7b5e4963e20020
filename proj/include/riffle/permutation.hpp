#pragma once

/**
 * Permutations of {1..n} in one-line form and the statistics read from them:
 * descent sets (with the convention that n is always a descent), inversions
 * and cycle types.  Positions and labels are 1-based throughout.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "riffle/rational.hpp"

namespace riffle {

class Permutation {
 public:
  Permutation() = default;  // the empty permutation of S_0

  /// images[i-1] = pi(i).  Throws std::invalid_argument unless images is a
  /// bijection on {1..images.size()}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Inverse of rank(): the permutation at the given lexicographic index.
  static Permutation from_rank(int n, std::uint64_t rank);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  /// Lexicographic index among all n! permutations (n <= 20).
  std::uint64_t rank() const;

  bool is_identity() const noexcept;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (outer o inner)(i) = outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation invert(const Permutation& p);

/// Returns p conjugated by sigma: sigma o p o sigma^-1.
Permutation conjugate(const Permutation& p, const Permutation& sigma);

/// Weak composition b_1..b_a of n.  Zero parts are empty piles.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);  // throws on negative parts

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int total() const noexcept { return total_; }

  /// {b1, b1+b2, ..., n} with duplicates and 0 removed.
  std::vector<int> partial_sums() const;

  /// The same composition with zero parts dropped.
  Composition without_zeros() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// All weak compositions of n into exactly `parts` parts, lexicographic order.
std::vector<Composition> weak_compositions(int n, int parts);
/// All compositions of n into positive parts.
std::vector<Composition> compositions(int n);

BigInt multinomial(const Composition& parts);

/// Sorted descent positions; n is always a member when n >= 1.
class DescentSet {
 public:
  DescentSet() = default;
  /// Adds n automatically.  Throws if a position lies outside {1..n}.
  DescentSet(int n, std::vector<int> positions);

  /// The descent set {partial sums of parts} of a composition.
  static DescentSet from_composition(const Composition& parts);

  int n() const noexcept { return n_; }
  std::span<const int> positions() const noexcept { return positions_; }
  int size() const noexcept { return static_cast<int>(positions_.size()); }
  bool contains(int position) const;
  bool is_subset_of(const DescentSet& other) const;

  /// Positions below n, i.e. the set as a subset of {1..n-1}.
  std::vector<int> interior() const;

  /// Gap sequence C(J) = (j1 - 0, j2 - j1, ..., n - j_{d-1}).
  Composition composition() const;

  /// Every descent set of S_n (all 2^(n-1) subsets of {1..n-1}, plus n).
  static std::vector<DescentSet> all(int n);

  friend auto operator<=>(const DescentSet&, const DescentSet&) = default;

 private:
  int n_ = 0;
  std::vector<int> positions_;
};

/// counts[len] = number of cycles of that length; zero counts are not stored.
struct CycleType {
  std::map<int, int> counts;

  int count(int length) const;
  int total_size() const;  // sum of length * count

  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

DescentSet descent_set(const Permutation& p);
long inversions(const Permutation& p);
CycleType cycle_type(const Permutation& p);
int fixed_points(const Permutation& p);
bool is_n_cycle(const Permutation& p);
bool is_involution(const Permutation& p);

/// Cycles as sequences (c, p(c), p(p(c)), ...), each starting at its least
/// element, ordered by that element.
std::vector<std::vector<int>> cycles(const Permutation& p);

/// All partitions of n as cycle types, in no particular order.
std::vector<CycleType> cycle_types_of(int n);

/// Calls fn on each permutation of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

std::uint64_t factorial_u64(int n);  // n <= 20

}  // namespace riffle
