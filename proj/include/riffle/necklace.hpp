#pragma once

/**
 * Words over the ordered alphabet {1..a}, their standard permutations, and
 * the decomposition of a word into a multiset of necklaces by following the
 * cycles of its standard permutation.
 *
 * Restricted to words with r_i copies of letter i, the decomposition is a
 * cycle-type preserving bijection from {pi : Des(pi^-1) within the partial
 * sums of r} onto multisets of primitive necklaces with content r.
 */

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "riffle/permutation.hpp"
#include "riffle/rational.hpp"

namespace riffle {

inline constexpr int kNecklaceEnumerationCap = 12;

struct Word {
  std::vector<int> letters;  // each in 1..a

  int size() const noexcept { return static_cast<int>(letters.size()); }
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Cyclic word stored as its lexicographically least rotation.
class Necklace {
 public:
  /// Throws std::invalid_argument for an empty sequence or letters < 1.
  explicit Necklace(std::vector<int> letters);

  std::span<const int> letters() const noexcept { return letters_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }

  friend auto operator<=>(const Necklace&, const Necklace&) = default;

 private:
  std::vector<int> letters_;
};

/// Necklace -> multiplicity (always >= 1).
struct NecklaceMultiset {
  std::map<Necklace, int> entries;

  void add(const Necklace& nk, int multiplicity = 1);
  int total_size() const;
  CycleType lengths() const;
  /// Count of each letter 1..a across all necklaces with multiplicity.
  std::vector<int> content(int alphabet) const;

  friend auto operator<=>(const NecklaceMultiset&, const NecklaceMultiset&) = default;
};

/// st(w): position j receives the rank of w_j; equal letters rank left to right.
Permutation standardize(const Word& w);

/// U(w): each cycle of st(w) with every number m replaced by the m-th
/// smallest letter of w.
NecklaceMultiset necklace_decomposition(const Word& w);

/// The unique word with parts[i-1] copies of letter i whose standard
/// permutation is p.  Throws std::invalid_argument unless Des(p^-1) lies in
/// the partial sums of parts.
Word word_from_permutation(const Permutation& p, const Composition& parts);

bool is_primitive(const Necklace& nk);

/// M(r_1..r_a) = (1/n) sum_{d | gcd} mu(d) (n/d)! / prod (r_i/d)!.
/// Throws std::invalid_argument if every part is zero.
BigInt primitive_count(const Composition& parts);

/// All primitive necklaces whose letter i occurs parts[i-1] times, by
/// filtering the distinct linear arrangements.  Empty for all-zero content.
std::vector<Necklace> enumerate_primitive_necklaces(const Composition& parts,
                                                    int cap = kNecklaceEnumerationCap);

/// All multisets of primitive necklaces with exactly the given content.
std::vector<NecklaceMultiset> enumerate_primitive_multisets(const Composition& parts,
                                                            int cap = kNecklaceEnumerationCap);

/// Restriction of U to permutations with Des(p^-1) within the partial sums
/// of parts (the standard permutations of words with that content).
/// Throws std::invalid_argument outside that domain.
NecklaceMultiset ubar_forward(const Permutation& p, const Composition& parts);

/// Whether Des(p^-1) lies within the partial sums of parts.
bool in_ubar_domain(const Permutation& p, const Composition& parts);

}  // namespace riffle
