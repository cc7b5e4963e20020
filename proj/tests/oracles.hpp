#pragma once

// Reference implementations written directly from the definitions, kept
// independent of the library code they are compared against.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "riffle/rational.hpp"

namespace oracle {

using riffle::Rational;
using Perm = std::vector<int>;  // one-line, 1-based values

inline void for_each_perm(int n, const std::function<void(const Perm&)>& fn) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do fn(p);
  while (std::next_permutation(p.begin(), p.end()));
}

inline long inversions(const Perm& p) {
  long count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j];
  return count;
}

inline std::vector<int> descents(const Perm& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) out.push_back(static_cast<int>(i) + 1);
  if (!p.empty()) out.push_back(static_cast<int>(p.size()));
  return out;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return q;
}

// Sorted list of cycle lengths.
inline std::vector<int> cycle_lengths(const Perm& p) {
  std::vector<bool> seen(p.size());
  std::vector<int> out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x] - 1)) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int fixed_points(const Perm& p) {
  int f = 0;
  for (std::size_t i = 0; i < p.size(); ++i) f += p[i] == static_cast<int>(i) + 1;
  return f;
}

// A biased a-shuffle as a law on arrangements.  Every word L in {0..a-1}^n
// names a cut (pile i holds the next count(L, i) cards from the top) and the
// interleaving that draws position j from pile L[j].  Its weight is
// prod p[L[j]]: the multinomial cut probability times the uniform
// interleaving probability.
inline std::map<Perm, Rational> shuffle_law(int n, const std::vector<Rational>& p) {
  const int a = static_cast<int>(p.size());
  std::map<Perm, Rational> law;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> start(static_cast<std::size_t>(a) + 1, 1);
    for (int l : word) ++start[static_cast<std::size_t>(l) + 1];
    for (int i = 1; i <= a; ++i) start[static_cast<std::size_t>(i)] += start[static_cast<std::size_t>(i) - 1] - 1;
    Perm pi;
    Rational weight = 1;
    for (int l : word) {
      pi.push_back(start[static_cast<std::size_t>(l)]++);
      weight *= p[static_cast<std::size_t>(l)];
    }
    if (weight != 0) law[pi] += weight;
    int pos = n - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == a - 1) word[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++word[static_cast<std::size_t>(pos)];
  }
  return law;
}

// Law of sigma o tau for sigma ~ first, tau ~ second.
inline std::map<Perm, Rational> compose_laws(const std::map<Perm, Rational>& first,
                                             const std::map<Perm, Rational>& second) {
  std::map<Perm, Rational> out;
  for (const auto& [s, ms] : first)
    for (const auto& [t, mt] : second) {
      Perm c(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) c[i] = s[static_cast<std::size_t>(t[i] - 1)];
      out[c] += ms * mt;
    }
  return out;
}

// Number of distinct rotations-classes of words with the given content that
// are aperiodic, by listing every word and keeping least rotations.
inline long primitive_necklaces(const std::vector<int>& content) {
  std::vector<int> word;
  for (std::size_t i = 0; i < content.size(); ++i) word.insert(word.end(), static_cast<std::size_t>(content[i]), static_cast<int>(i) + 1);
  if (word.empty()) return 0;
  long count = 0;
  do {
    bool least = true;
    bool aperiodic = true;
    for (std::size_t r = 1; r < word.size(); ++r) {
      std::vector<int> rot(word.begin() + static_cast<long>(r), word.end());
      rot.insert(rot.end(), word.begin(), word.begin() + static_cast<long>(r));
      if (rot < word) least = false;
      if (rot == word) aperiodic = false;
    }
    count += least && aperiodic;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

}  // namespace oracle
