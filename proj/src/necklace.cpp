#include "riffle/necklace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace riffle {

namespace {

std::vector<int> least_rotation(const std::vector<int>& v) {
  std::vector<int> best = v;
  std::vector<int> cur = v;
  for (std::size_t s = 1; s < v.size(); ++s) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

Necklace::Necklace(std::vector<int> letters) {
  if (letters.empty()) throw std::invalid_argument("a necklace needs at least one letter");
  for (int l : letters)
    if (l < 1) throw std::invalid_argument("necklace letters must be >= 1");
  letters_ = least_rotation(letters);
}

void NecklaceMultiset::add(const Necklace& nk, int multiplicity) {
  if (multiplicity < 1) throw std::invalid_argument("necklace multiplicity must be >= 1");
  entries[nk] += multiplicity;
}

int NecklaceMultiset::total_size() const {
  int s = 0;
  for (const auto& [nk, m] : entries) s += nk.size() * m;
  return s;
}

CycleType NecklaceMultiset::lengths() const {
  CycleType t;
  for (const auto& [nk, m] : entries) t.counts[nk.size()] += m;
  return t;
}

std::vector<int> NecklaceMultiset::content(int alphabet) const {
  std::vector<int> c(static_cast<std::size_t>(alphabet), 0);
  for (const auto& [nk, m] : entries)
    for (int l : nk.letters()) {
      if (l > alphabet) throw std::invalid_argument("necklace letter exceeds alphabet");
      c[static_cast<std::size_t>(l - 1)] += m;
    }
  return c;
}

Permutation standardize(const Word& w) {
  const int n = w.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
    return w.letters[static_cast<std::size_t>(l)] < w.letters[static_cast<std::size_t>(r)];
  });
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int rank = 0; rank < n; ++rank) images[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank + 1;
  return Permutation(std::move(images));
}

NecklaceMultiset necklace_decomposition(const Word& w) {
  const Permutation st = standardize(w);
  std::vector<int> sorted = w.letters;
  std::sort(sorted.begin(), sorted.end());
  NecklaceMultiset out;
  for (const auto& cyc : cycles(st)) {
    std::vector<int> letters;
    letters.reserve(cyc.size());
    for (int m : cyc) letters.push_back(sorted[static_cast<std::size_t>(m - 1)]);
    out.add(Necklace(std::move(letters)));
  }
  return out;
}

bool in_ubar_domain(const Permutation& p, const Composition& parts) {
  if (parts.total() != p.size()) return false;
  return descent_set(invert(p)).is_subset_of(DescentSet::from_composition(parts));
}

Word word_from_permutation(const Permutation& p, const Composition& parts) {
  if (parts.total() != p.size())
    throw std::invalid_argument("composition total " + std::to_string(parts.total()) +
                                " does not match permutation size " + std::to_string(p.size()));
  if (!in_ubar_domain(p, parts))
    throw std::invalid_argument("descent set of the inverse is not within the partial sums; no word exists");
  // Block index of each value: values (S_{i-1}, S_i] carry letter i.
  std::vector<int> letter_of_value(static_cast<std::size_t>(p.size()) + 1);
  int value = 1;
  for (int i = 0; i < parts.size(); ++i)
    for (int c = 0; c < parts[i]; ++c) letter_of_value[static_cast<std::size_t>(value++)] = i + 1;
  Word w;
  w.letters.reserve(static_cast<std::size_t>(p.size()));
  for (int j = 1; j <= p.size(); ++j) w.letters.push_back(letter_of_value[static_cast<std::size_t>(p(j))]);
  return w;
}

bool is_primitive(const Necklace& nk) {
  const auto letters = nk.letters();
  const int n = nk.size();
  for (int shift = 1; shift < n; ++shift) {
    if (n % shift != 0) continue;
    bool fixed = true;
    for (int i = 0; i < n && fixed; ++i)
      fixed = letters[static_cast<std::size_t>(i)] == letters[static_cast<std::size_t>((i + shift) % n)];
    if (fixed) return false;
  }
  return true;
}

BigInt primitive_count(const Composition& parts) {
  const int n = parts.total();
  if (n == 0) throw std::invalid_argument("primitive_count: content must be nonempty");
  long g = 0;
  for (int r : parts.parts()) g = std::gcd(g, static_cast<long>(r));
  BigInt sum = 0;
  for (long d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    BigInt term = factorial(static_cast<unsigned long>(n / d));
    for (int r : parts.parts()) term /= factorial(static_cast<unsigned long>(r / d));
    sum += mu * term;
  }
  if (sum % n != 0) throw std::logic_error("primitive_count: Moebius sum not divisible by n");
  return sum / n;
}

std::vector<Necklace> enumerate_primitive_necklaces(const Composition& parts, int cap) {
  const int n = parts.total();
  if (n > cap)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the necklace enumeration cap " +
                                std::to_string(cap));
  std::vector<Necklace> out;
  if (n == 0) return out;
  std::vector<int> word;
  for (int i = 0; i < parts.size(); ++i) word.insert(word.end(), static_cast<std::size_t>(parts[i]), i + 1);
  do {
    // Keep one representative per class: the word that is its own least rotation.
    Necklace nk(word);
    if (std::equal(word.begin(), word.end(), nk.letters().begin()) && is_primitive(nk)) out.push_back(nk);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

namespace {

// Each primitive necklace with content below the target, tagged with its content.
struct Candidate {
  Necklace necklace;
  std::vector<int> content;
};

void sub_contents(const std::vector<int>& target, std::size_t i, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (i == target.size()) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c <= target[i]; ++c) {
    cur[i] = c;
    sub_contents(target, i + 1, cur, out);
  }
}

void choose_multisets(const std::vector<Candidate>& cands, std::size_t from, std::vector<int>& left,
                      int left_total, NecklaceMultiset& cur, std::vector<NecklaceMultiset>& out) {
  if (left_total == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t c = from; c < cands.size(); ++c) {
    const auto& cand = cands[c];
    bool fits = true;
    for (std::size_t i = 0; i < left.size() && fits; ++i) fits = cand.content[i] <= left[i];
    if (!fits) continue;
    for (std::size_t i = 0; i < left.size(); ++i) left[i] -= cand.content[i];
    cur.add(cand.necklace);
    choose_multisets(cands, c, left, left_total - cand.necklace.size(), cur, out);
    if (--cur.entries[cand.necklace] == 0) cur.entries.erase(cand.necklace);
    for (std::size_t i = 0; i < left.size(); ++i) left[i] += cand.content[i];
  }
}

}  // namespace

std::vector<NecklaceMultiset> enumerate_primitive_multisets(const Composition& parts, int cap) {
  if (parts.total() > cap)
    throw std::invalid_argument("n = " + std::to_string(parts.total()) +
                                " exceeds the necklace enumeration cap " + std::to_string(cap));
  std::vector<int> target(parts.parts().begin(), parts.parts().end());
  std::vector<std::vector<int>> contents;
  std::vector<int> cur(target.size(), 0);
  sub_contents(target, 0, cur, contents);

  std::vector<Candidate> cands;
  for (const auto& c : contents)
    for (auto& nk : enumerate_primitive_necklaces(Composition(c), cap)) cands.push_back({std::move(nk), c});

  std::vector<NecklaceMultiset> out;
  NecklaceMultiset acc;
  choose_multisets(cands, 0, target, parts.total(), acc, out);
  return out;
}

NecklaceMultiset ubar_forward(const Permutation& p, const Composition& parts) {
  return necklace_decomposition(word_from_permutation(p, parts));
}

}  // namespace riffle
