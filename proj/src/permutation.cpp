#include "riffle/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace riffle {

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial_u64: n must lie in [0, 20]");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::from_rank(int n, std::uint64_t rank) {
  if (rank >= factorial_u64(n)) throw std::out_of_range("permutation rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial_u64(i);
    const auto idx = static_cast<std::ptrdiff_t>(rank / f);
    rank %= f;
    out.push_back(pool[static_cast<std::size_t>(idx)]);
    pool.erase(pool.begin() + idx);
  }
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

std::uint64_t Permutation::rank() const {
  const int n = size();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (images_[static_cast<std::size_t>(j)] < images_[static_cast<std::size_t>(i)]) ++smaller;
    r += smaller * factorial_u64(n - 1 - i);
  }
  return r;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> v(static_cast<std::size_t>(inner.size()));
  for (int i = 1; i <= inner.size(); ++i) v[static_cast<std::size_t>(i - 1)] = outer(inner(i));
  return Permutation(std::move(v));
}

Permutation invert(const Permutation& p) {
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) v[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(std::move(v));
}

Permutation conjugate(const Permutation& p, const Permutation& sigma) {
  return compose(sigma, compose(p, invert(sigma)));
}

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int b : parts_) {
    if (b < 0) throw std::invalid_argument("composition parts must be non-negative");
    total_ += b;
  }
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> out;
  int s = 0;
  for (int b : parts_) {
    s += b;
    if (s > 0 && (out.empty() || out.back() != s)) out.push_back(s);
  }
  return out;
}

Composition Composition::without_zeros() const {
  std::vector<int> v;
  std::copy_if(parts_.begin(), parts_.end(), std::back_inserter(v), [](int b) { return b > 0; });
  return Composition(std::move(v));
}

namespace {

void weak_compositions_rec(int remaining, int slots, std::vector<int>& cur,
                           std::vector<Composition>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int b = 0; b <= remaining; ++b) {
    cur.push_back(b);
    weak_compositions_rec(remaining - b, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> weak_compositions(int n, int parts) {
  if (n < 0 || parts < 1) throw std::invalid_argument("weak_compositions: need n >= 0 and parts >= 1");
  std::vector<Composition> out;
  std::vector<int> cur;
  weak_compositions_rec(n, parts, cur, out);
  return out;
}

std::vector<Composition> compositions(int n) {
  if (n < 0) throw std::invalid_argument("compositions: negative n");
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int last = 0;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) {
        parts.push_back(i - last);
        last = i;
      }
    parts.push_back(n - last);
    out.emplace_back(std::move(parts));
  }
  return out;
}

BigInt multinomial(const Composition& parts) {
  BigInt r = factorial(static_cast<unsigned long>(parts.total()));
  for (int b : parts.parts()) r /= factorial(static_cast<unsigned long>(b));
  return r;
}

// ---------------------------------------------------------------- DescentSet

DescentSet::DescentSet(int n, std::vector<int> positions) : n_(n), positions_(std::move(positions)) {
  if (n < 0) throw std::invalid_argument("descent set: negative n");
  for (int j : positions_)
    if (j < 1 || j > n)
      throw std::invalid_argument("descent position " + std::to_string(j) + " outside 1.." +
                                  std::to_string(n));
  if (n >= 1) positions_.push_back(n);
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
}

DescentSet DescentSet::from_composition(const Composition& parts) {
  return DescentSet(parts.total(), parts.partial_sums());
}

bool DescentSet::contains(int position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

bool DescentSet::is_subset_of(const DescentSet& other) const {
  return n_ == other.n_ && std::includes(other.positions_.begin(), other.positions_.end(),
                                         positions_.begin(), positions_.end());
}

std::vector<int> DescentSet::interior() const {
  std::vector<int> v;
  for (int j : positions_)
    if (j < n_) v.push_back(j);
  return v;
}

Composition DescentSet::composition() const {
  std::vector<int> parts;
  int last = 0;
  for (int j : positions_) {
    parts.push_back(j - last);
    last = j;
  }
  return Composition(std::move(parts));
}

std::vector<DescentSet> DescentSet::all(int n) {
  std::vector<DescentSet> out;
  if (n <= 0) {
    out.emplace_back(0, std::vector<int>{});
    return out;
  }
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> pos;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) pos.push_back(i);
    out.emplace_back(n, std::move(pos));
  }
  return out;
}

// ---------------------------------------------------------------- statistics

int CycleType::count(int length) const {
  auto it = counts.find(length);
  return it == counts.end() ? 0 : it->second;
}

int CycleType::total_size() const {
  int s = 0;
  for (auto [len, c] : counts) s += len * c;
  return s;
}

DescentSet descent_set(const Permutation& p) {
  std::vector<int> pos;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) pos.push_back(i);
  return DescentSet(p.size(), std::move(pos));
}

long inversions(const Permutation& p) {
  // Fenwick tree over values, scanning right to left.
  const int n = p.size();
  std::vector<int> tree(static_cast<std::size_t>(n) + 1, 0);
  long inv = 0;
  for (int i = n; i >= 1; --i) {
    for (int v = p(i) - 1; v > 0; v -= v & -v) inv += tree[static_cast<std::size_t>(v)];
    for (int v = p(i); v <= n; v += v & -v) ++tree[static_cast<std::size_t>(v)];
  }
  return inv;
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int c = start; !seen[static_cast<std::size_t>(c)]; c = p(c)) {
      seen[static_cast<std::size_t>(c)] = 1;
      cyc.push_back(c);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  for (const auto& c : cycles(p)) ++t.counts[static_cast<int>(c.size())];
  return t;
}

int fixed_points(const Permutation& p) {
  int f = 0;
  for (int i = 1; i <= p.size(); ++i) f += p(i) == i;
  return f;
}

bool is_n_cycle(const Permutation& p) {
  if (p.size() == 0) return false;
  int len = 1;
  for (int c = p(1); c != 1; c = p(c)) ++len;
  return len == p.size();
}

bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(p(i)) != i) return false;
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, CycleType& cur, std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    ++cur.counts[part];
    partitions_rec(remaining - part, part, cur, out);
    if (--cur.counts[part] == 0) cur.counts.erase(part);
  }
}

}  // namespace

std::vector<CycleType> cycle_types_of(int n) {
  std::vector<CycleType> out;
  CycleType cur;
  partitions_rec(n, n, cur, out);
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace riffle
