#pragma once

/**
 * Biased a-shuffles.
 *
 * A bias vector p = (p_1..p_a) cuts the deck into a piles with multinomial
 * pile sizes; the piles are then riffled together.  Permutations are read as
 * arrangements: pi(j) is the label of the card at position j after the
 * shuffle, so pi has mass under P_{n,a,p} exactly when the descents of
 * pi^-1 lie at pile boundaries.
 *
 * Four samplers realize the four classical descriptions of the shuffle
 * (uniform interleaving, sequential drops, points in [0,1] under x -> ax mod 1,
 * and the inverse deal into piles).  Three of them also have exact measures
 * computed by enumeration so they can be compared mass by mass.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riffle/permutation.hpp"
#include "riffle/rational.hpp"
#include "riffle/rng.hpp"

namespace riffle {

inline constexpr int kDefaultEnumerationCap = 8;

class BiasVector {
 public:
  /// Throws std::invalid_argument if empty, any entry is negative, or the
  /// entries do not sum to exactly 1.
  explicit BiasVector(std::vector<Rational> probabilities);

  static BiasVector uniform(int a);

  /// Comma-separated rationals or decimals, e.g. "1/3,2/3" or "0.4,0.6".
  /// No renormalization: anything not summing to exactly 1 is rejected.
  static BiasVector parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(p_.size()); }
  const Rational& operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& probabilities() const noexcept { return p_; }

  /// p_1^j + ... + p_a^j.
  Rational power_sum(unsigned long j) const;

  friend bool operator==(const BiasVector&, const BiasVector&) = default;

 private:
  std::vector<Rational> p_;
};

std::string to_string(const BiasVector& bias);

/// Lexicographic product (p_1 p'_1, .., p_1 p'_b, .., p_a p'_b).
BiasVector tensor_bias(const BiasVector& p, const BiasVector& q);
/// p (x) p (x) ... (x) p, k factors; k = 0 gives (1).
BiasVector tensor_power(const BiasVector& p, int k);

struct ShuffleSpec {
  int n = 0;
  BiasVector bias = BiasVector::uniform(1);
  int k = 1;
};

enum class ShuffleMethod { interleave, drop, geometric, inverse };

ShuffleMethod parse_method(std::string_view name);  // throws on unknown names
std::string_view to_string(ShuffleMethod method);

// ------------------------------------------------------------------ sampling

/// Draws pile indices 0..a-1 with probability p_i.  Exact integer draws when
/// the common denominator fits in 64 bits, doubles otherwise.
class PileSampler {
 public:
  explicit PileSampler(const BiasVector& bias);
  int operator()(Rng& rng) const;
  int piles() const noexcept { return piles_; }

 private:
  int piles_;
  std::optional<std::uint64_t> denominator_;
  std::vector<std::uint64_t> integer_cdf_;
  std::vector<double> double_cdf_;
};

/// One biased a-shuffle of an n-card deck, by the named description.
Permutation sample_once(int n, const BiasVector& bias, ShuffleMethod method, Rng& rng);

/// k independent single shuffles pi_1..pi_k composed as pi_k o ... o pi_1.
Permutation sample(const ShuffleSpec& spec, ShuffleMethod method, Rng& rng);

/// `count` samples.  Sample i belongs to block i / kSampleBlock, and block b
/// draws from Rng(seed, b); the result is independent of `threads`.
inline constexpr std::size_t kSampleBlock = 4096;
std::vector<Permutation> sample_batch(const ShuffleSpec& spec, ShuffleMethod method,
                                      std::uint64_t seed, std::size_t count, unsigned threads = 1);

/// Streams the same samples as sample_batch, in index order, on this thread.
void for_each_sample(const ShuffleSpec& spec, ShuffleMethod method, std::uint64_t seed, std::size_t count,
                     const std::function<void(std::size_t, const Permutation&)>& fn);

// ------------------------------------------------------- exact distributions

/// Dense measure on S_n indexed by lexicographic rank.
class ExactDistribution {
 public:
  explicit ExactDistribution(int n);  // all masses zero

  static ExactDistribution point_mass(const Permutation& p);
  static ExactDistribution uniform(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return masses_.size(); }

  const Rational& mass(const Permutation& p) const;
  const Rational& mass_at(std::uint64_t rank) const { return masses_[rank]; }
  void add(const Permutation& p, const Rational& m);
  void add_at(std::uint64_t rank, const Rational& m) { masses_[rank] += m; }

  Rational total() const;

  /// Calls fn(permutation, mass) for every nonzero mass, in rank order.
  void for_each(const std::function<void(const Permutation&, const Rational&)>& fn) const;

  /// E[f(pi)] for an integer or rational statistic.
  Rational expectation(const std::function<Rational(const Permutation&)>& statistic) const;

  friend bool operator==(const ExactDistribution&, const ExactDistribution&) = default;

 private:
  int n_;
  std::vector<Rational> masses_;
};

/// P_{n,a,p}.  Masses depend only on the descent set of pi^-1 and are summed
/// over the pile-letter sequences compatible with it.  Throws
/// std::invalid_argument if n exceeds `cap`.
ExactDistribution exact_distribution(int n, const BiasVector& bias, int cap = kDefaultEnumerationCap);

/// P_{n,a,p}^{*k}, via the tensored bias.
ExactDistribution exact_distribution(const ShuffleSpec& spec, int cap = kDefaultEnumerationCap);

/// The exact measure induced by one description, computed by enumerating
/// its own random choices: interleave walks cuts and their interleavings,
/// drop runs a dynamic program over pile-size states, inverse walks all pile
/// assignments.  geometric is continuous and has no enumeration; it throws.
ExactDistribution description_measure(int n, const BiasVector& bias, ShuffleMethod method,
                                      int cap = kDefaultEnumerationCap);

/// Law of sigma o tau with sigma ~ first, tau ~ second: a `first` shuffle
/// followed by a `second` shuffle in arrangement form.
ExactDistribution convolve(const ExactDistribution& first, const ExactDistribution& second);
ExactDistribution convolution_power(const ExactDistribution& d, int k);

Rational tv_distance(const ExactDistribution& a, const ExactDistribution& b);

// ------------------------------------------------------------ mixing bounds

/// C(n,2) (p_1^2 + ... + p_a^2)^k.
Rational suf_bound(const ShuffleSpec& spec);

/// Least k with suf_bound < threshold; nullopt if the bias is a point mass
/// (the bound never decreases) and n >= 2.
std::optional<int> smallest_k_below(int n, const BiasVector& bias, const Rational& threshold);

/// 2 log_{1/sum p_i^2} n.
double sufficient_steps(int n, const BiasVector& bias);

/// Root theta of p1^theta + p2^theta = (p1^2 + p2^2)^2, to 1e-12.
/// Throws std::invalid_argument unless 0 < p1 < 1.
double lalley_theta(const Rational& p1);

/// (3 + theta)/4 * log_{1/(p1^2+p2^2)} n.
double lalley_lower_steps(double n, const Rational& p1);

}  // namespace riffle
