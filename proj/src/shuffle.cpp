#include "riffle/shuffle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace riffle {

// ---------------------------------------------------------------- BiasVector

BiasVector::BiasVector(std::vector<Rational> probabilities) : p_(std::move(probabilities)) {
  if (p_.empty()) throw std::invalid_argument("bias vector must have at least one pile");
  Rational sum = 0;
  for (const auto& q : p_) {
    if (q < 0) throw std::invalid_argument("bias entries must be non-negative, got " + riffle::to_string(q));
    sum += q;
  }
  if (sum != 1) throw std::invalid_argument("bias entries sum to " + riffle::to_string(sum) + ", not 1");
}

BiasVector BiasVector::uniform(int a) {
  if (a < 1) throw std::invalid_argument("uniform bias needs a >= 1");
  return BiasVector(std::vector<Rational>(static_cast<std::size_t>(a), ratio(1, a)));
}

BiasVector BiasVector::parse(std::string_view text) {
  std::vector<Rational> p;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    p.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                    : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return BiasVector(std::move(p));
}

Rational BiasVector::power_sum(unsigned long j) const {
  Rational s = 0;
  for (const auto& q : p_) s += pow(q, j);
  return s;
}

std::string to_string(const BiasVector& bias) {
  std::string s;
  for (int i = 0; i < bias.size(); ++i) {
    if (i) s += ',';
    s += to_string(bias[i]);
  }
  return s;
}

BiasVector tensor_bias(const BiasVector& p, const BiasVector& q) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p.size()) * static_cast<std::size_t>(q.size()));
  for (const auto& x : p.probabilities())
    for (const auto& y : q.probabilities()) out.emplace_back(x * y);
  return BiasVector(std::move(out));
}

BiasVector tensor_power(const BiasVector& p, int k) {
  if (k < 0) throw std::invalid_argument("tensor_power: negative k");
  BiasVector r = BiasVector::uniform(1);
  for (int i = 0; i < k; ++i) r = tensor_bias(r, p);
  return r;
}

ShuffleMethod parse_method(std::string_view name) {
  if (name == "interleave") return ShuffleMethod::interleave;
  if (name == "drop") return ShuffleMethod::drop;
  if (name == "geometric") return ShuffleMethod::geometric;
  if (name == "inverse") return ShuffleMethod::inverse;
  throw std::invalid_argument("unknown shuffle method '" + std::string(name) +
                              "' (expected interleave, drop, geometric or inverse)");
}

std::string_view to_string(ShuffleMethod method) {
  switch (method) {
    case ShuffleMethod::interleave: return "interleave";
    case ShuffleMethod::drop: return "drop";
    case ShuffleMethod::geometric: return "geometric";
    case ShuffleMethod::inverse: return "inverse";
  }
  return "?";
}

// ---------------------------------------------------------------- sampling

PileSampler::PileSampler(const BiasVector& bias) : piles_(bias.size()) {
  BigInt lcm = 1;
  for (const auto& q : bias.probabilities()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  if (lcm.fits_ulong_p() && sizeof(unsigned long) == sizeof(std::uint64_t)) {
    denominator_ = lcm.get_ui();
    BigInt acc = 0;
    for (const auto& q : bias.probabilities()) {
      acc += q.get_num() * (lcm / q.get_den());
      integer_cdf_.push_back(acc.get_ui());
    }
  } else {
    double acc = 0.0;
    for (const auto& q : bias.probabilities()) {
      acc += q.get_d();
      double_cdf_.push_back(acc);
    }
  }
}

int PileSampler::operator()(Rng& rng) const {
  if (denominator_) {
    const std::uint64_t u = rng.below(*denominator_);
    const auto it = std::upper_bound(integer_cdf_.begin(), integer_cdf_.end(), u);
    return static_cast<int>(it - integer_cdf_.begin());
  }
  const double u = rng.uniform01() * double_cdf_.back();
  const auto it = std::upper_bound(double_cdf_.begin(), double_cdf_.end(), u);
  return std::min(static_cast<int>(it - double_cdf_.begin()), piles_ - 1);
}

namespace {

// Arrangement produced when the card at position j is taken from pile
// word[j]: piles hold consecutive labels, pile i first, each in order.
Permutation arrangement_from_pile_word(const std::vector<int>& word, int piles) {
  std::vector<int> next(static_cast<std::size_t>(piles) + 1, 0);
  for (int w : word) ++next[static_cast<std::size_t>(w) + 1];
  for (int i = 1; i <= piles; ++i) next[static_cast<std::size_t>(i)] += next[static_cast<std::size_t>(i - 1)];
  std::vector<int> images;
  images.reserve(word.size());
  for (int w : word) images.push_back(++next[static_cast<std::size_t>(w)]);
  return Permutation(std::move(images));
}

std::vector<int> cut_sizes(int n, const PileSampler& piles, Rng& rng) {
  std::vector<int> b(static_cast<std::size_t>(piles.piles()), 0);
  for (int i = 0; i < n; ++i) ++b[static_cast<std::size_t>(piles(rng))];
  return b;
}

Permutation sample_interleave(int n, const PileSampler& piles, Rng& rng) {
  const auto b = cut_sizes(n, piles, rng);
  std::vector<int> word;
  for (int i = 0; i < piles.piles(); ++i) word.insert(word.end(), static_cast<std::size_t>(b[static_cast<std::size_t>(i)]), i);
  for (std::size_t i = word.size(); i > 1; --i) std::swap(word[i - 1], word[rng.below(i)]);
  return arrangement_from_pile_word(word, piles.piles());
}

Permutation sample_drop(int n, const PileSampler& piles, Rng& rng) {
  auto remaining = cut_sizes(n, piles, rng);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int left = n; left > 0; --left) {
    auto u = static_cast<long>(rng.below(static_cast<std::uint64_t>(left)));
    int pile = 0;
    while (u >= remaining[static_cast<std::size_t>(pile)]) u -= remaining[static_cast<std::size_t>(pile++)];
    --remaining[static_cast<std::size_t>(pile)];
    word.push_back(pile);
  }
  return arrangement_from_pile_word(word, piles.piles());
}

Permutation sample_geometric(int n, const PileSampler& piles, Rng& rng) {
  const int a = piles.piles();
  struct Point {
    double x;
    int interval;
  };
  std::vector<Point> points(static_cast<std::size_t>(n));
  for (auto& pt : points) {
    pt.interval = piles(rng);
    pt.x = (pt.interval + rng.uniform01()) / a;
  }
  std::stable_sort(points.begin(), points.end(), [](const Point& l, const Point& r) { return l.x < r.x; });
  // Points are labelled 1..n by position in [0,1]; x -> ax mod 1 reorders them.
  std::vector<double> image(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < points.size(); ++i)
    image[i] = std::clamp(a * points[i].x - points[i].interval, 0.0, std::nextafter(1.0, 0.0));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
    return image[static_cast<std::size_t>(l - 1)] < image[static_cast<std::size_t>(r - 1)];
  });
  return Permutation(std::move(order));
}

Permutation sample_inverse(int n, const PileSampler& piles, Rng& rng) {
  std::vector<std::vector<int>> dealt(static_cast<std::size_t>(piles.piles()));
  for (int card = 1; card <= n; ++card) dealt[static_cast<std::size_t>(piles(rng))].push_back(card);
  std::vector<int> deck;
  deck.reserve(static_cast<std::size_t>(n));
  for (const auto& pile : dealt) deck.insert(deck.end(), pile.begin(), pile.end());
  return invert(Permutation(std::move(deck)));
}

Permutation sample_once_with(int n, const PileSampler& piles, ShuffleMethod method, Rng& rng) {
  switch (method) {
    case ShuffleMethod::interleave: return sample_interleave(n, piles, rng);
    case ShuffleMethod::drop: return sample_drop(n, piles, rng);
    case ShuffleMethod::geometric: return sample_geometric(n, piles, rng);
    case ShuffleMethod::inverse: return sample_inverse(n, piles, rng);
  }
  throw std::invalid_argument("unknown shuffle method");
}

void check_spec(const ShuffleSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("deck size must be non-negative");
  if (spec.k < 0) throw std::invalid_argument("number of shuffles must be non-negative");
}

}  // namespace

Permutation sample_once(int n, const BiasVector& bias, ShuffleMethod method, Rng& rng) {
  if (n < 0) throw std::invalid_argument("deck size must be non-negative");
  return sample_once_with(n, PileSampler(bias), method, rng);
}

Permutation sample(const ShuffleSpec& spec, ShuffleMethod method, Rng& rng) {
  check_spec(spec);
  const PileSampler piles(spec.bias);
  Permutation result = Permutation::identity(spec.n);
  for (int t = 0; t < spec.k; ++t) result = compose(sample_once_with(spec.n, piles, method, rng), result);
  return result;
}

std::vector<Permutation> sample_batch(const ShuffleSpec& spec, ShuffleMethod method, std::uint64_t seed,
                                      std::size_t count, unsigned threads) {
  check_spec(spec);
  std::vector<Permutation> out(count);
  const std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  auto run_block = [&](std::size_t block) {
    Rng rng(seed, block);
    const std::size_t end = std::min(count, (block + 1) * kSampleBlock);
    for (std::size_t i = block * kSampleBlock; i < end; ++i) out[i] = sample(spec, method, rng);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(blocks, 1))));
  if (threads == 1) {
    for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    return out;
  }
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t b = w; b < blocks; b += threads) run_block(b);
      });
  }
  return out;
}

void for_each_sample(const ShuffleSpec& spec, ShuffleMethod method, std::uint64_t seed, std::size_t count,
                     const std::function<void(std::size_t, const Permutation&)>& fn) {
  check_spec(spec);
  std::optional<Rng> rng;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % kSampleBlock == 0) rng.emplace(seed, i / kSampleBlock);
    fn(i, sample(spec, method, *rng));
  }
}

// ------------------------------------------------------- exact distributions

ExactDistribution::ExactDistribution(int n) : n_(n) {
  if (n < 0 || n > 12) throw std::invalid_argument("exact distributions support 0 <= n <= 12");
  masses_.resize(factorial_u64(n));
}

ExactDistribution ExactDistribution::point_mass(const Permutation& p) {
  ExactDistribution d(p.size());
  d.add(p, 1);
  return d;
}

ExactDistribution ExactDistribution::uniform(int n) {
  ExactDistribution d(n);
  const Rational m = ratio(1, factorial(static_cast<unsigned long>(n)));
  for (auto& x : d.masses_) x = m;
  return d;
}

const Rational& ExactDistribution::mass(const Permutation& p) const {
  if (p.size() != n_) throw std::invalid_argument("permutation size does not match distribution");
  return masses_[p.rank()];
}

void ExactDistribution::add(const Permutation& p, const Rational& m) {
  if (p.size() != n_) throw std::invalid_argument("permutation size does not match distribution");
  masses_[p.rank()] += m;
}

Rational ExactDistribution::total() const {
  Rational s = 0;
  for (const auto& m : masses_) s += m;
  return s;
}

void ExactDistribution::for_each(const std::function<void(const Permutation&, const Rational&)>& fn) const {
  std::uint64_t rank = 0;
  for_each_permutation(n_, [&](const Permutation& p) {
    const Rational& m = masses_[rank++];
    if (m != 0) fn(p, m);
  });
}

Rational ExactDistribution::expectation(const std::function<Rational(const Permutation&)>& statistic) const {
  Rational e = 0;
  for_each([&](const Permutation& p, const Rational& m) { e += m * statistic(p); });
  return e;
}

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("deck size must be non-negative");
  if (n > cap)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                std::to_string(cap));
}

// Probability that iid pile letters l_1 <= ... <= l_n (one per card rank)
// step up strictly at every rank in `strict` (bit r-1 for rank r).
Rational descent_class_mass(int n, const BiasVector& bias, std::uint32_t strict) {
  const auto a = static_cast<std::size_t>(bias.size());
  std::vector<Rational> f(bias.probabilities());
  std::vector<Rational> g(a);
  for (int r = 1; r < n; ++r) {
    const bool step = strict & (1u << (r - 1));
    Rational prefix = 0;
    for (std::size_t l = 0; l < a; ++l) {
      if (!step) prefix += f[l];
      g[l] = bias[static_cast<int>(l)] * prefix;
      if (step) prefix += f[l];
    }
    std::swap(f, g);
  }
  Rational total = 0;
  for (const auto& x : f) total += x;
  return total;
}

std::uint32_t interior_descent_mask(const Permutation& p) {
  std::uint32_t mask = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) mask |= 1u << (i - 1);
  return mask;
}

}  // namespace

ExactDistribution exact_distribution(int n, const BiasVector& bias, int cap) {
  check_cap(n, cap);
  ExactDistribution d(n);
  if (n == 0) {
    d.add_at(0, 1);
    return d;
  }
  std::vector<Rational> by_class(std::size_t{1} << (n - 1));
  for (std::uint32_t mask = 0; mask < by_class.size(); ++mask) by_class[mask] = descent_class_mass(n, bias, mask);
  std::uint64_t rank = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    d.add_at(rank++, by_class[interior_descent_mask(invert(p))]);
  });
  return d;
}

ExactDistribution exact_distribution(const ShuffleSpec& spec, int cap) {
  check_spec(spec);
  return exact_distribution(spec.n, tensor_power(spec.bias, spec.k), cap);
}

namespace {

Rational cut_probability(const Composition& b, const BiasVector& bias) {
  Rational pr = multinomial(b);
  for (int i = 0; i < b.size(); ++i) pr *= pow(bias[i], static_cast<unsigned long>(b[i]));
  return pr;
}

ExactDistribution interleave_measure(int n, const BiasVector& bias) {
  ExactDistribution d(n);
  for (const auto& b : weak_compositions(n, bias.size())) {
    const Rational cut = cut_probability(b, bias);
    if (cut == 0) continue;
    const Rational each = cut / Rational(multinomial(b));
    std::vector<int> word;
    for (int i = 0; i < b.size(); ++i) word.insert(word.end(), static_cast<std::size_t>(b[i]), i);
    do {
      d.add(arrangement_from_pile_word(word, bias.size()), each);
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return d;
}

void drop_sequences(std::vector<int>& remaining, int left, const Rational& prob, std::vector<int>& word,
                    int piles, ExactDistribution& d) {
  if (left == 0) {
    d.add(arrangement_from_pile_word(word, piles), prob);
    return;
  }
  for (int i = 0; i < piles; ++i) {
    const int a_i = remaining[static_cast<std::size_t>(i)];
    if (a_i == 0) continue;
    --remaining[static_cast<std::size_t>(i)];
    word.push_back(i);
    drop_sequences(remaining, left - 1, prob * ratio(a_i, left), word, piles, d);
    word.pop_back();
    ++remaining[static_cast<std::size_t>(i)];
  }
}

ExactDistribution drop_measure(int n, const BiasVector& bias) {
  ExactDistribution d(n);
  for (const auto& b : weak_compositions(n, bias.size())) {
    const Rational cut = cut_probability(b, bias);
    if (cut == 0) continue;
    std::vector<int> remaining(b.parts().begin(), b.parts().end());
    std::vector<int> word;
    drop_sequences(remaining, n, cut, word, bias.size(), d);
  }
  return d;
}

ExactDistribution inverse_measure(int n, const BiasVector& bias) {
  ExactDistribution d(n);
  const int a = bias.size();
  std::vector<int> pile(static_cast<std::size_t>(n), 0);
  while (true) {
    Rational prob = 1;
    std::vector<std::vector<int>> dealt(static_cast<std::size_t>(a));
    for (int card = 1; card <= n; ++card) {
      const int i = pile[static_cast<std::size_t>(card - 1)];
      prob *= bias[i];
      dealt[static_cast<std::size_t>(i)].push_back(card);
    }
    if (prob != 0) {
      std::vector<int> deck;
      for (const auto& p : dealt) deck.insert(deck.end(), p.begin(), p.end());
      d.add(invert(Permutation(std::move(deck))), prob);
    }
    int pos = 0;
    while (pos < n && ++pile[static_cast<std::size_t>(pos)] == a) pile[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  return d;
}

}  // namespace

ExactDistribution description_measure(int n, const BiasVector& bias, ShuffleMethod method, int cap) {
  check_cap(n, cap);
  switch (method) {
    case ShuffleMethod::interleave: return interleave_measure(n, bias);
    case ShuffleMethod::drop: return drop_measure(n, bias);
    case ShuffleMethod::inverse: return inverse_measure(n, bias);
    case ShuffleMethod::geometric:
      throw std::invalid_argument("the geometric description has no exact enumeration; sample it instead");
  }
  throw std::invalid_argument("unknown shuffle method");
}

ExactDistribution convolve(const ExactDistribution& first, const ExactDistribution& second) {
  if (first.n() != second.n()) throw std::invalid_argument("convolve: distributions on different S_n");
  struct Entry {
    Permutation perm;
    const Rational* mass;
  };
  std::vector<Entry> rhs;
  second.for_each([&](const Permutation& p, const Rational& m) { rhs.push_back({p, &m}); });
  ExactDistribution out(first.n());
  first.for_each([&](const Permutation& sigma, const Rational& m) {
    for (const auto& [tau, m2] : rhs) out.add(compose(sigma, tau), m * *m2);
  });
  return out;
}

ExactDistribution convolution_power(const ExactDistribution& d, int k) {
  if (k < 0) throw std::invalid_argument("convolution_power: negative k");
  ExactDistribution r = ExactDistribution::point_mass(Permutation::identity(d.n()));
  for (int i = 0; i < k; ++i) r = convolve(r, d);
  return r;
}

Rational tv_distance(const ExactDistribution& a, const ExactDistribution& b) {
  if (a.n() != b.n()) throw std::invalid_argument("tv_distance: distributions on different S_n");
  Rational s = 0;
  for (std::uint64_t r = 0; r < a.size(); ++r) s += abs(a.mass_at(r) - b.mass_at(r));
  return s / 2;
}

// ------------------------------------------------------------ mixing bounds

Rational suf_bound(const ShuffleSpec& spec) {
  check_spec(spec);
  return Rational(binomial(spec.n, 2)) * pow(spec.bias.power_sum(2), static_cast<unsigned long>(spec.k));
}

std::optional<int> smallest_k_below(int n, const BiasVector& bias, const Rational& threshold) {
  const Rational pairs(binomial(n, 2));
  if (pairs < threshold) return 0;
  const Rational s = bias.power_sum(2);
  if (s == 1) return std::nullopt;
  if (threshold <= 0) return std::nullopt;
  Rational bound = pairs;
  int k = 0;
  while (bound >= threshold) {
    bound *= s;
    ++k;
  }
  return k;
}

double sufficient_steps(int n, const BiasVector& bias) {
  const double s = bias.power_sum(2).get_d();
  if (s >= 1.0) return std::numeric_limits<double>::infinity();
  return 2.0 * std::log(static_cast<double>(n)) / std::log(1.0 / s);
}

namespace {

Rational check_two_pile(const Rational& p1) {
  if (p1 <= 0 || p1 >= 1) throw std::invalid_argument("p1 must lie strictly between 0 and 1");
  return p1 * p1 + (1 - p1) * (1 - p1);
}

}  // namespace

double lalley_theta(const Rational& p1) {
  const double s = check_two_pile(p1).get_d();
  const double a = p1.get_d();
  const double b = Rational(1 - p1).get_d();
  const double target = s * s;
  // Left side strictly decreases in theta; at theta = 2 it equals s > s^2.
  auto f = [&](double theta) { return std::pow(a, theta) + std::pow(b, theta) - target; };
  double lo = 2.0;
  double hi = 4.0;
  while (f(hi) > 0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw std::runtime_error("lalley_theta: failed to bracket the root");
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double lalley_lower_steps(double n, const Rational& p1) {
  const double s = check_two_pile(p1).get_d();
  const double theta = lalley_theta(p1);
  return (3.0 + theta) / 4.0 * std::log(n) / std::log(1.0 / s);
}

}  // namespace riffle
