#include "riffle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "riffle/counting.hpp"
#include "riffle/genfunc.hpp"
#include "riffle/io.hpp"
#include "riffle/montecarlo.hpp"
#include "riffle/necklace.hpp"
#include "riffle/polynomial.hpp"

namespace riffle {

namespace {

class Reporter {
 public:
  Reporter(std::string property, std::vector<CheckOutcome>& sink,
           const std::function<void(const CheckOutcome&)>& on_outcome)
      : property_(std::move(property)), sink_(sink), on_outcome_(on_outcome) {}

  bool check(const std::string& name, bool ok, const std::string& detail = {}) {
    CheckOutcome o{property_, name, ok, detail};
    if (on_outcome_) on_outcome_(o);
    sink_.push_back(std::move(o));
    return ok;
  }

 private:
  std::string property_;
  std::vector<CheckOutcome>& sink_;
  const std::function<void(const CheckOutcome&)>& on_outcome_;
};

struct Limits {
  int n_max;
  std::uint64_t seed;
  int cap(int own) const { return n_max > 0 ? std::min(own, n_max) : own; }
};

using PropertyFn = void (*)(Reporter&, const Limits&);

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }
Rational q(long num, long den = 1) { return ratio(num, den); }

std::string str(const Rational& r) { return to_string(r); }
std::string str(const BigInt& b) { return b.get_str(); }
std::string str(const Polynomial& p) { return to_json(p).dump(); }

std::string join(std::span<const int> v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string label(int n, const BiasVector& b) { return "n=" + std::to_string(n) + " p=(" + to_string(b) + ")"; }

// q^Inv summed over a distribution.
QPolynomial inversion_polynomial(const ExactDistribution& d) {
  QPolynomial poly;
  d.for_each([&](const Permutation& p, const Rational& m) { poly += QPolynomial::monomial(m, static_cast<int>(inversions(p))); });
  return poly;
}

Polynomial fixed_point_distribution(const ExactDistribution& d) {
  Polynomial poly;
  d.for_each([&](const Permutation& p, const Rational& m) { poly += Polynomial::monomial(m, fixed_points(p)); });
  return poly;
}

// ------------------------------------------------------------ shuffles

void worked_table(Reporter& r, const Limits&) {
  // cycle form -> one-line: (1)(2)(3)=123 (1)(23)=132 (2)(13)=321 (3)(12)=213 (123)=231 (132)=312
  for (const Rational& p1 : {q(1, 2), q(1, 3), q(1, 5)}) {
    const Rational p2 = 1 - p1;
    const auto d = exact_distribution(3, BiasVector({p1, p2}));
    const std::vector<std::pair<Permutation, Rational>> rows = {
        {perm({1, 2, 3}), p1 * p1 * p1 + p1 * p1 * p2 + p1 * p2 * p2 + p2 * p2 * p2},
        {perm({1, 3, 2}), p1 * p1 * p2},
        {perm({3, 2, 1}), 0},
        {perm({2, 1, 3}), p1 * p2 * p2},
        {perm({2, 3, 1}), p1 * p2 * p2},
        {perm({3, 1, 2}), p1 * p1 * p2},
    };
    for (const auto& [pi, expected] : rows)
      r.check("P_{3,2} p1=" + str(p1) + " perm " + to_line(pi), d.mass(pi) == expected,
              "got " + str(d.mass(pi)) + ", expected " + str(expected));
  }
}

void descriptions(Reporter& r, const Limits& lim) {
  const int top = lim.cap(5);
  for (const auto& bias : bias_panel())
    for (int n = 0; n <= top; ++n) {
      const auto reference = exact_distribution(n, bias);
      for (auto m : {ShuffleMethod::interleave, ShuffleMethod::drop, ShuffleMethod::inverse})
        r.check(std::string(to_string(m)) + " exact " + label(n, bias), description_measure(n, bias, m) == reference);
    }

  const BiasVector third = BiasVector::parse("1/3,2/3");
  const auto expected = exact_distribution(4, third);
  for (auto m : {ShuffleMethod::geometric, ShuffleMethod::interleave, ShuffleMethod::drop, ShuffleMethod::inverse}) {
    const auto samples = sample_batch({4, third, 1}, m, lim.seed, 100000);
    const auto chi = chi_square_test(expected, samples);
    std::ostringstream os;
    os << "chi2=" << chi.statistic << " df=" << chi.degrees_of_freedom << " p=" << chi.p_value;
    r.check(std::string(to_string(m)) + " chi-square n=4 p=(1/3,2/3) 1e5 samples", chi.p_value > 1e-3, os.str());
  }

  // GSR at n=2: the cut (1,1) has mass 1/2 and half of its interleavings swap.
  MeanAccumulator swaps;
  for_each_sample({2, BiasVector::uniform(2), 1}, ShuffleMethod::interleave, lim.seed + 1, 100000,
                  [&](std::size_t, const Permutation& p) { swaps.add(p(1) == 2 ? 1.0 : 0.0); });
  const auto est = swaps.estimate();
  r.check("sample n=2 GSR swap frequency ~ 1/4", exact_distribution(2, BiasVector::uniform(2)).mass(perm({2, 1})) == q(1, 4) && est.z_score(0.25) < 4.0,
          "mean " + std::to_string(est.mean));

  const auto d2 = exact_distribution(2, third);
  r.check("exact_distribution n=2 p=(1/3,2/3) swap = 2/9", d2.mass(perm({2, 1})) == q(2, 9), str(d2.mass(perm({2, 1}))));
}

void prop1(Reporter& r, const Limits& lim) {
  const int top = lim.cap(5);
  const std::vector<BiasVector> twos = {BiasVector::parse("1/2,1/2"), BiasVector::parse("1/3,2/3")};
  const std::vector<BiasVector> threes = {BiasVector::parse("1/2,1/4,1/4"), BiasVector::parse("1/6,1/3,1/2")};
  for (int n = 1; n <= top; ++n)
    for (const auto& p : twos) {
      for (const auto* others : {&twos, &threes})
        for (const auto& p2 : *others) {
          const auto lhs = convolve(exact_distribution(n, p), exact_distribution(n, p2));
          const auto rhs = exact_distribution(n, tensor_bias(p, p2));
          r.check("n=" + std::to_string(n) + " (" + to_string(p) + ")*(" + to_string(p2) + ")", lhs == rhs);
        }
    }
  r.check("P_{3,(1/2,1/2)} * P_{3,(1/2,1/2)} = P_{3,(1/4,1/4,1/4,1/4)}",
          convolve(exact_distribution(3, BiasVector::uniform(2)), exact_distribution(3, BiasVector::uniform(2))) ==
              exact_distribution(3, BiasVector::uniform(4)));
  const auto d = exact_distribution(3, BiasVector::uniform(2));
  r.check("identity is a unit for convolution",
          convolve(ExactDistribution::point_mass(Permutation::identity(3)), d) == d);
}

void kfold_sampling(Reporter& r, const Limits& lim) {
  for (const auto& bias : bias_panel())
    for (int n = 1; n <= lim.cap(4); ++n)
      for (int k = 0; k <= 2; ++k) {
        const auto single = description_measure(n, bias, ShuffleMethod::inverse);
        r.check("k=" + std::to_string(k) + " " + label(n, bias),
                convolution_power(single, k) == exact_distribution({n, bias, k}));
      }
  const BiasVector third = BiasVector::parse("1/3,2/3");
  const auto samples = sample_batch({4, third, 2}, ShuffleMethod::interleave, lim.seed + 2, 100000);
  const auto chi = chi_square_test(exact_distribution(4, tensor_power(third, 2)), samples);
  r.check("sampled 2-fold n=4 p=(1/3,2/3) vs tensored bias", chi.p_value > 1e-3, "p=" + std::to_string(chi.p_value));
}

// ---------------------------------------------------------------- mixing

void tv_bound(Reporter& r, const Limits& lim) {
  for (const auto& bias : bias_panel()) {
    if (bias.size() < 2) continue;
    for (int n = 2; n <= lim.cap(6); ++n) {
      const auto single = exact_distribution(n, bias);
      const auto uniform = ExactDistribution::uniform(n);
      ExactDistribution power = ExactDistribution::point_mass(Permutation::identity(n));
      for (int k = 1; k <= 8; ++k) {
        power = convolve(power, single);
        const Rational bound = suf_bound({n, bias, k});
        if (bound >= 1) continue;
        const Rational tv = tv_distance(power, uniform);
        r.check("tv <= bound k=" + std::to_string(k) + " " + label(n, bias), tv <= bound,
                "tv " + str(tv) + " bound " + str(bound));
      }
    }
  }
  const Rational tv = tv_distance(exact_distribution(3, BiasVector::uniform(2)), ExactDistribution::uniform(3));
  r.check("tv(P_{3,2,(1/2,1/2)}, U) = 1/3", tv == q(1, 3), str(tv));
  r.check("tv(point mass, U) = 1 - 1/4!",
          tv_distance(ExactDistribution::point_mass(Permutation::identity(4)), ExactDistribution::uniform(4)) == q(23, 24));

  // Closed form: 15 (1/2)^k < 1/4 iff 2^k > 60.
  const auto k = smallest_k_below(6, BiasVector::uniform(2), q(1, 4));
  const double two_log = 2.0 * std::log2(6.0);
  r.check("smallest k with bound < 1/4 at n=6 GSR is 6 (2 log2 6 = " + std::to_string(two_log) + ")",
          k && *k == 6 && std::abs(*k - two_log) < 2.0);

  // Report column: the bound never increases with k.
  bool monotone = true;
  for (int kk = 1; kk <= 10; ++kk)
    monotone = monotone && suf_bound({6, BiasVector::uniform(2), kk}) <= suf_bound({6, BiasVector::uniform(2), kk - 1});
  r.check("bound column nonincreasing in k (n=6)", monotone);
}

void lalley(Reporter& r, const Limits&) {
  const double theta = lalley_theta(q(1, 2));
  r.check("theta(1/2) = 3", std::abs(theta - 3.0) < 1e-10, std::to_string(theta));
  r.check("lower steps at n=2^10, p1=1/2 = 15", std::abs(lalley_lower_steps(1024, q(1, 2)) - 15.0) < 1e-9);
  r.check("lower steps at n=2, p1=1/2 = 1.5", std::abs(lalley_lower_steps(2, q(1, 2)) - 1.5) < 1e-12);
  const double t4 = lalley_theta(q(2, 5));
  const double resid = std::abs(std::pow(0.4, t4) + std::pow(0.6, t4) - std::pow(0.16 + 0.36, 2));
  r.check("theta(0.4) satisfies its equation", resid < 1e-10, "residual " + std::to_string(resid));
  const double t45 = lalley_theta(q(9, 20));
  const double s = 0.45 * 0.45 + 0.55 * 0.55;
  const double steps = (3.0 + t45) / 4.0 * std::log(52.0) / std::log(1.0 / s);
  r.check("lower steps n=52 p1=0.45 composes theta", std::abs(lalley_lower_steps(52, q(9, 20)) - steps) < 1e-9);
}

// ------------------------------------------------------------------ perm-core

void perm_core(Reporter& r, const Limits& lim) {
  for (int n = 0; n <= lim.cap(7); ++n) {
    bool inv_sym = true;
    bool inverse_ok = true;
    QPolynomial gf;
    for_each_permutation(n, [&](const Permutation& p) {
      const auto ip = invert(p);
      inv_sym = inv_sym && inversions(p) == inversions(ip);
      inverse_ok = inverse_ok && compose(p, ip).is_identity() && invert(ip) == p;
      gf += QPolynomial::monomial(1, static_cast<int>(inversions(p)));
    });
    r.check("Inv(p) = Inv(p^-1) on S_" + std::to_string(n), inv_sym);
    r.check("p o p^-1 = id on S_" + std::to_string(n), inverse_ok);
    r.check("sum q^Inv = [n]! on S_" + std::to_string(n), gf == q_factorial(n), str(gf));
  }
  for (int n = 1; n <= lim.cap(8); ++n) {
    bool ok = true;
    for (const auto& b : compositions(n))
      ok = ok && q_multinomial(n, b).evaluate(Rational(1)) == Rational(multinomial(b));
    r.check("q-multinomials at q=1 are multinomials, n=" + std::to_string(n), ok);
  }
  for (int n = 1; n <= lim.cap(7); ++n) {
    std::vector<std::pair<DescentSet, long>> all;
    for_each_permutation(n, [&](const Permutation& p) { all.emplace_back(descent_set(p), inversions(p)); });
    for (const auto& b : compositions(n)) {
      const DescentSet allowed = DescentSet::from_composition(b);
      QPolynomial sum;
      for (const auto& [des, inv] : all)
        if (des.is_subset_of(allowed)) sum += QPolynomial::monomial(1, static_cast<int>(inv));
      r.check("[n; b]_q = sum q^Inv over Des within S(b), n=" + std::to_string(n) + " b=" + join(b.parts()),
              sum == q_multinomial(n, b));
    }
  }
  const Permutation rot = perm({2, 3, 4, 5, 1});
  const Permutation swp = perm({2, 1, 4, 3, 5});
  bool conj_ok = true;
  for_each_permutation(5, [&](const Permutation& p) {
    conj_ok = conj_ok && cycle_type(conjugate(p, rot)) == cycle_type(p) && cycle_type(conjugate(p, swp)) == cycle_type(p);
  });
  r.check("cycle type is conjugation invariant on S_5", conj_ok);
  r.check("inversions(3 1 2) = 2", inversions(perm({3, 1, 2})) == 2);
  r.check("q_multinomial(3; 1,2) = 1 + q + q^2", q_multinomial(3, Composition({1, 2})) == QPolynomial{1, 1, 1});
}

// ------------------------------------------------------------- necklaces

const Word& example_word() {
  static const Word w{{2, 2, 1, 1, 2, 3, 3, 3, 2, 3, 2, 2}};
  return w;
}

void standardization(Reporter& r, const Limits&) {
  const Permutation st = standardize(example_word());
  const Permutation expected = perm({3, 4, 1, 2, 5, 9, 10, 11, 6, 12, 7, 8});
  r.check("st(bbaabcccbcbb) = 3 4 1 2 5 9 10 11 6 12 7 8", st == expected, to_line(st));
  NecklaceMultiset ms;
  ms.add(Necklace({1, 2}), 2);
  ms.add(Necklace({2}));
  ms.add(Necklace({2, 3}));
  ms.add(Necklace({2, 3, 2, 3, 3}));
  const auto u = necklace_decomposition(example_word());
  r.check("U(w) = (ab)(ab)(b)(bc)(bcbcc)", u == ms, to_json(u).dump());
  r.check("cycle type of st(w) is {1:1,2:3,5:1}", cycle_type(st) == CycleType{{{1, 1}, {2, 3}, {5, 1}}});
  const auto des = descent_set(st);
  r.check("descent set of st(w) by scan = {2,8,10,12}",
          std::vector<int>(des.positions().begin(), des.positions().end()) == std::vector<int>{2, 8, 10, 12},
          join(des.positions()));
  r.check("word_from_permutation(st(w), (2,6,4)) = w",
          word_from_permutation(st, Composition({2, 6, 4})) == example_word());
}

void gessel(Reporter& r, const Limits& lim) {
  // Cycle structure of U(w) equals that of st(w) for every word.
  for (int a = 1; a <= 3; ++a)
    for (int n = 1; n <= lim.cap(7); ++n) {
      Word w{std::vector<int>(static_cast<std::size_t>(n), 1)};
      bool ok = true;
      std::string bad;
      while (true) {
        if (necklace_decomposition(w).lengths() != cycle_type(standardize(w)) && ok) {
          ok = false;
          bad = to_letters(w.letters);
        }
        int pos = n - 1;
        while (pos >= 0 && w.letters[static_cast<std::size_t>(pos)] == a) w.letters[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++w.letters[static_cast<std::size_t>(pos)];
      }
      r.check("cycle structure preserved, words of length " + std::to_string(n) + " over " + std::to_string(a) +
                  " letters",
              ok, bad);
    }

  // standardize is the identity on permutations read as words.
  bool idem = true;
  for_each_permutation(lim.cap(6), [&](const Permutation& p) {
    idem = idem && standardize(Word{std::vector<int>(p.images().begin(), p.images().end())}) == p;
  });
  r.check("standardize fixes permutations", idem);

  // Restricted bijection onto primitive-necklace multisets, per composition.
  for (int n = 1; n <= lim.cap(6); ++n)
    for (const auto& b : compositions(n)) {
      std::set<NecklaceMultiset> images;
      bool types_ok = true;
      bool primitive_ok = true;
      long domain = 0;
      for_each_permutation(n, [&](const Permutation& p) {
        if (!in_ubar_domain(p, b)) return;
        ++domain;
        const auto img = ubar_forward(p, b);
        types_ok = types_ok && img.lengths() == cycle_type(p);
        for (const auto& [nk, m] : img.entries) primitive_ok = primitive_ok && is_primitive(nk);
        primitive_ok = primitive_ok && img.content(b.size()) == std::vector<int>(b.parts().begin(), b.parts().end());
        images.insert(img);
      });
      const auto codomain = enumerate_primitive_multisets(b);
      const std::set<NecklaceMultiset> target(codomain.begin(), codomain.end());
      const std::string tag = "n=" + std::to_string(n) + " b=" + join(b.parts());
      r.check("Ubar bijective " + tag,
              types_ok && primitive_ok && static_cast<long>(images.size()) == domain && images == target &&
                  BigInt(domain) == multinomial(b),
              "domain " + std::to_string(domain) + " images " + std::to_string(images.size()) + " codomain " +
                  std::to_string(target.size()));
    }

  // Round trip through standardize for S_5 and parts (2,3).
  bool round = true;
  int count = 0;
  for_each_permutation(5, [&](const Permutation& p) {
    if (!in_ubar_domain(p, Composition({2, 3}))) return;
    ++count;
    round = round && standardize(word_from_permutation(p, Composition({2, 3}))) == p;
  });
  r.check("word_from_permutation round-trips on S_5, parts (2,3)", round && count == 10, std::to_string(count));

  {
    const Composition b({2, 2});
    std::set<NecklaceMultiset> images;
    int domain = 0;
    for_each_permutation(4, [&](const Permutation& p) {
      if (!in_ubar_domain(p, b)) return;
      ++domain;
      images.insert(ubar_forward(p, b));
    });
    r.check("n=4 parts (2,2): 6 permutations onto 6 primitive multisets",
            domain == 6 && images.size() == 6 && enumerate_primitive_multisets(b).size() == 6);
  }
  r.check("(a a b b) is primitive", is_primitive(Necklace({1, 1, 2, 2})));
  r.check("(a b a b) is not primitive", !is_primitive(Necklace({1, 2, 1, 2})));
}

void mobius_counts(Reporter& r, const Limits& lim) {
  for (int a = 1; a <= 3; ++a)
    for (int n = 1; n <= lim.cap(10); ++n) {
      std::string bad;
      for (const auto& b : weak_compositions(n, a)) {
        const auto listed = enumerate_primitive_necklaces(b);
        const BigInt m = primitive_count(b);
        if (bad.empty() && m != static_cast<long>(listed.size()))
          bad = join(b.parts()) + ": M " + str(m) + " listed " + std::to_string(listed.size());
      }
      r.check("M(r) equals primitive necklace enumeration, n=" + std::to_string(n) + " a=" + std::to_string(a),
              bad.empty(), bad);
    }
  r.check("M(2,2) = 1", primitive_count(Composition({2, 2})) == 1);
  r.check("M(1,1,1) = 2", primitive_count(Composition({1, 1, 1})) == 2);
  const auto l22 = enumerate_primitive_necklaces(Composition({2, 2}));
  r.check("primitive necklaces of content (2,2) = [(1122)]", l22.size() == 1 && l22[0] == Necklace({1, 1, 2, 2}));
}

void translate(Reporter& r, const Limits& lim) {
  for (int a = 1; a <= 3; ++a)
    for (int n = 0; n <= lim.cap(7); ++n)
      r.check("A_{b,n} = necklace multiset count, n=" + std::to_string(n) + " a=" + std::to_string(a),
              translate_identity_check(n, a));
}

void cycle_pgf(Reporter& r, const Limits& lim) {
  for (const auto& bias : bias_panel())
    for (int n = 0; n <= lim.cap(6); ++n) {
      const auto pgf = cycle_structure_pgf(n, bias);
      std::map<CycleType, Rational> brute;
      exact_distribution(n, bias).for_each([&](const Permutation& p, const Rational& m) { brute[cycle_type(p)] += m; });
      r.check("joint cycle PGF = brute force " + label(n, bias), pgf.terms == brute);
    }
  for (const auto& bias : bias_panel())
    for (int n = 0; n <= lim.cap(8); ++n)
      r.check("cycle PGF sums to 1 " + label(n, bias), cycle_structure_pgf(n, bias).total() == 1);

  for (int n = 1; n <= lim.cap(4); ++n) {
    const BiasVector bias = BiasVector::parse("1/3,2/3");
    const auto pgf = cycle_structure_pgf({n, bias, 2});
    std::map<CycleType, Rational> brute;
    convolution_power(exact_distribution(n, bias), 2).for_each([&](const Permutation& p, const Rational& m) {
      brute[cycle_type(p)] += m;
    });
    r.check("2-fold cycle PGF via tensored bias, n=" + std::to_string(n), pgf.terms == brute);
  }

  const Rational p1 = q(1, 3), p2 = q(2, 3);
  const auto two = cycle_structure_pgf(2, BiasVector({p1, p2}));
  r.check("n=2: (p1^2+p1p2+p2^2) x1^2 + p1p2 x2",
          two.coefficient(CycleType{{{1, 2}}}) == p1 * p1 + p1 * p2 + p2 * p2 &&
              two.coefficient(CycleType{{{2, 1}}}) == p1 * p2 && two.terms.size() == 2);
  r.check("n=3 GSR: coefficient of x3 = 1/4", cycle_structure_pgf(3, BiasVector::uniform(2)).coefficient(CycleType{{{3, 1}}}) == q(1, 4));
}

void fixpoint(Reporter& r, const Limits& lim) {
  for (const auto& bias : bias_panel())
    for (int n = 1; n <= lim.cap(6); ++n) {
      const auto single = exact_distribution(n, bias);
      ExactDistribution power = ExactDistribution::point_mass(Permutation::identity(n));
      for (int k = 0; k <= 3; ++k) {
        if (k > 0) power = convolve(power, single);
        const Rational brute = power.expectation([](const Permutation& p) { return Rational(fixed_points(p)); });
        r.check("E[fixed points] k=" + std::to_string(k) + " " + label(n, bias),
                brute == expected_fixed_points({n, bias, k}), str(brute));
      }
      const auto pgf = fixed_point_pgf(n, bias);
      r.check("fixed-point PGF = brute force " + label(n, bias),
              pgf == fixed_point_distribution(single) && pgf == cycle_structure_pgf(n, bias).fixed_point_marginal());
      r.check("PGF'(1) = E[fixed points] " + label(n, bias),
              pgf.derivative().evaluate(Rational(1)) == expected_fixed_points({n, bias, 1}) && pgf.evaluate(Rational(1)) == 1);
    }
  r.check("E[fixed points] n=3 GSR = 7/4", expected_fixed_points({3, BiasVector::uniform(2), 1}) == q(7, 4));
  r.check("fixed-point PGF n=3 GSR = 1/4 + x/4 + x^3/2",
          fixed_point_pgf(3, BiasVector::uniform(2)) == Polynomial{q(1, 4), q(1, 4), 0, q(1, 2)});
  r.check("fixed-point PGF n=1 = x", fixed_point_pgf(1, BiasVector::parse("1/3,2/3")) == Polynomial{0, 1});

  // Hölder: a^{-(j-1)} <= sum p_i^j, so the unbiased shuffle minimizes E[fixed points].
  for (const auto& bias : bias_panel()) {
    const int a = bias.size();
    bool holder = true;
    for (int j = 1; j <= 12; ++j) holder = holder && pow(q(1, a), static_cast<unsigned long>(j - 1)) <= bias.power_sum(j);
    bool minimal = true;
    for (int k = 1; k <= 4; ++k)
      minimal = minimal && expected_fixed_points({12, bias, k}) >= expected_fixed_points({12, BiasVector::uniform(a), k});
    r.check("Hölder bound and unbiased minimum, p=(" + to_string(bias) + ")", holder && minimal);
  }
  for (int k = 1; k <= 4; ++k) {
    Rational unbiased = 0;
    for (int j = 1; j <= 10; ++j) unbiased += pow(q(1, 3), static_cast<unsigned long>((j - 1) * k));
    r.check("unbiased closed form sum a^{-(j-1)k}, a=3 k=" + std::to_string(k),
            expected_fixed_points({10, BiasVector::uniform(3), k}) == unbiased);
  }

  // Poisson proximity: the tail past j=1 is tiny after 10 GSR shuffles of 52 cards.
  const Rational mean = expected_fixed_points({52, BiasVector::uniform(2), 10});
  Rational tail = 0;
  for (int j = 2; j <= 200; ++j) tail += pow(pow(q(1, 2), static_cast<unsigned long>(j - 1)), 10);
  r.check("n=52 GSR k=10: E[fixed points] within 0.01 of 1 + sum_{j>=2} 2^{(1-j)k}",
          std::abs(mean.get_d() - (1.0 + tail.get_d())) < 0.01, std::to_string(mean.get_d()));
}

// -------------------------------------------------------------- counting

void stanley(Reporter& r, const Limits& lim) {
  for (int n = 1; n <= lim.cap(7); ++n) {
    std::map<DescentSet, long> brute;
    for_each_permutation(n, [&](const Permutation& p) { ++brute[descent_set(p)]; });
    BigInt total = 0;
    for (const auto& j : DescentSet::all(n)) {
      const BigInt ie = count_descent_exact(j);
      const BigInt det = count_descent_det(j);
      const long bf = brute[j];
      total += ie;
      r.check("n=" + std::to_string(n) + " J=" + join(j.positions()), ie == bf && det == bf,
              "ie " + str(ie) + " det " + str(det) + " brute " + std::to_string(bf));
    }
    r.check("sum over J = n!, n=" + std::to_string(n), total == factorial(static_cast<unsigned long>(n)));
  }
  for (const auto& b : {Composition({1, 2}), Composition({2, 2})})
    r.check("count_descent_subset " + join(b.parts()) + " = brute force",
            count_descent_subset(b) == brute_count(b.total(), [&](const Permutation& p) {
              return descent_set(p).is_subset_of(DescentSet::from_composition(b));
            }));
  r.check("exactly J={1,3}, n=3: 2 (2 1 3 and 3 1 2)", count_descent_exact(DescentSet(3, {1})) == 2);
  r.check("exactly {2,4}, n=4: 5", count_descent_exact(DescentSet(4, {2})) == 5);
  const std::vector<int> one{1};
  r.check("det formula J={1}, n=3 = 2", count_descent_det(one, 3) == 2);
  r.check("brute_count n=4 Des={2,4} = inclusion-exclusion",
          brute_count(4, [](const Permutation& p) { return descent_set(p) == DescentSet(4, {2}); }) ==
              count_descent_exact(DescentSet(4, {2})));
}

void ncycles(Reporter& r, const Limits& lim) {
  r.check("n-cycles with J={1,3}, n=3: 1 (3 1 2)",
          ncycles_descent_ie(DescentSet(3, {1})) == 1 && ncycles_descent_det(DescentSet(3, {1})) == 1);
  for (int n = 1; n <= lim.cap(8); ++n) {
    std::map<DescentSet, long> exact;
    std::vector<DescentSet> cycle_descents;
    for_each_permutation(n, [&](const Permutation& p) {
      if (!is_n_cycle(p)) return;
      const auto d = descent_set(p);
      ++exact[d];
      cycle_descents.push_back(d);
    });
    BigInt total = 0;
    for (const auto& j : DescentSet::all(n)) {
      const BigInt ie = ncycles_descent_ie(j);
      const BigInt det = ncycles_descent_det(j);
      const long bf = exact[j];
      total += ie;
      r.check("n=" + std::to_string(n) + " J=" + join(j.positions()), ie == bf && det == bf,
              "ie " + str(ie) + " det " + str(det) + " brute " + std::to_string(bf));
      const long within = std::count_if(cycle_descents.begin(), cycle_descents.end(),
                                        [&](const DescentSet& d) { return d.is_subset_of(j); });
      r.check("n-cycles with Des within K = M(C(K)), n=" + std::to_string(n) + " K=" + join(j.positions()),
              primitive_count(j.composition()) == within);
    }
    if (n >= 2) r.check("no n-cycle has descent set {n}, n=" + std::to_string(n), ncycles_descent_ie(DescentSet(n, {})) == 0);
    r.check("sum over J = (n-1)!, n=" + std::to_string(n), total == factorial(static_cast<unsigned long>(n - 1)));
  }
}

void involutions(Reporter& r, const Limits& lim) {
  r.check("K={1,2}, n=2: 2 symmetric matrices", involutions_descent_subset(DescentSet(2, {1})) == 2 &&
                                                     symmetric_matrices(std::vector<int>{1, 1}).size() == 2);
  for (int n = 1; n <= lim.cap(7); ++n) {
    std::vector<DescentSet> invol;
    for_each_permutation(n, [&](const Permutation& p) {
      if (is_involution(p)) invol.push_back(descent_set(p));
    });
    for (const auto& k : DescentSet::all(n)) {
      const long bf = std::count_if(invol.begin(), invol.end(), [&](const DescentSet& d) { return d.is_subset_of(k); });
      const BigInt m = involutions_descent_subset(k);
      r.check("n=" + std::to_string(n) + " K=" + join(k.positions()), m == bf,
              "matrices " + str(m) + " brute " + std::to_string(bf));
    }
  }
}

// ------------------------------------------------------------ inversions

void invgen(Reporter& r, const Limits& lim) {
  for (const auto& bias : bias_panel())
    for (int n = 0; n <= lim.cap(7); ++n) {
      const auto series = inversion_pgf(n, bias);
      const auto sums = inversion_pgf_by_compositions(n, bias);
      const auto brute = inversion_polynomial(exact_distribution(n, bias));
      r.check("E q^Inv three ways " + label(n, bias), series == sums && sums == brute && series.evaluate(Rational(1)) == 1,
              str(series));
    }
  const Rational p1 = q(1, 3), p2 = q(2, 3);
  r.check("n=2: (p1^2+p2^2+p1p2) + p1p2 q",
          inversion_pgf(2, BiasVector({p1, p2})) == QPolynomial{p1 * p1 + p2 * p2 + p1 * p2, p1 * p2});
  r.check("n=3 GSR: 1/2 + q/4 + q^2/4", inversion_pgf(3, BiasVector::uniform(2)) == QPolynomial{q(1, 2), q(1, 4), q(1, 4)});
  const double resid = euler_identity_residual(0.5, 0.5, 30);
  r.check("Euler identity residual x=q=1/2, 30 terms < 1e-8", resid < 1e-8, std::to_string(resid));
}

void expectations(Reporter& r, const Limits& lim) {
  for (const auto& bias : bias_panel())
    for (int n = 1; n <= lim.cap(6); ++n) {
      const auto single = exact_distribution(n, bias);
      ExactDistribution power = ExactDistribution::point_mass(Permutation::identity(n));
      for (int k = 0; k <= 3; ++k) {
        if (k > 0) power = convolve(power, single);
        const ShuffleSpec spec{n, bias, k};
        const Rational inv = power.expectation([](const Permutation& p) { return Rational(inversions(p)); });
        const Rational des = power.expectation([](const Permutation& p) { return Rational(descent_set(p).size()); });
        r.check("E[Inv] k=" + std::to_string(k) + " " + label(n, bias), inv == expected_inversions(spec), str(inv));
        r.check("E[Des] k=" + std::to_string(k) + " " + label(n, bias), des == expected_descents(spec), str(des));
        r.check("E[Inv] <= C(n,2)/2 k=" + std::to_string(k) + " " + label(n, bias),
                expected_inversions(spec) <= Rational(binomial(n, 2)) / 2);
      }
      r.check("E[Inv] = d/dq E q^Inv at 1 " + label(n, bias),
              inversion_pgf(n, bias).derivative().evaluate(Rational(1)) == expected_inversions({n, bias, 1}));
    }
  const ShuffleSpec gsr3{3, BiasVector::uniform(2), 1};
  r.check("E[Inv] n=3 GSR = 3/4", expected_inversions(gsr3) == q(3, 4));
  r.check("E[Des] n=3 GSR = 3/2", expected_descents(gsr3) == q(3, 2));
  for (int a = 2; a <= 3; ++a)
    for (int k = 1; k <= 4; ++k) {
      const Rational unbiased = expected_inversions({20, BiasVector::uniform(a), k});
      bool maximal = true;
      for (const auto& bias : bias_panel())
        if (bias.size() == a) maximal = maximal && expected_inversions({20, bias, k}) <= unbiased;
      const Rational closed = Rational(binomial(20, 2)) / 2 * (1 - pow(q(1, a), static_cast<unsigned long>(k)));
      r.check("unbiased maximizes E[Inv], a=" + std::to_string(a) + " k=" + std::to_string(k),
              maximal && unbiased == closed);
    }
}

void monte_carlo(Reporter& r, const Limits& lim) {
  const BiasVector bias = BiasVector::parse("0.4,0.6");
  for (int k : {1, 5, 7, 10}) {
    const ShuffleSpec spec{52, bias, k};
    const auto means = sample_statistic_means(spec, ShuffleMethod::inverse, lim.seed + static_cast<std::uint64_t>(k), 100000);
    const double zf = means.fixed_points.z_score(expected_fixed_points(spec).get_d());
    const double zi = means.inversions.z_score(expected_inversions(spec).get_d());
    const double zd = means.descents.z_score(expected_descents(spec).get_d());
    std::ostringstream os;
    os << "z(fixed)=" << zf << " z(inv)=" << zi << " z(des)=" << zd;
    r.check("n=52 p=(0.4,0.6) k=" + std::to_string(k) + " sample means within 4 SE", zf < 4 && zi < 4 && zd < 4, os.str());
  }
}

void report(Reporter& r, const Limits& lim) {
  const int n = lim.cap(4);
  const auto single = exact_distribution(n, BiasVector::uniform(2));
  const auto uniform = ExactDistribution::uniform(n);
  ExactDistribution power = ExactDistribution::point_mass(Permutation::identity(n));
  for (int k = 1; k <= 6; ++k) {
    power = convolve(power, single);
    const Rational bound = suf_bound({n, BiasVector::uniform(2), k});
    const Rational tv = tv_distance(power, uniform);
    if (bound < 1) r.check("report n=" + std::to_string(n) + " k=" + std::to_string(k) + ": exact tv <= bound", tv <= bound);
  }
}

struct Property {
  const char* name;
  const char* anchor;
  PropertyFn fn;
};

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {"worked-table", "P_{3,2} mass table", worked_table},
      {"descriptions", "equivalence of the four shuffle descriptions", descriptions},
      {"prop1", "convolution of biased shuffles (tensored bias)", prop1},
      {"kfold", "k-fold composition equals the tensored a^k-shuffle", kfold_sampling},
      {"tv-bound", "strong uniform time bound C(n,2)(sum p^2)^k", tv_bound},
      {"lalley", "Lalley lower bound and theta", lalley},
      {"perm-core", "inversions, q-factorials, q-multinomials", perm_core},
      {"standardization", "worked 12-letter standardization example", standardization},
      {"gessel", "restricted necklace bijection and cycle structure", gessel},
      {"mobius", "primitive necklace count M by Moebius inversion", mobius_counts},
      {"translate", "descent-class cycle counts equal necklace multisets", translate},
      {"cycle-pgf", "cycle structure generating function", cycle_pgf},
      {"fixpoint", "expected fixed points and Hölder bound", fixpoint},
      {"stanley", "descent set counts: inclusion-exclusion and determinant", stanley},
      {"ncycles", "n-cycles by descent set: inclusion-exclusion and divisor determinant", ncycles},
      {"involutions", "involutions by descent class via symmetric matrices", involutions},
      {"invgen", "q-exponential generating function for inversions", invgen},
      {"expectations", "expected inversions and descents", expectations},
      {"monte-carlo", "sampled statistics against closed forms", monte_carlo},
      {"report", "exact TV against the bound", report},
  };
  return props;
}

}  // namespace

std::vector<BiasVector> bias_panel() {
  return {BiasVector::uniform(1), BiasVector::parse("1/2,1/2"), BiasVector::parse("1/3,2/3"),
          BiasVector::parse("1/2,1/4,1/4"), BiasVector::parse("1/6,1/3,1/2")};
}

std::vector<PropertyInfo> verification_properties() {
  std::vector<PropertyInfo> out;
  for (const auto& p : registry()) out.push_back({p.name, p.anchor});
  return out;
}

std::vector<CheckOutcome> run_verification(const VerifyOptions& options,
                                           const std::function<void(const CheckOutcome&)>& on_outcome) {
  for (const auto& name : options.only)
    if (std::none_of(registry().begin(), registry().end(), [&](const Property& p) { return name == p.name; }))
      throw std::invalid_argument("unknown property '" + name + "'");
  const Limits lim{options.n_max, options.seed};
  std::vector<CheckOutcome> outcomes;
  for (const auto& p : registry()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), p.name) == options.only.end())
      continue;
    Reporter rep(p.name, outcomes, on_outcome);
    try {
      p.fn(rep, lim);
    } catch (const std::exception& e) {
      rep.check("exception", false, e.what());
    }
  }
  return outcomes;
}

}  // namespace riffle
