// Acceptance run: one PASS/FAIL line per criterion with its runtime budget.
// Exit status is nonzero if any criterion fails or overruns its budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "riffle/counting.hpp"
#include "riffle/genfunc.hpp"
#include "riffle/io.hpp"
#include "riffle/montecarlo.hpp"
#include "riffle/necklace.hpp"
#include "riffle/shuffle.hpp"
#include "riffle/verify.hpp"

using namespace riffle;

namespace {

// Tolerances.
constexpr double kThetaTolerance = 1e-10;
constexpr double kStepsTolerance = 1e-9;
constexpr double kChiSquareLevel = 1e-3;
constexpr double kEulerTolerance = 1e-8;
constexpr double kMaxZ = 4.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

bool equals_oracle(const ExactDistribution& d, const std::map<oracle::Perm, Rational>& law) {
  Rational seen = 0;
  for (const auto& [perm, mass] : law) {
    if (d.mass(Permutation(perm)) != mass) return false;
    seen += mass;
  }
  return seen == 1;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// 1 ------------------------------------------------------------------------
Outcome worked_table() {
  Outcome o;
  for (const Rational& p1 : {Rational(1, 2), Rational(1, 3), Rational(1, 5)}) {
    const Rational p2 = 1 - p1;
    const auto d = exact_distribution(3, BiasVector({p1, p2}));
    // cycle form -> one-line: (1)(2)(3)=123 (1)(23)=132 (2)(13)=321 (3)(12)=213 (123)=231 (132)=312
    o.require(d.mass(Permutation({1, 2, 3})) == p1 * p1 * p1 + p1 * p1 * p2 + p1 * p2 * p2 + p2 * p2 * p2,
              "identity at p1=" + to_string(p1));
    o.require(d.mass(Permutation({1, 3, 2})) == p1 * p1 * p2, "(1)(23)");
    o.require(d.mass(Permutation({3, 2, 1})) == 0, "(2)(13)");
    o.require(d.mass(Permutation({2, 1, 3})) == p1 * p2 * p2, "(3)(12)");
    o.require(d.mass(Permutation({2, 3, 1})) == p1 * p2 * p2, "(123)");
    o.require(d.mass(Permutation({3, 1, 2})) == p1 * p1 * p2, "(132)");
  }
  return o;
}

// 2 ------------------------------------------------------------------------
Outcome descriptions() {
  Outcome o;
  for (const auto& bias : bias_panel())
    for (int n = 0; n <= 5; ++n) {
      const auto law = oracle::shuffle_law(n, bias.probabilities());
      const std::string tag = " n=" + std::to_string(n) + " p=" + to_string(bias);
      o.require(equals_oracle(exact_distribution(n, bias), law), "exact" + tag);
      for (auto m : {ShuffleMethod::interleave, ShuffleMethod::drop, ShuffleMethod::inverse})
        o.require(equals_oracle(description_measure(n, bias, m), law), std::string(to_string(m)) + tag);
    }
  const auto bias = BiasVector::parse("1/3,2/3");
  const auto samples = sample_batch({4, bias, 1}, ShuffleMethod::geometric, kSeed, 100000);
  const auto chi = chi_square_test(exact_distribution(4, bias), samples);
  o.require(chi.p_value > kChiSquareLevel, "geometric chi-square p=" + fmt(chi.p_value));
  if (o.ok) o.note = "geometric chi-square p=" + fmt(chi.p_value);
  return o;
}

// 3 ------------------------------------------------------------------------
Outcome prop1() {
  Outcome o;
  const std::vector<BiasVector> twos{BiasVector::parse("1/2,1/2"), BiasVector::parse("1/3,2/3")};
  const std::vector<BiasVector> threes{BiasVector::parse("1/2,1/4,1/4"), BiasVector::parse("1/6,1/3,1/2")};
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : twos)
      for (const auto* group : {&twos, &threes})
        for (const auto& q : *group) {
          const auto lhs = convolve(exact_distribution(n, p), exact_distribution(n, q));
          o.require(lhs == exact_distribution(n, tensor_bias(p, q)),
                    "n=" + std::to_string(n) + " " + to_string(p) + " * " + to_string(q));
          if (n <= 4)
            o.require(equals_oracle(lhs, oracle::compose_laws(oracle::shuffle_law(n, p.probabilities()),
                                                              oracle::shuffle_law(n, q.probabilities()))),
                      "oracle composition n=" + std::to_string(n));
        }
  return o;
}

// 4 ------------------------------------------------------------------------
Outcome upper_bound() {
  Outcome o;
  for (const auto& bias : bias_panel())
    for (int n = 1; n <= 6; ++n) {
      const auto single = exact_distribution(n, bias);
      const auto uniform = ExactDistribution::uniform(n);
      auto power = ExactDistribution::point_mass(Permutation::identity(n));
      for (int k = 1; k <= 8; ++k) {
        power = convolve(power, single);
        o.require(tv_distance(power, uniform) <= suf_bound({n, bias, k}),
                  "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + to_string(bias));
      }
    }
  o.require(tv_distance(exact_distribution(3, BiasVector::uniform(2)), ExactDistribution::uniform(3)) == Rational(1, 3),
            "tv(P_3, U) != 1/3");
  return o;
}

// 5 ------------------------------------------------------------------------
Outcome lalley() {
  Outcome o;
  const double theta = lalley_theta(Rational(1, 2));
  o.require(std::abs(theta - 3.0) < kThetaTolerance, "theta(1/2)=" + fmt(theta));
  for (double n : {2.0, 52.0, 1000.0, 1e6})
    o.require(std::abs(lalley_lower_steps(n, Rational(1, 2)) - 1.5 * std::log2(n)) < kStepsTolerance,
              "steps at n=" + fmt(n));
  return o;
}

// 6 ------------------------------------------------------------------------
Outcome standardization_example() {
  Outcome o;
  const Word w = parse_word("bbaabcccbcbb");
  o.require(to_line(standardize(w)) == "3 4 1 2 5 9 10 11 6 12 7 8", "st(w)=" + to_line(standardize(w)));
  std::string necklaces;
  for (const auto& [nk, m] : necklace_decomposition(w).entries)
    for (int i = 0; i < m; ++i) necklaces += "(" + to_letters(nk.letters()) + ")";
  o.require(necklaces == "(ab)(ab)(b)(bc)(bcbcc)", "U(w)=" + necklaces);
  return o;
}

// 7 ------------------------------------------------------------------------
Outcome restricted_bijection() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (const auto& parts : compositions(n)) {
      std::set<NecklaceMultiset> images;
      long domain = 0;
      bool structure = true;
      for_each_permutation(n, [&](const Permutation& p) {
        if (!in_ubar_domain(p, parts)) return;
        ++domain;
        const auto img = ubar_forward(p, parts);
        structure = structure && img.lengths() == cycle_type(p);
        for (const auto& [nk, m] : img.entries) structure = structure && is_primitive(nk);
        images.insert(img);
      });
      const auto target = enumerate_primitive_multisets(parts);
      const std::string tag = "n=" + std::to_string(n) + " parts=" + Json(std::vector<int>(parts.parts().begin(), parts.parts().end())).dump();
      o.require(structure, "cycle structure or primitivity " + tag);
      o.require(static_cast<long>(images.size()) == domain, "not injective " + tag);
      o.require(images == std::set<NecklaceMultiset>(target.begin(), target.end()), "not onto " + tag);
    }
  return o;
}

// 8 ------------------------------------------------------------------------
Outcome cycle_structure() {
  Outcome o;
  for (const auto& bias : bias_panel())
    for (int n = 1; n <= 6; ++n) {
      const auto law = oracle::shuffle_law(n, bias.probabilities());
      std::map<std::vector<int>, Rational> brute;
      Rational fixed = 0;
      for (const auto& [p, m] : law) {
        brute[oracle::cycle_lengths(p)] += m;
        fixed += m * oracle::fixed_points(p);
      }
      std::map<std::vector<int>, Rational> pgf;
      for (const auto& [type, c] : cycle_structure_pgf(n, bias).terms) {
        std::vector<int> lengths;
        for (const auto& [len, count] : type.counts) lengths.insert(lengths.end(), static_cast<std::size_t>(count), len);
        pgf[lengths] = c;
      }
      const std::string tag = " n=" + std::to_string(n) + " p=" + to_string(bias);
      o.require(pgf == brute, "cycle PGF" + tag);
      o.require(expected_fixed_points({n, bias, 1}) == fixed, "fixed points" + tag);
    }
  o.require(expected_fixed_points({3, BiasVector::uniform(2), 1}) == Rational(7, 4), "E fixed points != 7/4");
  return o;
}

// 9 ------------------------------------------------------------------------
Outcome section4() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    std::map<std::vector<int>, long> all;
    std::map<std::vector<int>, long> cycles;
    std::vector<std::vector<int>> involution_descents;
    oracle::for_each_perm(n, [&](const oracle::Perm& p) {
      const auto d = oracle::descents(p);
      if (n <= 7) ++all[d];
      if (oracle::cycle_lengths(p) == std::vector<int>{n}) ++cycles[d];
      if (n <= 7 && oracle::inverse(p) == p) involution_descents.push_back(d);
    });
    for (const auto& j : DescentSet::all(n)) {
      const std::vector<int> key(j.positions().begin(), j.positions().end());
      const std::string tag = " n=" + std::to_string(n) + " J=" + Json(key).dump();
      if (n <= 7) {
        o.require(count_descent_exact(j) == all[key], "count_descent_exact" + tag);
        o.require(count_descent_det(j) == all[key], "count_descent_det" + tag);
        long within = 0;
        for (const auto& d : involution_descents)
          within += std::all_of(d.begin(), d.end(), [&](int x) { return j.contains(x); });
        o.require(involutions_descent_subset(j) == within, "involutions" + tag);
      }
      o.require(ncycles_descent_ie(j) == cycles[key], "ncycles_descent_ie" + tag);
      o.require(ncycles_descent_det(j) == cycles[key], "ncycles_descent_det" + tag);
    }
  }
  return o;
}

// 10 -----------------------------------------------------------------------
Outcome section5() {
  Outcome o;
  for (const auto& bias : bias_panel())
    for (int n = 0; n <= 7; ++n) {
      Polynomial brute;
      for (const auto& [p, m] : oracle::shuffle_law(n, bias.probabilities()))
        brute += Polynomial::monomial(m, static_cast<int>(oracle::inversions(p)));
      const auto series = inversion_pgf(n, bias);
      const std::string tag = " n=" + std::to_string(n) + " p=" + to_string(bias);
      o.require(series == inversion_pgf_by_compositions(n, bias), "series vs composition sum" + tag);
      o.require(series == brute, "series vs brute force" + tag);
      if (n >= 1)
        o.require(series.derivative().evaluate(Rational(1)) == expected_inversions({n, bias, 1}), "q-derivative" + tag);
    }
  const ShuffleSpec gsr{3, BiasVector::uniform(2), 1};
  o.require(expected_inversions(gsr) == Rational(3, 4), "E Inv != 3/4");
  o.require(expected_descents(gsr) == Rational(3, 2), "E Des != 3/2");
  const double residual = euler_identity_residual(0.5, 0.5, 30);
  o.require(residual < kEulerTolerance, "Euler residual " + fmt(residual));
  return o;
}

// 11 -----------------------------------------------------------------------
Outcome monte_carlo() {
  Outcome o;
  const auto bias = BiasVector::parse("0.4,0.6");
  std::string zs;
  for (int k : {1, 5, 10}) {
    const ShuffleSpec spec{52, bias, k};
    const auto means = sample_statistic_means(spec, ShuffleMethod::inverse, kSeed + static_cast<std::uint64_t>(k), 100000);
    const double zf = means.fixed_points.z_score(expected_fixed_points(spec).get_d());
    const double zi = means.inversions.z_score(expected_inversions(spec).get_d());
    const double zd = means.descents.z_score(expected_descents(spec).get_d());
    zs += " k=" + std::to_string(k) + ":" + fmt(zf) + "/" + fmt(zi) + "/" + fmt(zd);
    o.require(zf < kMaxZ && zi < kMaxZ && zd < kMaxZ, "z too large at k=" + std::to_string(k));
  }
  if (o.ok) o.note = "z(fixed/inv/des)" + zs;
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked P_{3,2} table, exact", 1, worked_table},
      {2, "description equivalence (exact n<=5, chi-square geometric)", 120, descriptions},
      {3, "convolution of biased shuffles, exact n<=5", 60, prop1},
      {4, "TV <= C(n,2)(sum p^2)^k, n<=6 k<=8; tv(P_3,U)=1/3", 120, upper_bound},
      {5, "theta(1/2)=3 and 1.5 log2 n lower steps", 1, lalley},
      {6, "12-letter standardization and necklace example", 1, standardization_example},
      {7, "restricted necklace bijection, every composition n<=6", 120, restricted_bijection},
      {8, "cycle PGF and expected fixed points vs brute force", 180, cycle_structure},
      {9, "descent-set, n-cycle and involution counts vs brute force", 600, section4},
      {10, "inversion PGF three ways, E Inv, E Des, Euler residual", 180, section5},
      {11, "Monte Carlo closure at n=52, p=(0.4,0.6)", 120, monte_carlo},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) outcome.require(false, "over budget " + fmt(c.budget_seconds) + " s");
    failures += !outcome.ok;
    std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                outcome.note.empty() ? "" : " -- ", outcome.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
