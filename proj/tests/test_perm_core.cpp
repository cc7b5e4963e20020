#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "riffle/permutation.hpp"
#include "riffle/polynomial.hpp"
#include "riffle/rational.hpp"

using namespace riffle;

namespace {

Permutation random_permutation(int n, std::mt19937_64& gen) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), gen);
  return Permutation(v);
}

oracle::Perm as_vec(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(ratio(6, 4) == Rational(3, 2));
  CHECK(to_string(ratio(6, 4)) == "3/2");
  CHECK_THROWS(ratio(1, 0));
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(7) == -1);
  CHECK_THROWS(mobius(0));
  CHECK(pow(Rational(1, 2), 3) == Rational(1, 8));
}

TEST_CASE("permutation construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_NOTHROW(Permutation({2, 3, 1}));
  CHECK(Permutation().size() == 0);
  CHECK_THROWS(Permutation::identity(-1));
  CHECK_THROWS(compose(Permutation::identity(2), Permutation::identity(3)));
}

TEST_CASE("rank and from_rank are inverse and lexicographic") {
  for (int n = 0; n <= 5; ++n) {
    std::uint64_t expected = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      CHECK(p.rank() == expected);
      CHECK(Permutation::from_rank(n, expected) == p);
      ++expected;
    });
    CHECK(expected == factorial_u64(n));
  }
  CHECK_THROWS_AS(Permutation::from_rank(3, 6), std::out_of_range);
}

TEST_CASE("descent sets always contain n") {
  CHECK(descent_set(Permutation::identity(3)) == DescentSet(3, {}));
  CHECK(descent_set(Permutation({2, 1, 3})) == DescentSet(3, {1}));
  auto st = descent_set(Permutation({3, 4, 1, 2, 5, 9, 10, 11, 6, 12, 7, 8}));
  CHECK(std::vector<int>(st.positions().begin(), st.positions().end()) == std::vector<int>{2, 8, 10, 12});
  CHECK(DescentSet(4, {2, 4}).positions().size() == 2);
  CHECK_THROWS_AS(DescentSet(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(DescentSet(3, {4}), std::invalid_argument);
  CHECK(DescentSet::all(4).size() == 8);
  CHECK(DescentSet(5, {1, 3}).composition() == Composition({1, 2, 2}));
  CHECK(DescentSet::from_composition(Composition({2, 0, 3})) == DescentSet(5, {2}));
  CHECK(DescentSet(5, {1, 3}).interior() == std::vector<int>{1, 3});
}

TEST_CASE("inversions and cycle types on small examples") {
  CHECK(inversions(Permutation::identity(6)) == 0);
  CHECK(inversions(Permutation({3, 2, 1})) == 3);
  CHECK(inversions(Permutation({3, 1, 2})) == 2);
  CHECK(cycle_type(Permutation::identity(3)) == CycleType{{{1, 3}}});
  CHECK(cycle_type(Permutation({2, 3, 1})) == CycleType{{{3, 1}}});
  CHECK(cycle_type(Permutation({3, 4, 1, 2, 5, 9, 10, 11, 6, 12, 7, 8})) == CycleType{{{1, 1}, {2, 3}, {5, 1}}});
  CHECK(fixed_points(Permutation({1, 3, 2})) == 1);
  CHECK(is_n_cycle(Permutation({2, 3, 1})));
  CHECK_FALSE(is_n_cycle(Permutation({2, 1, 3})));
  CHECK(is_involution(Permutation({2, 1, 3})));
  CHECK_FALSE(is_involution(Permutation({2, 3, 1})));
  CHECK(cycles(Permutation({2, 3, 1, 4})) == std::vector<std::vector<int>>{{1, 2, 3}, {4}});
  CHECK(CycleType{{{2, 3}, {1, 1}}}.total_size() == 7);
}

TEST_CASE("statistics agree with the oracles on every permutation of S_6") {
  for_each_permutation(6, [](const Permutation& p) {
    const auto v = as_vec(p);
    CHECK(inversions(p) == oracle::inversions(v));
    const auto d = descent_set(p);
    CHECK(std::vector<int>(d.positions().begin(), d.positions().end()) == oracle::descents(v));
    CHECK(as_vec(invert(p)) == oracle::inverse(v));
    CHECK(fixed_points(p) == oracle::fixed_points(v));
    std::vector<int> lengths;
    for (const auto& [len, count] : cycle_type(p).counts) lengths.insert(lengths.end(), static_cast<std::size_t>(count), len);
    CHECK(lengths == oracle::cycle_lengths(v));
  });
}

TEST_CASE("property: group laws and statistic symmetries on random permutations") {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 15);
    const auto p = random_permutation(n, gen);
    const auto q = random_permutation(n, gen);
    const auto r = random_permutation(n, gen);
    CHECK(compose(p, invert(p)).is_identity());
    CHECK(compose(invert(p), p).is_identity());
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(invert(compose(p, q)) == compose(invert(q), invert(p)));
    CHECK(inversions(p) == inversions(invert(p)));
    CHECK(cycle_type(conjugate(p, q)) == cycle_type(p));
    CHECK(cycle_type(p).total_size() == n);
    CHECK(descent_set(p).contains(n));
  }
}

TEST_CASE("compositions") {
  CHECK(Composition({2, 0, 3}).partial_sums() == std::vector<int>{2, 5});
  CHECK(Composition({2, 0, 3}).without_zeros() == Composition({2, 3}));
  CHECK(Composition({0, 0}).partial_sums().empty());
  CHECK_THROWS_AS(Composition({1, -1}), std::invalid_argument);
  CHECK(weak_compositions(3, 2).size() == 4);
  CHECK(weak_compositions(0, 3).size() == 1);
  CHECK(compositions(5).size() == 16);
  CHECK(multinomial(Composition({2, 2})) == 6);
  CHECK(multinomial(Composition({1, 2, 0})) == 3);
  CHECK_THROWS(weak_compositions(2, 0));
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial a{1, 2};
  const Polynomial b{0, 1};
  CHECK(a * b == Polynomial{0, 1, 2});
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(Polynomial{1, 0, 0}.degree() == 0);
  CHECK(a.evaluate(Rational(3)) == 7);
  CHECK(a.evaluate(0.5) == doctest::Approx(2.0));
  CHECK(Polynomial{1, 1, 1}.derivative() == Polynomial{1, 2});
  CHECK((a * b).divide_exact(b) == a);
  CHECK_THROWS_AS(a.divide_exact(Polynomial{}), std::domain_error);
  const Polynomial odd{1, 0, 1};
  const Polynomial linear{1, 1};
  CHECK_THROWS_AS(odd.divide_exact(linear), std::domain_error);
  CHECK(Polynomial::monomial(Rational(1, 2), 3).coefficient(3) == Rational(1, 2));
  CHECK(Polynomial::monomial(1, 3).coefficient(7) == 0);
}

TEST_CASE("q-analogs") {
  CHECK(q_integer(3) == Polynomial{1, 1, 1});
  CHECK(q_factorial(0) == Polynomial{1});
  CHECK(q_factorial(3) == Polynomial{1, 2, 2, 1});
  CHECK(q_binomial(4, 2) == Polynomial{1, 1, 2, 1, 1});
  CHECK(q_binomial(4, 5).is_zero());
  CHECK(q_multinomial(3, Composition({1, 2})) == Polynomial{1, 1, 1});
  CHECK(q_multinomial(4, Composition({2, 0, 2})) == q_binomial(4, 2));
  CHECK_THROWS_AS(q_multinomial(4, Composition({1, 2})), std::invalid_argument);
  CHECK_THROWS(q_factorial(-1));
}

TEST_CASE("q-factorial is the inversion generating function") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<long> counts;
    oracle::for_each_perm(n, [&](const oracle::Perm& p) {
      const auto inv = static_cast<std::size_t>(oracle::inversions(p));
      if (counts.size() <= inv) counts.resize(inv + 1);
      ++counts[inv];
    });
    std::vector<Rational> coeffs(counts.begin(), counts.end());
    CHECK(q_factorial(n) == Polynomial(coeffs));
  }
}
