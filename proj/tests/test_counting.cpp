#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "riffle/counting.hpp"
#include "riffle/necklace.hpp"

using namespace riffle;

TEST_CASE("descent-subset counts are multinomials") {
  CHECK(count_descent_subset(Composition({1, 2})) == 3);
  CHECK(count_descent_subset(Composition({2, 2})) == 6);
  CHECK(count_descent_subset(Composition({2, 2})) ==
        brute_count(4, [](const Permutation& p) { return descent_set(p).is_subset_of(DescentSet(4, {2})); }));
}

TEST_CASE("exact descent-set counts on named examples") {
  CHECK(count_descent_exact(DescentSet(3, {1})) == 2);
  CHECK(count_descent_det(DescentSet(3, {1})) == 2);
  const std::vector<int> one{1};
  CHECK(count_descent_det(one, 3) == 2);
  CHECK(bareiss_determinant({{3, 1}, {1, 1}}) == 2);
  CHECK(count_descent_exact(DescentSet(4, {2})) == 5);
  CHECK(brute_count(4, [](const Permutation& p) { return descent_set(p) == DescentSet(4, {2}); }) == 5);
  CHECK(count_descent_exact(DescentSet(5, {})) == 1);
  CHECK(count_descent_exact(DescentSet(5, {1, 2, 3, 4})) == 1);
}

TEST_CASE("descent-set counts match the oracle for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<int>, long> tally;
    oracle::for_each_perm(n, [&](const oracle::Perm& p) { ++tally[oracle::descents(p)]; });
    BigInt total = 0;
    for (const auto& j : DescentSet::all(n)) {
      const std::vector<int> key(j.positions().begin(), j.positions().end());
      CHECK(count_descent_exact(j) == tally[key]);
      CHECK(count_descent_det(j) == tally[key]);
      total += count_descent_exact(j);
    }
    CHECK(total == factorial(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("n-cycles by descent set") {
  CHECK(ncycles_descent_ie(DescentSet(3, {1})) == 1);
  CHECK(ncycles_descent_det(DescentSet(3, {1})) == 1);
  for (int n = 2; n <= 8; ++n) {
    CHECK(ncycles_descent_ie(DescentSet(n, {})) == 0);
    CHECK(ncycles_descent_det(DescentSet(n, {})) == 0);
  }
  CHECK(ncycles_descent_ie(DescentSet(1, {})) == 1);
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<int>, long> tally;
    oracle::for_each_perm(n, [&](const oracle::Perm& p) {
      if (oracle::cycle_lengths(p) == std::vector<int>{n}) ++tally[oracle::descents(p)];
    });
    BigInt total = 0;
    for (const auto& j : DescentSet::all(n)) {
      const std::vector<int> key(j.positions().begin(), j.positions().end());
      CHECK(ncycles_descent_ie(j) == tally[key]);
      CHECK(ncycles_descent_det(j) == tally[key]);
      total += ncycles_descent_ie(j);
    }
    CHECK(total == factorial(static_cast<unsigned long>(n - 1)));
  }
}

TEST_CASE("n-cycles with descents inside K are counted by primitive necklaces") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& k : DescentSet::all(n)) {
      const BigInt within = brute_count(n, [&](const Permutation& p) { return is_n_cycle(p) && descent_set(p).is_subset_of(k); });
      CHECK(within == primitive_count(k.composition()));
    }
}

TEST_CASE("involutions by descent class") {
  CHECK(involutions_descent_subset(DescentSet(2, {1})) == 2);
  CHECK(symmetric_matrices(std::vector<int>{1, 1}).size() == 2);
  CHECK(symmetric_matrices(std::vector<int>{}).size() == 1);
  CHECK(symmetric_matrices(std::vector<int>{2}).size() == 1);
  CHECK_THROWS_AS(symmetric_matrices(std::vector<int>{1, -1}), std::invalid_argument);
  for (const auto& m : symmetric_matrices(std::vector<int>{2, 1, 3})) {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) CHECK(m[i][j] == m[j][i]);
  }
  for (int n = 1; n <= 7; ++n)
    for (const auto& k : DescentSet::all(n)) {
      long count = 0;
      oracle::for_each_perm(n, [&](const oracle::Perm& p) {
        if (oracle::inverse(p) != p) return;
        const auto d = oracle::descents(p);
        count += std::all_of(d.begin(), d.end(), [&](int x) { return k.contains(x); });
      });
      CHECK(involutions_descent_subset(k) == count);
    }
}

TEST_CASE("counting errors") {
  CHECK_THROWS_AS(brute_count(11, [](const Permutation&) { return true; }), std::invalid_argument);
  CHECK(brute_count(0, [](const Permutation&) { return true; }) == 1);
  const std::vector<int> bad{2, 1};
  CHECK_THROWS_AS(count_descent_det(bad, 4), std::invalid_argument);
  const std::vector<int> outside{4};
  CHECK_THROWS_AS(count_descent_det(outside, 4), std::invalid_argument);
  CHECK_THROWS_AS(bareiss_determinant({{1, 2}}), std::invalid_argument);
  CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}) == 6);
  CHECK(bareiss_determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}) == 0);
  CHECK(bareiss_determinant({{0, 0, 1}, {0, 2, 0}, {3, 0, 0}}) == -6);
}
