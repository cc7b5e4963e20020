#include <doctest.h>

#include <cmath>

#include "riffle/io.hpp"
#include "riffle/montecarlo.hpp"
#include "riffle/verify.hpp"

using namespace riffle;

TEST_CASE("distribution JSON layout") {
  const auto d = exact_distribution(2, BiasVector::uniform(2));
  CHECK(to_json(d).dump() == R"({"n":2,"masses":[{"perm":[1,2],"p":"3/4"},{"perm":[2,1],"p":"1/4"}]})");
  CHECK(distribution_from_json(to_json(d)) == d);
  const auto big = exact_distribution(4, BiasVector::parse("1/6,1/3,1/2"));
  CHECK(distribution_from_json(Json::parse(to_json(big).dump())) == big);
  CHECK_THROWS_AS(distribution_from_json(Json::parse(R"({"n":2,"masses":[{"perm":[1,2],"p":"1/2"}]})")),
                  std::invalid_argument);
}

TEST_CASE("value encodings round-trip") {
  CHECK(to_json(Rational(2, 4)).get<std::string>() == "1/2");
  CHECK(rational_from_json(Json("3/9")) == Rational(1, 3));
  CHECK(rational_from_json(Json(3)) == 3);
  CHECK_THROWS(rational_from_json(Json(0.5)));
  CHECK_THROWS(rational_from_json(Json("x")));
  const Permutation p({3, 1, 2});
  CHECK(to_json(p).dump() == "[3,1,2]");
  CHECK(permutation_from_json(to_json(p)) == p);
  CHECK_THROWS(permutation_from_json(Json::parse("[1,1]")));
  NecklaceMultiset ms;
  ms.add(Necklace({1, 2}), 2);
  ms.add(Necklace({3}));
  CHECK(to_json(ms).dump() == R"([{"necklace":[1,2],"mult":2},{"necklace":[3],"mult":1}])");
  CHECK(necklace_multiset_from_json(to_json(ms)) == ms);
  CHECK(word_from_json(to_json(Word{{2, 1}})) == Word{{2, 1}});
  CHECK_THROWS(word_from_json(Json::parse("[0]")));
  CHECK(to_json(CycleType{{{1, 2}, {3, 1}}}).dump() == R"({"1":2,"3":1})");
  CHECK(to_json(Polynomial{Rational(1, 2), 0, 1}).dump() == R"(["1/2","0/1","1/1"])");
}

TEST_CASE("text helpers") {
  CHECK(to_line(Permutation({3, 1, 2})) == "3 1 2");
  CHECK(to_line(Permutation()) == "");
  const std::vector<int> letters{2, 2, 1};
  CHECK(to_letters(letters) == "bba");
  const std::vector<int> wide{27, 1};
  CHECK(to_letters(wide) == "27 1");
  CHECK(parse_word("bbaab") == Word{{2, 2, 1, 1, 2}});
  CHECK(parse_word("2,2,1") == Word{{2, 2, 1}});
  CHECK(parse_word("2 2 1") == Word{{2, 2, 1}});
  CHECK_THROWS(parse_word(""));
  CHECK_THROWS(parse_word("2,x"));
}

TEST_CASE("mean accumulator") {
  MeanAccumulator acc;
  for (double x : {1.0, 2.0, 3.0, 4.0}) acc.add(x);
  const auto e = acc.estimate();
  CHECK(e.mean == doctest::Approx(2.5));
  CHECK(e.std_error == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
  CHECK(e.samples == 4);
  CHECK(e.z_score(2.5) == doctest::Approx(0.0));
}

TEST_CASE("chi-square test") {
  const auto d = exact_distribution(3, BiasVector::uniform(2));
  std::vector<Permutation> outside{Permutation({3, 2, 1})};
  CHECK(chi_square_test(d, outside).p_value == 0.0);
  CHECK_THROWS(chi_square_test(d, std::vector<Permutation>{}));
  const auto samples = sample_batch({3, BiasVector::uniform(2), 1}, ShuffleMethod::geometric, 5, 20000);
  const auto r = chi_square_test(d, samples);
  CHECK(r.degrees_of_freedom == 4);  // five permutations carry mass
  CHECK(r.p_value > 1e-4);
}

TEST_CASE("verification registry") {
  const auto props = verification_properties();
  CHECK(props.size() >= 15);
  VerifyOptions bad;
  bad.only = {"no-such-property"};
  CHECK_THROWS_AS(run_verification(bad), std::invalid_argument);
  VerifyOptions quick;
  quick.only = {"worked-table", "standardization"};
  std::size_t streamed = 0;
  const auto outcomes = run_verification(quick, [&](const CheckOutcome&) { ++streamed; });
  CHECK(streamed == outcomes.size());
  CHECK(!outcomes.empty());
  for (const auto& o : outcomes) CHECK_MESSAGE(o.passed, o.property << ": " << o.check << " " << o.detail);
  CHECK(bias_panel().size() == 5);
}
