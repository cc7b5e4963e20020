#pragma once

// JSON and text encodings of the library's values.  Permutations are arrays
// of 1-based images, rationals are "num/den" strings, distributions are
// {"n":3,"masses":[{"perm":[1,3,2],"p":"1/8"}, ...]} with zero masses omitted,
// and necklace multisets are [{"necklace":[1,2],"mult":2}, ...].

#include <string>

#include <json.hpp>

#include "riffle/genfunc.hpp"
#include "riffle/necklace.hpp"
#include "riffle/permutation.hpp"
#include "riffle/polynomial.hpp"
#include "riffle/shuffle.hpp"

namespace riffle {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Permutation& p);
Json to_json(const Word& w);
Json to_json(const Necklace& nk);
Json to_json(const NecklaceMultiset& ms);
Json to_json(const CycleType& type);  // {"1":2,"3":1}
Json to_json(const Polynomial& poly);  // ["c0","c1",...]
Json to_json(const ExactDistribution& d);
Json to_json(const CyclePolynomial& pgf);

Rational rational_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
Word word_from_json(const Json& j);
NecklaceMultiset necklace_multiset_from_json(const Json& j);
ExactDistribution distribution_from_json(const Json& j);

/// "3 1 2".
std::string to_line(const Permutation& p);

/// Letters 1..26 as a..z, larger alphabets as space-separated integers.
std::string to_letters(std::span<const int> letters);

/// Accepts "bbaab", "2,2,1,1,2" or "2 2 1 1 2".
Word parse_word(std::string_view text);

}  // namespace riffle
