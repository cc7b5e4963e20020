#include "riffle/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace riffle {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Permutation& p) { return Json(std::vector<int>(p.images().begin(), p.images().end())); }

Json to_json(const Word& w) { return Json(w.letters); }

Json to_json(const Necklace& nk) { return Json(std::vector<int>(nk.letters().begin(), nk.letters().end())); }

Json to_json(const NecklaceMultiset& ms) {
  Json arr = Json::array();
  for (const auto& [nk, m] : ms.entries) arr.push_back({{"necklace", to_json(nk)}, {"mult", m}});
  return arr;
}

Json to_json(const CycleType& type) {
  Json obj = Json::object();
  for (const auto& [len, c] : type.counts) obj[std::to_string(len)] = c;
  return obj;
}

Json to_json(const Polynomial& poly) {
  Json arr = Json::array();
  for (const auto& c : poly.coefficients()) arr.push_back(to_json(c));
  if (arr.empty()) arr.push_back("0/1");
  return arr;
}

Json to_json(const ExactDistribution& d) {
  Json masses = Json::array();
  d.for_each([&](const Permutation& p, const Rational& m) { masses.push_back({{"perm", to_json(p)}, {"p", to_json(m)}}); });
  return {{"n", d.n()}, {"masses", std::move(masses)}};
}

Json to_json(const CyclePolynomial& pgf) {
  Json terms = Json::array();
  for (const auto& [type, c] : pgf.terms) terms.push_back({{"cycles", to_json(type)}, {"p", to_json(c)}});
  return {{"n", pgf.n}, {"terms", std::move(terms)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"num/den\" string");
}

Permutation permutation_from_json(const Json& j) { return Permutation(j.get<std::vector<int>>()); }

Word word_from_json(const Json& j) {
  Word w{j.get<std::vector<int>>()};
  for (int l : w.letters)
    if (l < 1) throw std::invalid_argument("word letters must be >= 1");
  return w;
}

NecklaceMultiset necklace_multiset_from_json(const Json& j) {
  NecklaceMultiset ms;
  for (const auto& e : j) ms.add(Necklace(e.at("necklace").get<std::vector<int>>()), e.at("mult").get<int>());
  return ms;
}

ExactDistribution distribution_from_json(const Json& j) {
  ExactDistribution d(j.at("n").get<int>());
  for (const auto& e : j.at("masses")) d.add(permutation_from_json(e.at("perm")), rational_from_json(e.at("p")));
  if (d.total() != 1) throw std::invalid_argument("distribution masses do not sum to 1");
  return d;
}

std::string to_line(const Permutation& p) {
  std::string s;
  for (int v : p.images()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

std::string to_letters(std::span<const int> letters) {
  const bool small = std::all_of(letters.begin(), letters.end(), [](int l) { return l >= 1 && l <= 26; });
  std::string s;
  for (int l : letters) {
    if (small) {
      s += static_cast<char>('a' + l - 1);
    } else {
      if (!s.empty()) s += ' ';
      s += std::to_string(l);
    }
  }
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  const bool alphabetic = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c));
  });
  if (alphabetic) {
    for (char c : text) w.letters.push_back(c - 'a' + 1);
    return w;
  }
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    const int l = std::stoi(token, &used);
    if (used != token.size() || l < 1) throw std::invalid_argument("bad word letter '" + token + "'");
    w.letters.push_back(l);
  }
  if (w.letters.empty()) throw std::invalid_argument("empty word");
  return w;
}

}  // namespace riffle
