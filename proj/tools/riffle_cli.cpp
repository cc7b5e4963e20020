// Command-line front end: sampling, exact distributions, counting,
// statistics, the necklace bijection, mixing reports and self-verification.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "riffle/counting.hpp"
#include "riffle/genfunc.hpp"
#include "riffle/io.hpp"
#include "riffle/montecarlo.hpp"
#include "riffle/necklace.hpp"
#include "riffle/shuffle.hpp"
#include "riffle/verify.hpp"

namespace {

using namespace riffle;

constexpr std::uint64_t kDefaultSeed = 0;

enum class Format { lines, json, csv };

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string format = "lines";
  int n_max = 0;

  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::lines;
  }
  int cap(int fallback) const { return n_max > 0 ? n_max : fallback; }
  // The note is skipped when the bias is a point mass: such decks never vary.
  std::uint64_t sampling_seed(const BiasVector& bias) const {
    const bool random = std::count_if(bias.probabilities().begin(), bias.probabilities().end(),
                                      [](const Rational& q) { return q != 0; }) > 1;
    if (!seed && random) std::cerr << "note: no --seed given, using " << kDefaultSeed << "\n";
    return seed.value_or(kDefaultSeed);
  }
};

std::string decimal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string decimal(const Rational& r) { return decimal(r.get_d()); }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (in >> std::ws && !in.eof()) {
    int v = 0;
    if (!(in >> v)) throw std::invalid_argument("expected integers in '" + text + "'");
    out.push_back(v);
    if (in.peek() == ',') in.get();
  }
  return out;
}

Permutation parse_permutation(const std::string& text) { return Permutation(parse_ints(text)); }

std::string join_csv(std::span<const int> v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

// ------------------------------------------------------------------ sample

struct SampleArgs {
  int n = 0;
  std::string p = "1/2,1/2";
  int k = 1;
  std::string method = "inverse";
  std::size_t samples = 1;
  unsigned threads = 1;
  bool summary = false;
};

void cmd_sample(const Globals& g, const SampleArgs& a) {
  const ShuffleSpec spec{a.n, BiasVector::parse(a.p), a.k};
  const ShuffleMethod method = parse_method(a.method);
  if (a.samples < 1) throw std::invalid_argument("--samples must be at least 1");
  const std::uint64_t seed = g.sampling_seed(spec.bias);

  if (a.summary) {
    const auto means = sample_statistic_means(spec, method, seed, a.samples);
    const std::vector<std::tuple<std::string, MeanEstimate, Rational>> rows = {
        {"fixed_points", means.fixed_points, expected_fixed_points(spec)},
        {"inversions", means.inversions, expected_inversions(spec)},
        {"descents", means.descents, spec.n >= 1 ? expected_descents(spec) : Rational(0)},
    };
    Json out = Json::array();
    for (const auto& [name, est, exact] : rows) {
      const double z = est.z_score(exact.get_d());
      switch (g.fmt()) {
        case Format::json:
          out.push_back({{"statistic", name}, {"mean", est.mean}, {"std_error", est.std_error},
                         {"exact", to_json(exact)}, {"exact_decimal", exact.get_d()}, {"z", z}});
          break;
        case Format::csv:
          if (name == "fixed_points") std::cout << "statistic,mean,std_error,exact,exact_decimal,z\n";
          std::cout << name << ',' << decimal(est.mean) << ',' << decimal(est.std_error) << ',' << to_string(exact)
                    << ',' << decimal(exact) << ',' << decimal(z) << '\n';
          break;
        case Format::lines:
          std::cout << name << " mean " << decimal(est.mean) << " se " << decimal(est.std_error) << " exact "
                    << to_string(exact) << " (" << decimal(exact) << ") z " << decimal(z) << '\n';
      }
    }
    if (g.fmt() == Format::json) std::cout << out.dump() << '\n';
    return;
  }

  const auto perms = sample_batch(spec, method, seed, a.samples, std::max(1u, a.threads));
  switch (g.fmt()) {
    case Format::json: {
      Json out = Json::array();
      for (const auto& p : perms) out.push_back(to_json(p));
      std::cout << out.dump() << '\n';
      break;
    }
    case Format::csv:
      for (const auto& p : perms) std::cout << join_csv(p.images(), ',') << '\n';
      break;
    case Format::lines:
      for (const auto& p : perms) std::cout << to_line(p) << '\n';
  }
}

// -------------------------------------------------------------- dist / tv

struct SpecArgs {
  int n = 0;
  std::string p = "1/2,1/2";
  int k = 1;
};

void print_distribution(const Globals& g, const ExactDistribution& d) {
  switch (g.fmt()) {
    case Format::json:
      std::cout << to_json(d).dump() << '\n';
      break;
    case Format::csv:
      std::cout << "perm,p,p_decimal\n";
      d.for_each([](const Permutation& p, const Rational& m) {
        std::cout << to_line(p) << ',' << to_string(m) << ',' << decimal(m) << '\n';
      });
      break;
    case Format::lines:
      d.for_each([](const Permutation& p, const Rational& m) {
        std::cout << to_line(p) << '\t' << to_string(m) << '\n';
      });
  }
}

void cmd_dist(const Globals& g, const SpecArgs& a, const std::string& method) {
  const BiasVector bias = BiasVector::parse(a.p);
  const int cap = g.cap(kDefaultEnumerationCap);
  if (method == "exact") {
    print_distribution(g, exact_distribution({a.n, bias, a.k}, cap));
    return;
  }
  const auto single = description_measure(a.n, bias, parse_method(method), cap);
  print_distribution(g, convolution_power(single, a.k));
}

void cmd_tv(const Globals& g, const SpecArgs& a) {
  const ShuffleSpec spec{a.n, BiasVector::parse(a.p), a.k};
  const Rational tv = tv_distance(exact_distribution(spec, g.cap(kDefaultEnumerationCap)), ExactDistribution::uniform(a.n));
  const Rational bound = suf_bound(spec);
  switch (g.fmt()) {
    case Format::json:
      std::cout << Json{{"n", a.n}, {"k", a.k}, {"tv", to_json(tv)}, {"tv_decimal", tv.get_d()},
                        {"suf_bound", to_json(bound)}, {"suf_bound_decimal", bound.get_d()}}
                       .dump()
                << '\n';
      break;
    case Format::csv:
      std::cout << "n,k,tv,tv_decimal,suf_bound,suf_bound_decimal\n"
                << a.n << ',' << a.k << ',' << to_string(tv) << ',' << decimal(tv) << ',' << to_string(bound) << ','
                << decimal(bound) << '\n';
      break;
    case Format::lines:
      std::cout << "tv " << to_string(tv) << " (" << decimal(tv) << ")\n"
                << "suf_bound " << to_string(bound) << " (" << decimal(bound) << ")\n";
  }
}

// ------------------------------------------------------------------ stats

void print_polynomial(const Globals& g, const std::string& name, const Polynomial& poly) {
  switch (g.fmt()) {
    case Format::json:
      std::cout << Json{{"statistic", name}, {"coefficients", to_json(poly)}}.dump() << '\n';
      break;
    case Format::csv:
      std::cout << "power,coefficient,decimal\n";
      for (int i = 0; i <= poly.degree(); ++i)
        std::cout << i << ',' << to_string(poly.coefficient(i)) << ',' << decimal(poly.coefficient(i)) << '\n';
      break;
    case Format::lines:
      for (int i = 0; i <= poly.degree(); ++i)
        if (poly.coefficient(i) != 0) std::cout << i << '\t' << to_string(poly.coefficient(i)) << '\n';
  }
}

void print_value(const Globals& g, const std::string& name, const Rational& value) {
  switch (g.fmt()) {
    case Format::json:
      std::cout << Json{{"statistic", name}, {"exact", to_json(value)}, {"decimal", value.get_d()}}.dump() << '\n';
      break;
    case Format::csv:
      std::cout << "statistic,exact,decimal\n" << name << ',' << to_string(value) << ',' << decimal(value) << '\n';
      break;
    case Format::lines:
      std::cout << name << ' ' << to_string(value) << " (" << decimal(value) << ")\n";
  }
}

void cmd_stats(const Globals& g, const SpecArgs& a, const std::string& stat) {
  const ShuffleSpec spec{a.n, BiasVector::parse(a.p), a.k};
  const int cap = g.cap(kSeriesCap);
  if (stat == "fixed-points") {
    print_value(g, "expected_fixed_points", expected_fixed_points(spec));
  } else if (stat == "inversions") {
    print_value(g, "expected_inversions", expected_inversions(spec));
  } else if (stat == "descents") {
    print_value(g, "expected_descents", expected_descents(spec));
  } else if (stat == "inv-pgf") {
    print_polynomial(g, "inversion_pgf", inversion_pgf(spec, cap));
  } else if (stat == "fixed-point-pgf") {
    print_polynomial(g, "fixed_point_pgf", fixed_point_pgf(spec, cap));
  } else if (stat == "cycle-pgf") {
    const auto pgf = cycle_structure_pgf(spec, cap);
    switch (g.fmt()) {
      case Format::json:
        std::cout << to_json(pgf).dump() << '\n';
        break;
      case Format::csv:
        std::cout << "cycles,p,p_decimal\n";
        for (const auto& [type, c] : pgf.terms)
          std::cout << '"' << to_json(type).dump() << '"' << ',' << to_string(c) << ',' << decimal(c) << '\n';
        break;
      case Format::lines:
        for (const auto& [type, c] : pgf.terms) std::cout << to_json(type).dump() << '\t' << to_string(c) << '\n';
    }
  } else {
    throw std::invalid_argument("unknown statistic '" + stat + "'");
  }
}

// ------------------------------------------------------------------ count

void cmd_count(const Globals& g, int n, const std::string& j_text, const std::string& method) {
  std::vector<int> interior;
  for (int v : parse_ints(j_text))
    if (v != n) interior.push_back(v);
  const DescentSet j(n, interior);
  BigInt exact;
  BigInt cycles;
  if (method == "ie") {
    exact = count_descent_exact(j);
    cycles = ncycles_descent_ie(j);
  } else if (method == "det") {
    exact = count_descent_det(j);
    cycles = ncycles_descent_det(j);
  } else if (method == "brute") {
    const int cap = g.cap(kBruteForceCap);
    exact = brute_count(n, [&](const Permutation& p) { return descent_set(p) == j; }, cap);
    cycles = brute_count(n, [&](const Permutation& p) { return is_n_cycle(p) && descent_set(p) == j; }, cap);
  } else {
    throw std::invalid_argument("unknown counting method '" + method + "' (ie, det, brute)");
  }
  const std::vector<int> positions(j.positions().begin(), j.positions().end());
  switch (g.fmt()) {
    case Format::json:
    case Format::lines:
      std::cout << Json{{"J", positions}, {"n", n}, {"exact", exact.get_str()}, {"ncycles", cycles.get_str()},
                        {"method", method}}
                       .dump()
                << '\n';
      break;
    case Format::csv:
      std::cout << "J,n,exact,ncycles,method\n"
                << join_csv(positions) << ',' << n << ',' << exact.get_str() << ',' << cycles.get_str() << ','
                << method << '\n';
  }
}

// -------------------------------------------------------------- bijection

void cmd_bijection(const Globals& g, const std::string& word_text, const std::string& perm_text,
                   const std::string& parts_text) {
  Word word;
  Permutation st;
  if (!word_text.empty()) {
    word = parse_word(word_text);
    st = standardize(word);
  } else if (!perm_text.empty() && !parts_text.empty()) {
    st = parse_permutation(perm_text);
    word = word_from_permutation(st, Composition(parse_ints(parts_text)));
  } else {
    throw std::invalid_argument("give --word, or --perm together with --parts");
  }
  const auto u = necklace_decomposition(word);
  const auto des = descent_set(st);
  const auto ides = descent_set(invert(st));
  const std::vector<int> dv(des.positions().begin(), des.positions().end());
  const std::vector<int> iv(ides.positions().begin(), ides.positions().end());
  if (g.fmt() == Format::json) {
    std::cout << Json{{"word", to_json(word)},
                      {"standard", to_json(st)},
                      {"necklaces", to_json(u)},
                      {"cycle_type", to_json(cycle_type(st))},
                      {"descents", dv},
                      {"inverse_descents", iv}}
                     .dump()
              << '\n';
    return;
  }
  std::string necklaces;
  for (const auto& [nk, m] : u.entries)
    for (int i = 0; i < m; ++i) necklaces += "(" + to_letters(nk.letters()) + ")";
  std::cout << "word " << to_letters(word.letters) << '\n'
            << "standard " << to_line(st) << '\n'
            << "necklaces " << necklaces << '\n'
            << "cycle_type " << to_json(cycle_type(st)).dump() << '\n'
            << "descents " << join_csv(dv) << '\n'
            << "inverse_descents " << join_csv(iv) << '\n';
}

// ----------------------------------------------------------------- report

void cmd_report(const Globals& g, const SpecArgs& a, int k_max) {
  const BiasVector bias = BiasVector::parse(a.p);
  const int cap = g.cap(7);
  const bool exact = a.n <= cap;
  if (!exact) std::cerr << "note: exact_tv omitted, n=" << a.n << " exceeds the enumeration cap " << cap << '\n';
  std::optional<double> lalley;
  if (bias.size() == 2 && bias[0] > 0 && bias[0] < 1 && a.n >= 2) lalley = lalley_lower_steps(a.n, bias[0]);

  std::optional<ExactDistribution> single, power;
  std::optional<ExactDistribution> uniform;
  if (exact) {
    single = exact_distribution(a.n, bias, cap);
    power = ExactDistribution::point_mass(Permutation::identity(a.n));
    uniform = ExactDistribution::uniform(a.n);
  }

  Json rows = Json::array();
  if (g.fmt() == Format::csv) std::cout << "k,suf_bound,exact_tv,lalley_lower_steps\n";
  for (int k = 1; k <= k_max; ++k) {
    const Rational bound = suf_bound({a.n, bias, k});
    std::optional<Rational> tv;
    if (exact) {
      power = convolve(*power, *single);
      tv = tv_distance(*power, *uniform);
    }
    switch (g.fmt()) {
      case Format::json: {
        Json row{{"k", k}, {"suf_bound", bound.get_d()}};
        if (tv) row["exact_tv"] = tv->get_d();
        if (lalley) row["lalley_lower_steps"] = *lalley;
        rows.push_back(row);
        break;
      }
      case Format::csv:
      case Format::lines: {
        const char sep = g.fmt() == Format::csv ? ',' : '\t';
        std::cout << k << sep << decimal(bound) << sep << (tv ? decimal(*tv) : "") << sep
                  << (lalley ? decimal(*lalley) : "") << '\n';
      }
    }
  }
  if (g.fmt() == Format::json)
    std::cout << Json{{"n", a.n}, {"p", to_string(bias)}, {"rows", rows}}.dump() << '\n';
}

// ----------------------------------------------------------------- verify

int cmd_verify(const Globals& g, const std::vector<std::string>& only, bool list) {
  if (list) {
    for (const auto& p : verification_properties()) std::cout << p.name << '\t' << p.anchor << '\n';
    return 0;
  }
  VerifyOptions options;
  options.n_max = g.n_max;
  if (g.seed) options.seed = *g.seed;
  for (const auto& item : only) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) options.only.push_back(name);
  }
  std::size_t failed = 0;
  const auto outcomes = run_verification(options, [&](const CheckOutcome& o) {
    if (!o.passed) ++failed;
    if (g.fmt() == Format::lines)
      std::cout << (o.passed ? "PASS " : "FAIL ") << o.property << ": " << o.check
                << (o.passed || o.detail.empty() ? "" : " [" + o.detail + "]") << std::endl;
    if (g.fmt() == Format::csv) {
      static bool header = false;
      if (!std::exchange(header, true)) std::cout << "property,check,passed,detail\n";
      auto quote = [](std::string s) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + '"';
      };
      std::cout << o.property << ',' << quote(o.check) << ',' << (o.passed ? "true" : "false") << ','
                << quote(o.detail) << '\n';
    }
  });
  if (g.fmt() == Format::json) {
    Json out = Json::array();
    for (const auto& o : outcomes)
      out.push_back({{"property", o.property}, {"check", o.check}, {"passed", o.passed}, {"detail", o.detail}});
    std::cout << Json{{"passed", failed == 0}, {"checks", outcomes.size()}, {"failed", failed}, {"results", out}}.dump(2)
              << '\n';
  }
  std::cerr << outcomes.size() - failed << "/" << outcomes.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biased riffle shuffles: sampling, exact laws, necklaces and counting"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "64-bit seed for sampling");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"lines", "json", "csv"}));
  app.add_option("--n-max", g.n_max, "Override the enumeration cap")->check(CLI::NonNegativeNumber);

  auto add_spec = [](CLI::App* sub, SpecArgs& s) {
    sub->add_option("--n", s.n, "Deck size")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--p", s.p, "Bias vector, e.g. 1/3,2/3 or 0.4,0.6");
    sub->add_option("--k", s.k, "Number of shuffles")->check(CLI::NonNegativeNumber);
  };

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Draw shuffled decks");
  sample->add_option("--n", sa.n, "Deck size")->required()->check(CLI::NonNegativeNumber);
  sample->add_option("--p", sa.p, "Bias vector");
  sample->add_option("--k", sa.k, "Number of shuffles")->check(CLI::NonNegativeNumber);
  sample->add_option("--method", sa.method, "interleave, drop, geometric or inverse");
  sample->add_option("--samples", sa.samples, "Number of decks");
  sample->add_option("--threads", sa.threads, "Worker threads (output does not depend on this)");
  sample->add_flag("--summary", sa.summary, "Print sample means of fixed points, inversions and descents");

  SpecArgs da;
  std::string dist_method = "exact";
  auto* dist = app.add_subcommand("dist", "Exact distribution on S_n");
  add_spec(dist, da);
  dist->add_option("--method", dist_method, "exact, interleave, drop or inverse");

  SpecArgs ta;
  auto* tv = app.add_subcommand("tv", "Exact total variation distance to uniform");
  add_spec(tv, ta);

  SpecArgs st;
  std::string stat = "fixed-points";
  auto* stats = app.add_subcommand("stats", "Exact statistics and generating functions");
  add_spec(stats, st);
  stats->add_option("--stat", stat)->check(
      CLI::IsMember({"fixed-points", "inversions", "descents", "cycle-pgf", "inv-pgf", "fixed-point-pgf"}));

  int count_n = 0;
  std::string count_j;
  std::string count_method = "ie";
  auto* count = app.add_subcommand("count", "Permutations and n-cycles with a given descent set");
  count->add_option("--n", count_n, "Deck size")->required()->check(CLI::PositiveNumber);
  count->add_option("--J", count_j, "Descent positions, e.g. 1,3 (n is always included)");
  count->add_option("--method", count_method)->check(CLI::IsMember({"ie", "det", "brute"}));

  std::string word_text, perm_text, parts_text;
  auto* bijection = app.add_subcommand("bijection", "Standardization and necklace decomposition");
  bijection->add_option("--word", word_text, "Word such as bbaab or 2,2,1,1,2");
  bijection->add_option("--perm", perm_text, "One-line permutation such as 3,1,2");
  bijection->add_option("--parts", parts_text, "Letter counts such as 2,1");

  SpecArgs ra;
  int k_max = 10;
  auto* report = app.add_subcommand("report", "Bound, exact TV and lower-bound table across k");
  add_spec(report, ra);
  report->add_option("--k-max", k_max)->check(CLI::PositiveNumber);

  std::vector<std::string> only;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "Check every formula against exact oracles");
  verify->add_option("--only", only, "Property names (comma separated or repeated)");
  verify->add_flag("--list", list, "List the property names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*sample) cmd_sample(g, sa);
    else if (*dist) cmd_dist(g, da, dist_method);
    else if (*tv) cmd_tv(g, ta);
    else if (*stats) cmd_stats(g, st, stat);
    else if (*count) cmd_count(g, count_n, count_j, count_method);
    else if (*bijection) cmd_bijection(g, word_text, perm_text, parts_text);
    else if (*report) cmd_report(g, ra, k_max);
    else if (*verify) return cmd_verify(g, only, list);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
