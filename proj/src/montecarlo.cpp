#include "riffle/montecarlo.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace riffle {

double MeanEstimate::z_score(double target) const {
  const double diff = std::abs(mean - target);
  if (std_error == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / std_error;
}

void MeanAccumulator::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

MeanEstimate MeanAccumulator::estimate() const {
  MeanEstimate e;
  e.samples = count_;
  e.mean = mean_;
  if (count_ > 1) e.std_error = std::sqrt(m2_ / static_cast<double>(count_ - 1) / static_cast<double>(count_));
  return e;
}

ShuffleStatisticMeans sample_statistic_means(const ShuffleSpec& spec, ShuffleMethod method, std::uint64_t seed,
                                             std::size_t samples) {
  MeanAccumulator fixed, inv, des;
  for_each_sample(spec, method, seed, samples, [&](std::size_t, const Permutation& p) {
    fixed.add(fixed_points(p));
    inv.add(static_cast<double>(inversions(p)));
    des.add(descent_set(p).size());
  });
  return {fixed.estimate(), inv.estimate(), des.estimate()};
}

ChiSquareResult chi_square_test(const ExactDistribution& expected, std::span<const Permutation> samples) {
  if (samples.empty()) throw std::invalid_argument("chi_square_test: no samples");
  std::vector<double> observed(expected.size(), 0.0);
  bool outside = false;
  for (const auto& p : samples) {
    const std::uint64_t r = p.rank();
    if (expected.mass_at(r) == 0) outside = true;
    observed[r] += 1.0;
  }
  ChiSquareResult result;
  const auto total = static_cast<double>(samples.size());
  int bins = 0;
  for (std::uint64_t r = 0; r < expected.size(); ++r) {
    const double m = expected.mass_at(r).get_d();
    if (m == 0.0) continue;
    ++bins;
    const double e = m * total;
    result.statistic += (observed[r] - e) * (observed[r] - e) / e;
  }
  result.degrees_of_freedom = bins - 1;
  if (outside) {
    result.statistic = std::numeric_limits<double>::infinity();
    result.p_value = 0.0;
  } else if (result.degrees_of_freedom > 0) {
    const boost::math::chi_squared dist(result.degrees_of_freedom);
    result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
  }
  return result;
}

}  // namespace riffle
