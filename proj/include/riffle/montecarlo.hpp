#pragma once

// Sample means with standard errors, and a chi-square goodness-of-fit test of
// sampled permutations against an exact distribution.

#include <cstdint>
#include <functional>
#include <span>

#include "riffle/shuffle.hpp"

namespace riffle {

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::size_t samples = 0;

  /// |mean - target| in units of the standard error.
  double z_score(double target) const;
};

/// Welford accumulator.
class MeanAccumulator {
 public:
  void add(double x);
  MeanEstimate estimate() const;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct ShuffleStatisticMeans {
  MeanEstimate fixed_points;
  MeanEstimate inversions;
  MeanEstimate descents;  // n counts as a descent
};

/// Sampled means of fixed points, inversions and descents after spec.k shuffles.
ShuffleStatisticMeans sample_statistic_means(const ShuffleSpec& spec, ShuffleMethod method, std::uint64_t seed,
                                             std::size_t samples);

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;  // 0 if a sample falls outside the support
};

/// Pearson test over the support of `expected`.
ChiSquareResult chi_square_test(const ExactDistribution& expected, std::span<const Permutation> samples);

}  // namespace riffle
