#pragma once

// Named property suites that check every closed form against an independent
// exact oracle (or, for samplers, a statistical test).  Used by
// `riffle verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "riffle/shuffle.hpp"

namespace riffle {

struct VerifyOptions {
  int n_max = 0;  // 0: each property uses its own limit; otherwise min(own, n_max)
  std::uint64_t seed = 20240601;
  std::vector<std::string> only;  // property names; empty runs all
};

struct CheckOutcome {
  std::string property;
  std::string check;
  bool passed = false;
  std::string detail;  // counterexample or measured value
};

struct PropertyInfo {
  std::string name;
  std::string anchor;  // the result the property is named after
};

std::vector<PropertyInfo> verification_properties();

/// Runs the selected properties; each outcome is also passed to `on_outcome`
/// as it is produced.  Throws std::invalid_argument for unknown names.
std::vector<CheckOutcome> run_verification(const VerifyOptions& options,
                                           const std::function<void(const CheckOutcome&)>& on_outcome = {});

/// Fixed test panel: (1), (1/2,1/2), (1/3,2/3), (1/2,1/4,1/4), (1/6,1/3,1/2).
std::vector<BiasVector> bias_panel();

}  // namespace riffle
