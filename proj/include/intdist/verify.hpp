#pragma once

// Seeded property suites behind `intdist verify`. Each suite reports one line
// per property with its sample count; a suite passes iff every property does.

#include "intdist/random.hpp"
#include "intdist/triple_points.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace intdist {

struct PropertyResult {
  std::string name;
  bool passed = true;
  long checked = 0;
  long failures = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  double seconds = 0.0;

  bool passed() const;
};

/// Independent reference for triple points, used to cross-check the solver.
using TripleOracle = std::function<std::vector<Point>(const DistanceField&, const SiteTriple&)>;

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Zero means the suite's default sample size.
  long samples = 0;
  TripleOracle oracle;
  long oracle_checks = 50;
  double oracle_match = 1e-6;
};

/// "star", "lipschitz", "non-overlap", "triple-cap", "torus-cap", "cone", "constructions".
const std::vector<std::string>& suite_names();

/// Throws Error(InvalidArgument) for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// A random strict-norm triple: L_p with p in [1.2, 8], non-collinear sites in
/// [-5, 5]^2, w1 = 0 and |w_i - w_j| < d(s_i, s_j).
struct TripleInstance {
  DistanceField field;
  SiteTriple sites;
};
TripleInstance random_triple_instance(Rng& rng);

std::string format_report(const SuiteReport& report);

}  // namespace intdist
