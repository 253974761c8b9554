#pragma once

// Randomized comparison of the closed-form module calculus against the
// matrix oracle. Every case draws from its own stream derived from the seed,
// so a failing case can be replayed from (seed, suite, index).

#include <cstdint>
#include <string>
#include <vector>

#include "equichar/oracle/matrix_module.hpp"
#include "equichar/random.hpp"

namespace equichar::oracle {

struct SelfcheckConfig {
  std::uint64_t seed = 42;
  Int count = 200;        // random modules per suite
  Int sample_dim = 200;   // largest random module
  Int max_dim = kDefaultMaxDim;
};

struct SuiteResult {
  std::string name;
  Int cases = 0;
  Int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

struct SelfcheckReport {
  SelfcheckConfig config;
  std::vector<SuiteResult> suites;

  bool ok() const;
};

/// Shapes (p, n, c, a_chi) with p in {2,3,5}, c in {1,2,4,6} prime to p and
/// p^n <= 27.
std::vector<GroupShape> oracle_shapes();

/// A random J-sum of dimension at most max_dim, its matrix realization and
/// a random change of basis applied to it.
struct RandomModule {
  GModuleDecomp expected{GroupShape{}};
  MatrixModule plain;
  MatrixModule shuffled;
};
RandomModule random_module(const ShapeContext& ctx, Rng& rng, Int max_dim);
Matrix random_invertible(const GaloisField& F, Int d, Rng& rng);

SelfcheckReport run_selfcheck(const SelfcheckConfig& config);

}  // namespace equichar::oracle
