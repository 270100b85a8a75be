#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "vimp/matrix.hpp"

namespace vimp {

// Generative scenario: y = Z A beta + eps with Z i.i.d. standard normal,
// A the uniform correlation-inducing transform, eps i.i.d. N(0, noise_var).
// No intercept and no non-Gaussian options; the model is intercept-free and
// all variables are zero-mean by construction.
struct DataSpec {
  std::size_t n = 0;
  std::size_t p = 0;
  double delta = 0.0;
  std::vector<double> beta;
  double noise_var = 0.1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct Dataset {
  Matrix x;
  std::vector<double> y;
  DataSpec spec;
};

// A = delta*J + (1-delta)*I: ones on the diagonal, delta off-diagonal.
Matrix make_transform(std::size_t p, double delta);

// Draws one dataset. Deterministic given spec.seed; equals the training
// member of generate_pair for the same spec.
Dataset generate(const DataSpec& spec);

// Training and validation datasets from independent substreams of spec.seed
// (labels "train" and "valid").
std::pair<Dataset, Dataset> generate_pair(const DataSpec& spec);

// Copy of the dataset with column `var` uniformly shuffled; everything else
// untouched. The permutation stream is derived from (seed, "perm", var), so
// distinct variables permuted under the same seed are independent.
Dataset permute_column(const Dataset& data, std::size_t var, std::uint64_t seed);

// Debug CSV dump: header x1..xp,y then one row per observation, full double
// precision (shortest round-trip formatting).
void dataset_to_csv(const Dataset& data, std::ostream& out);

// Reads the x1..xp,y schema back. The returned spec carries only the shape
// (n, p) plus the given seed; delta/beta/noise_var are unknown for external
// data and left at neutral values.
Dataset dataset_from_csv(std::istream& in, std::uint64_t seed);

}  // namespace vimp
