#pragma once

#include <cstdint>

#include "cplab/kernels.hpp"
#include "cplab/space.hpp"
#include "cplab/table.hpp"

namespace cplab {

struct SimplexMaxOptions {
  double tol = 1e-9;        // refinement target on the objective
  int top_starts = 8;       // grid points promoted to local ascent
  int random_starts = 16;   // extra Dirichlet starts for z_card >= 5
  int max_sweeps = 200;
  std::uint64_t seed = 0x51e9a11cULL;  // for the Dirichlet starts only
};

struct SimplexMaxResult {
  double value = 0.0;
  Distribution argmax;
  bool converged = true;
  bool inf_times_zero = false;
};

// sup over the probability simplex of the IID expectation of the table.
// Dense grid (1/64 per coordinate for z_card <= 3, 1/16 for z_card = 4)
// followed by pairwise mass-transfer ascent with golden-section line
// searches; z_card = 2 runs a 1-D global scan plus refinement, z_card
// >= 5 multi-start ascent. The returned value is a certified lower
// bound on the supremum (the expectation at the returned witness).
SimplexMaxResult sup_iid_expectation(const FnTable& table, const SimplexMaxOptions& opt = {});

// Same search on precomputed moments (for repeated level checks).
SimplexMaxResult sup_iid_expectation(const BagMoments& moments, const SimplexMaxOptions& opt = {});

}  // namespace cplab
