// SPDX-License-Identifier: MIT
//
// Computational-basis (Z) measurement on density matrices.

#pragma once

#include <utility>

#include "qnetsim/density_matrix.hpp"
#include "qnetsim/rng.hpp"

namespace qnet {

// {P(0), P(1)} for measuring `target` in the Z basis.
std::pair<double, double> z_probabilities(const DensityMatrix& rho, int target);

// Post-measurement state given outcome `bit`, renormalized; throws
// std::domain_error when the outcome has probability ~0.
DensityMatrix project_z(const DensityMatrix& rho, int target, int bit);

struct MeasureResult {
  int bit;
  DensityMatrix state;
};

// Samples an outcome with one uniform draw, then projects.
MeasureResult measure_z(const DensityMatrix& rho, int target, RngStream& rng);

}  // namespace qnet
