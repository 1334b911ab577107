// SPDX-License-Identifier: MIT
//
// Single-qubit Pauli noise: with probability px/py/pz the corresponding
// Pauli is applied, otherwise the state is untouched.

#pragma once

#include <Eigen/Dense>

#include "qnetsim/density_matrix.hpp"
#include "qnetsim/rng.hpp"

namespace qnet {

struct PauliNoiseSpec {
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;

  double total() const { return px + py + pz; }
  bool is_zero() const { return px == 0.0 && py == 0.0 && pz == 0.0; }

  // Each probability in [0, 1] and px + py + pz <= 1, else std::invalid_argument.
  void validate() const;

  static PauliNoiseSpec bit_flip(double p) { return {p, 0.0, 0.0}; }
};

// rho -> (1-px-py-pz) rho + px X rho X + py Y rho Y + pz Z rho Z on `target`.
// The affine-map form is exposed for linearity checks.
Eigen::MatrixXcd pauli_channel_map(const Eigen::MatrixXcd& rho, const PauliNoiseSpec& noise,
                                   int target, int qubit_count);

DensityMatrix apply_pauli_channel(const DensityMatrix& rho, const PauliNoiseSpec& noise, int target);

// Samples which Pauli fires: 0 = none, 1 = X, 2 = Y, 3 = Z. One uniform draw.
int sample_pauli(const PauliNoiseSpec& noise, RngStream& rng);

}  // namespace qnet
