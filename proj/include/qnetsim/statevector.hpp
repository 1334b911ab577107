// SPDX-License-Identifier: MIT
//
// Pure-state helpers used by the Monte Carlo trial path. States are dense
// amplitude vectors with qubit 0 as the most significant index bit, matching
// the density-matrix convention.

#pragma once

#include <Eigen/Dense>

#include "qnetsim/rng.hpp"

namespace qnet::sv {

Eigen::VectorXcd tensor(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

void apply_single(Eigen::VectorXcd& psi, const Eigen::Matrix2cd& u, int qubit, int qubit_count);

void apply_cnot(Eigen::VectorXcd& psi, int control, int target, int qubit_count);

// which: 1 = X, 2 = Y, 3 = Z (0 is a no-op).
void apply_pauli(Eigen::VectorXcd& psi, int which, int qubit, int qubit_count);

// Z-basis measurement: samples an outcome, collapses and renormalizes psi.
int measure_collapse(Eigen::VectorXcd& psi, int qubit, int qubit_count, RngStream& rng);

}  // namespace qnet::sv
