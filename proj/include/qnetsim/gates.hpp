// SPDX-License-Identifier: MIT
//
// The gate set used by the protocols: I, X, Z, H, CNOT. Gates act on density
// matrices as rho -> U rho U^dagger.

#pragma once

#include <Eigen/Dense>
#include <array>

#include "qnetsim/density_matrix.hpp"

namespace qnet {

enum class GateKind { I, X, Z, H, Cnot };

const char* to_string(GateKind kind);

struct GateSpec {
  GateKind kind = GateKind::I;
  // targets[0] is the single-qubit target, or the control for CNOT;
  // targets[1] is the CNOT target.
  std::array<int, 2> targets{0, 0};

  static GateSpec identity(int q) { return {GateKind::I, {q, 0}}; }
  static GateSpec x(int q) { return {GateKind::X, {q, 0}}; }
  static GateSpec z(int q) { return {GateKind::Z, {q, 0}}; }
  static GateSpec h(int q) { return {GateKind::H, {q, 0}}; }
  static GateSpec cnot(int control, int target) { return {GateKind::Cnot, {control, target}}; }

  bool two_qubit() const { return kind == GateKind::Cnot; }
};

// 2x2 matrix for a single-qubit kind; throws for Cnot.
Eigen::Matrix2cd single_qubit_unitary(GateKind kind);

// Gate embedded into the full 2^n space.
Eigen::MatrixXcd full_unitary(const GateSpec& gate, int qubit_count);

// Validates targets (in range, CNOT control != target), then conjugates.
DensityMatrix apply_gate(const DensityMatrix& rho, const GateSpec& gate);

}  // namespace qnet
