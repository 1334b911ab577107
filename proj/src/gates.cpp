// SPDX-License-Identifier: MIT

#include "qnetsim/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qnet {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::I: return "I";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::Cnot: return "CNOT";
  }
  throw std::invalid_argument("unknown gate kind");
}

Eigen::Matrix2cd single_qubit_unitary(GateKind kind) {
  Eigen::Matrix2cd u;
  const double s = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::I:
      u << 1, 0, 0, 1;
      return u;
    case GateKind::X:
      u << 0, 1, 1, 0;
      return u;
    case GateKind::Z:
      u << 1, 0, 0, -1;
      return u;
    case GateKind::H:
      u << s, s, s, -s;
      return u;
    case GateKind::Cnot:
      break;
  }
  throw std::invalid_argument("CNOT has no single-qubit matrix");
}

namespace {

void check_target(int q, int qubit_count) {
  if (q < 0 || q >= qubit_count) throw std::out_of_range("gate target qubit out of range");
}

// Embeds a 2x2 unitary on qubit q (bit n-1-q of the basis index).
Eigen::MatrixXcd embed_single(const Eigen::Matrix2cd& u, int q, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index bit = Eigen::Index{1} << (n - 1 - q);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int b = (col & bit) ? 1 : 0;
    const Eigen::Index base = col & ~bit;
    out(base, col) += u(0, b);
    out(base | bit, col) += u(1, b);
  }
  return out;
}

Eigen::MatrixXcd embed_cnot(int control, int target, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index cbit = Eigen::Index{1} << (n - 1 - control);
  const Eigen::Index tbit = Eigen::Index{1} << (n - 1 - target);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Eigen::Index row = (col & cbit) ? (col ^ tbit) : col;
    out(row, col) = 1.0;
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd full_unitary(const GateSpec& gate, int qubit_count) {
  check_target(gate.targets[0], qubit_count);
  if (gate.two_qubit()) {
    check_target(gate.targets[1], qubit_count);
    if (gate.targets[0] == gate.targets[1]) {
      throw std::invalid_argument("CNOT control and target must differ");
    }
    return embed_cnot(gate.targets[0], gate.targets[1], qubit_count);
  }
  return embed_single(single_qubit_unitary(gate.kind), gate.targets[0], qubit_count);
}

DensityMatrix apply_gate(const DensityMatrix& rho, const GateSpec& gate) {
  const Eigen::MatrixXcd u = full_unitary(gate, rho.qubit_count());
  return detail::make_density_unchecked(u * rho.matrix() * u.adjoint());
}

}  // namespace qnet
