// SPDX-License-Identifier: MIT

#include "qnetsim/channels.hpp"

#include <stdexcept>

#include "qnetsim/gates.hpp"

namespace qnet {

void PauliNoiseSpec::validate() const {
  for (double p : {px, py, pz}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("pauli noise probability must be in [0, 1]");
    }
  }
  if (total() > 1.0) {
    throw std::invalid_argument("pauli noise probabilities must sum to at most 1");
  }
}

namespace {

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd y;
  y << 0.0, std::complex<double>(0.0, -1.0), std::complex<double>(0.0, 1.0), 0.0;
  return y;
}

// U rho U^dagger with U acting on one qubit; avoids building the full unitary.
Eigen::MatrixXcd conjugate_single(const Eigen::MatrixXcd& rho, const Eigen::Matrix2cd& u, int q, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index bit = Eigen::Index{1} << (n - 1 - q);
  Eigen::MatrixXcd left(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const int rb = (r & bit) ? 1 : 0;
    for (Eigen::Index c = 0; c < dim; ++c) {
      left(r, c) = u(rb, 0) * rho((r & ~bit), c) + u(rb, 1) * rho((r | bit), c);
    }
  }
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const int cb = (c & bit) ? 1 : 0;
      out(r, c) = left(r, (c & ~bit)) * std::conj(u(cb, 0)) + left(r, (c | bit)) * std::conj(u(cb, 1));
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd pauli_channel_map(const Eigen::MatrixXcd& rho, const PauliNoiseSpec& noise,
                                   int target, int qubit_count) {
  noise.validate();
  if (target < 0 || target >= qubit_count) {
    throw std::out_of_range("pauli channel target qubit out of range");
  }
  Eigen::MatrixXcd out = (1.0 - noise.total()) * rho;
  if (noise.px > 0.0) {
    out += noise.px * conjugate_single(rho, single_qubit_unitary(GateKind::X), target, qubit_count);
  }
  if (noise.py > 0.0) {
    out += noise.py * conjugate_single(rho, pauli_y(), target, qubit_count);
  }
  if (noise.pz > 0.0) {
    out += noise.pz * conjugate_single(rho, single_qubit_unitary(GateKind::Z), target, qubit_count);
  }
  return out;
}

DensityMatrix apply_pauli_channel(const DensityMatrix& rho, const PauliNoiseSpec& noise, int target) {
  return detail::make_density_unchecked(pauli_channel_map(rho.matrix(), noise, target, rho.qubit_count()));
}

int sample_pauli(const PauliNoiseSpec& noise, RngStream& rng) {
  const double u = rng.uniform01();
  if (u < noise.px) return 1;
  if (u < noise.px + noise.py) return 2;
  if (u < noise.total()) return 3;
  return 0;
}

}  // namespace qnet
