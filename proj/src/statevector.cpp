// SPDX-License-Identifier: MIT

#include "qnetsim/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qnet::sv {
namespace {

Eigen::Index qubit_bit(int qubit, int qubit_count) {
  if (qubit < 0 || qubit >= qubit_count) throw std::out_of_range("qubit index out of range");
  return Eigen::Index{1} << (qubit_count - 1 - qubit);
}

}  // namespace

Eigen::VectorXcd tensor(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

void apply_single(Eigen::VectorXcd& psi, const Eigen::Matrix2cd& u, int qubit, int qubit_count) {
  const Eigen::Index bit = qubit_bit(qubit, qubit_count);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    const std::complex<double> lo = psi(i);
    const std::complex<double> hi = psi(i | bit);
    psi(i) = u(0, 0) * lo + u(0, 1) * hi;
    psi(i | bit) = u(1, 0) * lo + u(1, 1) * hi;
  }
}

void apply_cnot(Eigen::VectorXcd& psi, int control, int target, int qubit_count) {
  const Eigen::Index cbit = qubit_bit(control, qubit_count);
  const Eigen::Index tbit = qubit_bit(target, qubit_count);
  if (cbit == tbit) throw std::invalid_argument("CNOT control and target must differ");
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(psi(i), psi(i | tbit));
  }
}

void apply_pauli(Eigen::VectorXcd& psi, int which, int qubit, int qubit_count) {
  const Eigen::Index bit = qubit_bit(qubit, qubit_count);
  switch (which) {
    case 0:
      return;
    case 1:
      for (Eigen::Index i = 0; i < psi.size(); ++i) {
        if (!(i & bit)) std::swap(psi(i), psi(i | bit));
      }
      return;
    case 2:
      for (Eigen::Index i = 0; i < psi.size(); ++i) {
        if (!(i & bit)) {
          const std::complex<double> lo = psi(i);
          psi(i) = std::complex<double>(0.0, -1.0) * psi(i | bit);
          psi(i | bit) = std::complex<double>(0.0, 1.0) * lo;
        }
      }
      return;
    case 3:
      for (Eigen::Index i = 0; i < psi.size(); ++i) {
        if (i & bit) psi(i) = -psi(i);
      }
      return;
    default:
      throw std::invalid_argument("pauli selector must be 0..3");
  }
}

int measure_collapse(Eigen::VectorXcd& psi, int qubit, int qubit_count, RngStream& rng) {
  const Eigen::Index bit = qubit_bit(qubit, qubit_count);
  double p1 = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (i & bit) p1 += std::norm(psi(i));
  }
  const int outcome = rng.uniform01() < 1.0 - p1 ? 0 : 1;
  const double keep_prob = outcome == 1 ? p1 : 1.0 - p1;
  if (keep_prob <= 0.0) throw std::domain_error("collapsed onto a zero-probability outcome");
  const double scale = 1.0 / std::sqrt(keep_prob);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (((i & bit) != 0) != (outcome == 1)) {
      psi(i) = 0.0;
    } else {
      psi(i) *= scale;
    }
  }
  return outcome;
}

}  // namespace qnet::sv
