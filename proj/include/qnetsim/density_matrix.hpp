// SPDX-License-Identifier: MIT
//
// Multi-qubit density matrices over Eigen. Qubit 0 is the most significant
// bit of the computational-basis index, so |q0 q1 ... q(n-1)> maps to row
// q0*2^(n-1) + ... + q(n-1).

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace qnet {

class DensityMatrix;

namespace detail {
// Wraps a matrix without validity checks. For operations whose outputs are
// valid by construction, and for tests that need malformed states.
DensityMatrix make_density_unchecked(Eigen::MatrixXcd m);
}  // namespace detail

class DensityMatrix {
 public:
  // Validates hermiticity, unit trace, and positive semidefiniteness
  // (eigenvalues >= -tol); throws std::invalid_argument otherwise.
  static DensityMatrix from_matrix(Eigen::MatrixXcd m, double tol = 1e-10);

  // |psi><psi| for a normalized amplitude vector (norm checked to 1e-10,
  // then renormalized exactly).
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  static DensityMatrix zero_state(int qubit_count);       // |0...0><0...0|
  static DensityMatrix maximally_mixed(int qubit_count);  // I / 2^n

  int qubit_count() const { return qubit_count_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  // True when hermitian, unit trace, and PSD within tol. On failure and when
  // why != nullptr, *why names the violated property.
  bool is_valid(double tol = 1e-10, std::string* why = nullptr) const;

 private:
  explicit DensityMatrix(Eigen::MatrixXcd m);

  friend DensityMatrix detail::make_density_unchecked(Eigen::MatrixXcd m);

  Eigen::MatrixXcd m_;
  int qubit_count_;
};

// Kronecker product; qubits of `a` become the most significant block.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Traces out every qubit not listed in `keep`; kept qubits stay in the given
// order, which must be strictly increasing and non-empty.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// <psi| rho |psi> for a normalized pure target of matching dimension.
double fidelity_to_pure(const DensityMatrix& rho, const Eigen::VectorXcd& psi);

}  // namespace qnet
