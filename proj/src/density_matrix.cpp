// SPDX-License-Identifier: MIT

#include "qnetsim/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qnet {
namespace {

int qubits_for_dim(Eigen::Index dim) {
  if (dim < 2) throw std::invalid_argument("density matrix needs dimension >= 2");
  int n = 0;
  Eigen::Index d = dim;
  while (d > 1) {
    if (d % 2 != 0) throw std::invalid_argument("density matrix dimension must be a power of two");
    d /= 2;
    ++n;
  }
  return n;
}

}  // namespace

namespace detail {
DensityMatrix make_density_unchecked(Eigen::MatrixXcd m) { return DensityMatrix(std::move(m)); }
}  // namespace detail

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)), qubit_count_(qubits_for_dim(m_.rows())) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("density matrix must be square");
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m, double tol) {
  DensityMatrix rho(std::move(m));
  std::string why;
  if (!rho.is_valid(tol, &why)) throw std::invalid_argument("invalid density matrix: " + why);
  return rho;
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("pure-state amplitudes must have unit norm");
  }
  const Eigen::VectorXcd unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::zero_state(int qubit_count) {
  if (qubit_count < 1) throw std::invalid_argument("state needs at least one qubit");
  const Eigen::Index dim = Eigen::Index{1} << qubit_count;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(0, 0) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int qubit_count) {
  if (qubit_count < 1) throw std::invalid_argument("state needs at least one qubit");
  const Eigen::Index dim = Eigen::Index{1} << qubit_count;
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

bool DensityMatrix::is_valid(double tol, std::string* why) const {
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) {
    if (why) *why = "not hermitian";
    return false;
  }
  if (std::abs(m_.trace().real() - 1.0) > tol || std::abs(m_.trace().imag()) > tol) {
    if (why) *why = "trace is not 1";
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) {
    if (why) *why = "negative eigenvalue";
    return false;
  }
  return true;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const Eigen::MatrixXcd& ma = a.matrix();
  const Eigen::MatrixXcd& mb = b.matrix();
  Eigen::MatrixXcd out(ma.rows() * mb.rows(), ma.cols() * mb.cols());
  for (Eigen::Index i = 0; i < ma.rows(); ++i) {
    for (Eigen::Index j = 0; j < ma.cols(); ++j) {
      out.block(i * mb.rows(), j * mb.cols(), mb.rows(), mb.cols()) = ma(i, j) * mb;
    }
  }
  return detail::make_density_unchecked(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.qubit_count();
  if (keep.empty()) throw std::invalid_argument("partial_trace must keep at least one qubit");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n) throw std::out_of_range("partial_trace qubit index out of range");
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw std::invalid_argument("partial_trace keep list must be strictly increasing");
    }
  }
  const int k = static_cast<int>(keep.size());
  const Eigen::Index out_dim = Eigen::Index{1} << k;
  const Eigen::Index traced_dim = Eigen::Index{1} << (n - k);

  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }

  // Qubit q occupies bit (n - 1 - q) of a basis index.
  auto compose = [&](Eigen::Index kept_bits, Eigen::Index traced_bits) {
    Eigen::Index idx = 0;
    for (int i = 0; i < k; ++i) {
      if ((kept_bits >> (k - 1 - i)) & 1) idx |= Eigen::Index{1} << (n - 1 - keep[i]);
    }
    for (std::size_t i = 0; i < traced.size(); ++i) {
      if ((traced_bits >> (traced.size() - 1 - i)) & 1) idx |= Eigen::Index{1} << (n - 1 - traced[i]);
    }
    return idx;
  };

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
  for (Eigen::Index r = 0; r < out_dim; ++r) {
    for (Eigen::Index c = 0; c < out_dim; ++c) {
      std::complex<double> sum = 0.0;
      for (Eigen::Index t = 0; t < traced_dim; ++t) {
        sum += rho.matrix()(compose(r, t), compose(c, t));
      }
      out(r, c) = sum;
    }
  }
  return detail::make_density_unchecked(std::move(out));
}

double fidelity_to_pure(const DensityMatrix& rho, const Eigen::VectorXcd& psi) {
  if (psi.size() != rho.dim()) throw std::invalid_argument("fidelity target dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("fidelity target must be normalized");
  }
  return (psi.adjoint() * rho.matrix() * psi).value().real();
}

}  // namespace qnet
