// SPDX-License-Identifier: MIT

#include "qnetsim/measurement.hpp"

#include <stdexcept>

namespace qnet {
namespace {

Eigen::Index qubit_bit(const DensityMatrix& rho, int target) {
  if (target < 0 || target >= rho.qubit_count()) {
    throw std::out_of_range("measurement target qubit out of range");
  }
  return Eigen::Index{1} << (rho.qubit_count() - 1 - target);
}

}  // namespace

std::pair<double, double> z_probabilities(const DensityMatrix& rho, int target) {
  const Eigen::Index bit = qubit_bit(rho, target);
  double p1 = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    if (i & bit) p1 += rho.matrix()(i, i).real();
  }
  double p0 = 1.0 - p1;
  if (p0 < 0.0) p0 = 0.0;
  if (p1 > 1.0) p1 = 1.0;
  return {p0, p1};
}

DensityMatrix project_z(const DensityMatrix& rho, int target, int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("measurement outcome bit must be 0 or 1");
  const Eigen::Index mask = qubit_bit(rho, target);
  const auto [p0, p1] = z_probabilities(rho, target);
  const double prob = bit == 0 ? p0 : p1;
  if (prob < 1e-14) throw std::domain_error("projecting onto a zero-probability outcome");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  for (Eigen::Index r = 0; r < rho.dim(); ++r) {
    if (((r & mask) != 0) != (bit == 1)) continue;
    for (Eigen::Index c = 0; c < rho.dim(); ++c) {
      if (((c & mask) != 0) != (bit == 1)) continue;
      out(r, c) = rho.matrix()(r, c) / prob;
    }
  }
  return detail::make_density_unchecked(std::move(out));
}

MeasureResult measure_z(const DensityMatrix& rho, int target, RngStream& rng) {
  const auto [p0, p1] = z_probabilities(rho, target);
  (void)p1;
  const int bit = rng.uniform01() < p0 ? 0 : 1;
  return {bit, project_z(rho, target, bit)};
}

}  // namespace qnet
