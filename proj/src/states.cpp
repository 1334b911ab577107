// SPDX-License-Identifier: MIT

#include "qnetsim/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qnet {

const char* to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
  }
  throw std::invalid_argument("unknown bell kind");
}

Eigen::Vector4cd bell_vector(BellKind kind) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (kind) {
    case BellKind::PhiPlus:
      v(0) = s;
      v(3) = s;
      break;
    case BellKind::PhiMinus:
      v(0) = s;
      v(3) = -s;
      break;
    case BellKind::PsiPlus:
      v(1) = s;
      v(2) = s;
      break;
    case BellKind::PsiMinus:
      v(1) = s;
      v(2) = -s;
      break;
  }
  return v;
}

DensityMatrix bell_state(BellKind kind) { return DensityMatrix::pure(bell_vector(kind)); }

double werner_parameter(double fidelity) {
  if (!(fidelity >= 0.25 && fidelity <= 1.0)) {
    throw std::domain_error("werner fidelity must be in [0.25, 1]");
  }
  return (4.0 * fidelity - 1.0) / 3.0;
}

DensityMatrix werner_from_fidelity(double fidelity, BellKind kind) {
  const double p = werner_parameter(fidelity);
  const Eigen::Vector4cd bell = bell_vector(kind);
  Eigen::Matrix4cd m = p * (bell * bell.adjoint());
  m += (1.0 - p) * 0.25 * Eigen::Matrix4cd::Identity();
  return detail::make_density_unchecked(m);
}

}  // namespace qnet
