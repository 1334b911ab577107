// SPDX-License-Identifier: MIT
//
// Bell states and Werner states. With |0> = spin-up, the heralded states are
// psi+- = (|01> +- |10>)/sqrt(2); a Werner state mixes one Bell state with
// the maximally mixed two-qubit state.

#pragma once

#include <Eigen/Dense>

#include "qnetsim/density_matrix.hpp"

namespace qnet {

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

const char* to_string(BellKind kind);

Eigen::Vector4cd bell_vector(BellKind kind);

DensityMatrix bell_state(BellKind kind);

// rho = p |bell><bell| + (1 - p) I/4 with p = (4F - 1)/3, so the overlap with
// the target Bell state is exactly F. Requires F in [0.25, 1].
DensityMatrix werner_from_fidelity(double fidelity, BellKind kind);

// Werner parameter p for a given Bell overlap F.
double werner_parameter(double fidelity);

}  // namespace qnet
