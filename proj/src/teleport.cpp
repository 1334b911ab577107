// SPDX-License-Identifier: MIT

#include "qnetsim/teleport.hpp"

#include <algorithm>
#include <cmath>

#include "qnetsim/gates.hpp"
#include "qnetsim/measurement.hpp"
#include "qnetsim/statevector.hpp"

namespace qnet {

void InputState::validate() const {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw std::invalid_argument("input amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
  }
}

Eigen::Vector2cd InputState::vector() const {
  Eigen::Vector2cd v;
  v << alpha, beta;
  return v;
}

InputState InputState::plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, 0.0}, {s, 0.0}};
}

void NoiseConfig::validate() const {
  cnot_noise.validate();
  h_noise.validate();
  correction_x_noise.validate();
  correction_z_noise.validate();
  if (!(measurement_flip >= 0.0 && measurement_flip <= 1.0)) {
    throw std::invalid_argument("measurement_flip must be in [0, 1]");
  }
}

bool NoiseConfig::is_zero() const {
  return cnot_noise.is_zero() && h_noise.is_zero() && correction_x_noise.is_zero() &&
         correction_z_noise.is_zero() && measurement_flip == 0.0;
}

double cnot_double_flip_probability(const NoiseConfig& noise) {
  return noise.cnot_noise.px * noise.cnot_noise.px;
}

CorrectionRule correction_rule(BellKind resource_sign) {
  // Offsets (z, x) per resource: the receiver's pre-correction state carries
  // the resource's extra X (psi vs phi) and Z (minus vs plus) relative to
  // the textbook phi+ rule, shifting which measurement pattern fires a gate.
  switch (resource_sign) {
    case BellKind::PhiPlus: return {1, 1};
    case BellKind::PsiPlus: return {1, 0};
    case BellKind::PsiMinus: return {0, 0};
    case BellKind::PhiMinus: return {0, 1};
  }
  throw std::invalid_argument("unknown bell kind");
}

PureEnsemble PureEnsemble::from_density_matrix(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition of the resource state failed");
  }
  PureEnsemble ensemble;
  double total = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double w = solver.eigenvalues()(i);
    if (w <= 1e-12) continue;
    ensemble.weights_.push_back(w);
    ensemble.states_.push_back(solver.eigenvectors().col(i));
    total += w;
  }
  if (ensemble.weights_.empty()) throw std::invalid_argument("state has no positive weight");
  double running = 0.0;
  for (double& w : ensemble.weights_) {
    w /= total;
    running += w;
    ensemble.cumulative_.push_back(running);
  }
  ensemble.cumulative_.back() = 1.0;
  return ensemble;
}

const Eigen::VectorXcd& PureEnsemble::sample(RngStream& rng) const {
  if (states_.size() == 1) return states_.front();
  const double u = rng.uniform01();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto idx = static_cast<std::size_t>(it - cumulative_.begin());
  return states_[std::min(idx, states_.size() - 1)];
}

TeleportTrialResult teleport_once(const InputState& input, const DensityMatrix& resource,
                                  const NoiseConfig& noise, RngStream& rng,
                                  BellKind resource_sign, bool measure_receiver) {
  if (resource.qubit_count() != 2) {
    throw std::invalid_argument("teleportation resource must be a two-qubit state");
  }
  const PureEnsemble ensemble = PureEnsemble::from_density_matrix(resource);
  return teleport_once(input, ensemble, noise, rng, resource_sign, measure_receiver);
}

TeleportTrialResult teleport_once(const InputState& input, const PureEnsemble& resource,
                                  const NoiseConfig& noise, RngStream& rng,
                                  BellKind resource_sign, bool measure_receiver) {
  input.validate();
  noise.validate();

  const Eigen::VectorXcd& component = resource.sample(rng);
  if (component.size() != 4) {
    throw std::invalid_argument("teleportation resource must be a two-qubit state");
  }
  Eigen::VectorXcd psi = sv::tensor(input.vector(), component);

  // Gate chain with sampled noise. The CNOT's Pauli errors hit its input
  // qubits; the H and correction errors follow their gates.
  sv::apply_pauli(psi, sample_pauli(noise.cnot_noise, rng), 0, 3);
  sv::apply_pauli(psi, sample_pauli(noise.cnot_noise, rng), 1, 3);
  sv::apply_cnot(psi, 0, 1, 3);
  sv::apply_single(psi, single_qubit_unitary(GateKind::H), 0, 3);
  sv::apply_pauli(psi, sample_pauli(noise.h_noise, rng), 0, 3);

  const int m1 = sv::measure_collapse(psi, 0, 3, rng);
  const int m2 = sv::measure_collapse(psi, 1, 3, rng);

  TeleportTrialResult result;
  result.m1 = m1 ^ (rng.bernoulli(noise.measurement_flip) ? 1 : 0);
  result.m2 = m2 ^ (rng.bernoulli(noise.measurement_flip) ? 1 : 0);

  // The collapsed state is |m1>|m2> tensor (receiver qubit).
  const Eigen::Index base = (Eigen::Index{m1} << 2) | (Eigen::Index{m2} << 1);
  Eigen::VectorXcd bob(2);
  bob << psi(base), psi(base | 1);

  const CorrectionRule rule = correction_rule(resource_sign);
  result.x_applied = result.m2 == rule.x_offset;
  if (result.x_applied) {
    sv::apply_pauli(bob, 1, 0, 1);
    sv::apply_pauli(bob, sample_pauli(noise.correction_x_noise, rng), 0, 1);
  }
  result.z_applied = result.m1 == rule.z_offset;
  if (result.z_applied) {
    sv::apply_pauli(bob, 3, 0, 1);
    sv::apply_pauli(bob, sample_pauli(noise.correction_z_noise, rng), 0, 1);
  }

  const std::complex<double> overlap = std::conj(input.alpha) * bob(0) + std::conj(input.beta) * bob(1);
  result.output_fidelity = std::norm(overlap);

  if (measure_receiver) {
    result.receiver_bit = sv::measure_collapse(bob, 0, 1, rng);
  }
  return result;
}

namespace {

// Keeps only the rows/columns where the two sender qubits read (m1, m2).
Eigen::MatrixXcd project_sender(const Eigen::MatrixXcd& rho, int m1, int m2) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(8, 8);
  auto matches = [&](Eigen::Index i) {
    return ((i >> 2) & 1) == m1 && ((i >> 1) & 1) == m2;
  };
  for (Eigen::Index r = 0; r < 8; ++r) {
    if (!matches(r)) continue;
    for (Eigen::Index c = 0; c < 8; ++c) {
      if (matches(c)) out(r, c) = rho(r, c);
    }
  }
  return out;
}

}  // namespace

double exact_teleport_channel(const InputState& input, const DensityMatrix& resource,
                              const NoiseConfig& noise, BellKind resource_sign) {
  input.validate();
  noise.validate();
  if (resource.qubit_count() != 2) {
    throw std::invalid_argument("teleportation resource must be a two-qubit state");
  }

  Eigen::MatrixXcd rho = tensor(DensityMatrix::pure(input.vector()), resource).matrix();
  rho = pauli_channel_map(rho, noise.cnot_noise, 0, 3);
  rho = pauli_channel_map(rho, noise.cnot_noise, 1, 3);
  const Eigen::MatrixXcd cnot = full_unitary(GateSpec::cnot(0, 1), 3);
  rho = cnot * rho * cnot.adjoint();
  const Eigen::MatrixXcd h = full_unitary(GateSpec::h(0), 3);
  rho = h * rho * h.adjoint();
  rho = pauli_channel_map(rho, noise.h_noise, 0, 3);

  const Eigen::MatrixXcd x2 = full_unitary(GateSpec::x(2), 3);
  const Eigen::MatrixXcd z2 = full_unitary(GateSpec::z(2), 3);
  const CorrectionRule rule = correction_rule(resource_sign);
  const Eigen::Vector2cd target = input.vector();
  const double e = noise.measurement_flip;

  double fidelity = 0.0;
  for (int m1 = 0; m1 < 2; ++m1) {
    for (int m2 = 0; m2 < 2; ++m2) {
      // Unnormalized branch: its trace carries the outcome probability.
      const Eigen::MatrixXcd branch = project_sender(rho, m1, m2);
      for (int f1 = 0; f1 < 2; ++f1) {
        for (int f2 = 0; f2 < 2; ++f2) {
          const double weight = (f1 ? e : 1.0 - e) * (f2 ? e : 1.0 - e);
          if (weight == 0.0) continue;
          Eigen::MatrixXcd b = branch;
          const int r1 = m1 ^ f1;
          const int r2 = m2 ^ f2;
          if (r2 == rule.x_offset) {
            b = x2 * b * x2.adjoint();
            b = pauli_channel_map(b, noise.correction_x_noise, 2, 3);
          }
          if (r1 == rule.z_offset) {
            b = z2 * b * z2.adjoint();
            b = pauli_channel_map(b, noise.correction_z_noise, 2, 3);
          }
          const Eigen::MatrixXcd receiver =
              partial_trace(detail::make_density_unchecked(std::move(b)), {2}).matrix();
          fidelity += weight * (target.adjoint() * receiver * target).value().real();
        }
      }
    }
  }
  return fidelity;
}

double werner_teleport_fidelity(double resource_fidelity) {
  if (!(resource_fidelity >= 0.25 && resource_fidelity <= 1.0)) {
    throw std::domain_error("werner fidelity must be in [0.25, 1]");
  }
  return (1.0 + 2.0 * resource_fidelity) / 3.0;
}

double bsm_fidelity_estimate(const InputState& input, const NoiseConfig& noise) {
  NoiseConfig sender_only;
  sender_only.cnot_noise = noise.cnot_noise;
  sender_only.h_noise = noise.h_noise;
  sender_only.measurement_flip = noise.measurement_flip;
  return exact_teleport_channel(input, bell_state(BellKind::PsiPlus), sender_only,
                                BellKind::PsiPlus);
}

double receiver_fidelity_estimate(const InputState& input, const NoiseConfig& noise) {
  NoiseConfig corrections_only;
  corrections_only.correction_x_noise = noise.correction_x_noise;
  corrections_only.correction_z_noise = noise.correction_z_noise;
  return exact_teleport_channel(input, bell_state(BellKind::PsiPlus), corrections_only,
                                BellKind::PsiPlus);
}

FixedResourceSupplier::FixedResourceSupplier(const DensityMatrix& state, BellKind sign)
    : ensemble_(PureEnsemble::from_density_matrix(state)), sign_(sign) {
  if (state.qubit_count() != 2) {
    throw std::invalid_argument("teleportation resource must be a two-qubit state");
  }
}

ResourceSupplyError::ResourceSupplyError(std::uint64_t trials_completed_in, const std::string& cause)
    : std::runtime_error("resource supply failed after " + std::to_string(trials_completed_in) +
                         " trials: " + cause),
      trials_completed(trials_completed_in) {}

TrialAggregate run_trials(std::uint64_t n, const InputState& input, ResourceSupplier& supplier,
                          const NoiseConfig& noise, const RngStream& rng, bool measure_receiver) {
  if (n < 1) throw std::invalid_argument("trial count must be at least 1");
  input.validate();
  noise.validate();

  TrialAggregate aggregate;
  aggregate.trials = n;
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t k = 0; k < n; ++k) {
    ResourceSupplier::Supplied supplied;
    try {
      supplied = supplier.next();
    } catch (const std::exception& e) {
      throw ResourceSupplyError(k, e.what());
    }
    RngStream trial_rng = rng.derive(k);
    const TeleportTrialResult trial =
        teleport_once(input, *supplied.ensemble, noise, trial_rng, supplied.sign, measure_receiver);
    if (trial.receiver_bit) {
      if (*trial.receiver_bit == 0) {
        ++aggregate.count_0;
      } else {
        ++aggregate.count_1;
      }
    }
    const double delta = trial.output_fidelity - mean;
    mean += delta / static_cast<double>(k + 1);
    m2 += delta * (trial.output_fidelity - mean);
  }
  aggregate.mean_fidelity = mean;
  if (n > 1) {
    aggregate.std_error = std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
  }
  return aggregate;
}

}  // namespace qnet
