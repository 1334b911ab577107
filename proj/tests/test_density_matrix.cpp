// SPDX-License-Identifier: MIT

#include "qnetsim/density_matrix.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <string>

#include "qnetsim/states.hpp"

namespace qnet {
namespace {

using namespace std::complex_literals;

TEST(DensityMatrix, ZeroStateAndMaximallyMixed) {
  const DensityMatrix zero = DensityMatrix::zero_state(2);
  EXPECT_EQ(zero.qubit_count(), 2);
  EXPECT_EQ(zero.dim(), 4);
  EXPECT_NEAR(zero.matrix()(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(zero.matrix().trace().real(), 1.0, 1e-15);

  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(mixed.matrix()(i, i).real(), 0.25, 1e-15);
  }
}

TEST(DensityMatrix, QubitZeroIsMostSignificantBit) {
  // |10> means qubit 0 = 1, qubit 1 = 0, which is basis index 2.
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(2) = 1.0;
  const DensityMatrix rho = DensityMatrix::pure(psi);
  EXPECT_NEAR(rho.matrix()(2, 2).real(), 1.0, 1e-15);

  // Tracing out qubit 1 must leave qubit 0 in |1>.
  const DensityMatrix q0 = partial_trace(rho, {0});
  EXPECT_NEAR(q0.matrix()(1, 1).real(), 1.0, 1e-12);
  const DensityMatrix q1 = partial_trace(rho, {1});
  EXPECT_NEAR(q1.matrix()(0, 0).real(), 1.0, 1e-12);
}

TEST(DensityMatrix, PsiPlusEntries) {
  const DensityMatrix rho = bell_state(BellKind::PsiPlus);
  const auto& m = rho.matrix();
  EXPECT_NEAR(m(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(m(2, 2).real(), 0.5, 1e-15);
  EXPECT_NEAR(m(1, 2).real(), 0.5, 1e-15);
  EXPECT_NEAR(m(2, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(m(0, 0).real(), 0.0, 1e-15);
  EXPECT_NEAR(m(3, 3).real(), 0.0, 1e-15);

  const DensityMatrix minus = bell_state(BellKind::PsiMinus);
  EXPECT_NEAR(minus.matrix()(1, 2).real(), -0.5, 1e-15);
}

TEST(DensityMatrix, FromMatrixValidates) {
  Eigen::MatrixXcd ok(2, 2);
  ok << 0.5, 0.25, 0.25, 0.5;
  EXPECT_NO_THROW(DensityMatrix::from_matrix(ok));

  Eigen::MatrixXcd not_hermitian(2, 2);
  not_hermitian << 0.5, 0.3, 0.1, 0.5;
  EXPECT_THROW(DensityMatrix::from_matrix(not_hermitian), std::invalid_argument);

  Eigen::MatrixXcd bad_trace(2, 2);
  bad_trace << 0.7, 0.0, 0.0, 0.7;
  EXPECT_THROW(DensityMatrix::from_matrix(bad_trace), std::invalid_argument);

  Eigen::MatrixXcd negative(2, 2);
  negative << 1.2, 0.0, 0.0, -0.2;
  EXPECT_THROW(DensityMatrix::from_matrix(negative), std::invalid_argument);

  Eigen::MatrixXcd not_square(2, 3);
  not_square.setZero();
  EXPECT_THROW(DensityMatrix::from_matrix(not_square), std::invalid_argument);

  Eigen::MatrixXcd not_power_of_two = Eigen::MatrixXcd::Identity(3, 3) / 3.0;
  EXPECT_THROW(DensityMatrix::from_matrix(not_power_of_two), std::invalid_argument);
}

TEST(DensityMatrix, PureRejectsUnnormalized) {
  Eigen::VectorXcd psi(2);
  psi << 0.9, 0.1;
  EXPECT_THROW(DensityMatrix::pure(psi), std::invalid_argument);
}

TEST(DensityMatrix, IsValidNamesViolation) {
  Eigen::MatrixXcd m(2, 2);
  m << 0.5, 0.3, 0.1, 0.5;
  std::string why;
  EXPECT_FALSE(detail::make_density_unchecked(m).is_valid(1e-10, &why));
  EXPECT_FALSE(why.empty());
}

TEST(DensityMatrix, WernerExplicitEntries) {
  const double fidelity = 0.87;
  const double p = werner_parameter(fidelity);
  EXPECT_NEAR(p, (4 * 0.87 - 1) / 3, 1e-15);

  const DensityMatrix rho = werner_from_fidelity(fidelity, BellKind::PsiPlus);
  const auto& m = rho.matrix();
  EXPECT_NEAR(m(0, 0).real(), (1 - p) / 4, 1e-12);
  EXPECT_NEAR(m(3, 3).real(), (1 - p) / 4, 1e-12);
  EXPECT_NEAR(m(1, 1).real(), (1 - p) / 4 + p / 2, 1e-12);
  EXPECT_NEAR(m(2, 2).real(), (1 - p) / 4 + p / 2, 1e-12);
  EXPECT_NEAR(m(1, 2).real(), p / 2, 1e-12);

  // Overlap with the target Bell state is the requested fidelity.
  EXPECT_NEAR(fidelity_to_pure(rho, bell_vector(BellKind::PsiPlus)), fidelity, 1e-12);

  // Reduced states are maximally mixed.
  for (int q : {0, 1}) {
    const DensityMatrix reduced = partial_trace(rho, {q});
    EXPECT_NEAR(reduced.matrix()(0, 0).real(), 0.5, 1e-12);
    EXPECT_NEAR(std::abs(reduced.matrix()(0, 1)), 0.0, 1e-12);
  }
}

TEST(DensityMatrix, WernerDomain) {
  EXPECT_THROW(werner_from_fidelity(0.2, BellKind::PsiPlus), std::domain_error);
  EXPECT_THROW(werner_from_fidelity(1.1, BellKind::PsiPlus), std::domain_error);
  const DensityMatrix floor = werner_from_fidelity(0.25, BellKind::PsiMinus);
  EXPECT_NEAR((floor.matrix() - Eigen::MatrixXcd::Identity(4, 4) / 4).norm(), 0.0, 1e-12);
}

TEST(DensityMatrix, TensorAndPartialTraceRoundTrip) {
  Eigen::VectorXcd a_vec(2);
  a_vec << std::sqrt(0.3), std::sqrt(0.7) * 1i;
  const DensityMatrix a = DensityMatrix::pure(a_vec);
  const DensityMatrix b = bell_state(BellKind::PhiMinus);

  const DensityMatrix joint = tensor(a, b);
  EXPECT_EQ(joint.qubit_count(), 3);
  EXPECT_NEAR(joint.matrix().trace().real(), 1.0, 1e-12);

  const DensityMatrix back_a = partial_trace(joint, {0});
  EXPECT_NEAR((back_a.matrix() - a.matrix()).norm(), 0.0, 1e-12);
  const DensityMatrix back_b = partial_trace(joint, {1, 2});
  EXPECT_NEAR((back_b.matrix() - b.matrix()).norm(), 0.0, 1e-12);
}

TEST(DensityMatrix, PartialTraceArgumentChecks) {
  const DensityMatrix rho = bell_state(BellKind::PhiPlus);
  EXPECT_THROW(partial_trace(rho, {}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, {1, 0}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, {0, 2}), std::out_of_range);
}

TEST(DensityMatrix, FidelityToPure) {
  const DensityMatrix rho = bell_state(BellKind::PsiPlus);
  EXPECT_NEAR(fidelity_to_pure(rho, bell_vector(BellKind::PsiPlus)), 1.0, 1e-12);
  EXPECT_NEAR(fidelity_to_pure(rho, bell_vector(BellKind::PsiMinus)), 0.0, 1e-12);
  EXPECT_NEAR(fidelity_to_pure(DensityMatrix::maximally_mixed(2), bell_vector(BellKind::PhiPlus)),
              0.25, 1e-12);
}

TEST(States, BellNamesAndVectors) {
  EXPECT_STREQ(to_string(BellKind::PhiPlus), "phi+");
  EXPECT_STREQ(to_string(BellKind::PhiMinus), "phi-");
  EXPECT_STREQ(to_string(BellKind::PsiPlus), "psi+");
  EXPECT_STREQ(to_string(BellKind::PsiMinus), "psi-");
  for (BellKind kind :
       {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
    EXPECT_NEAR(bell_vector(kind).norm(), 1.0, 1e-15);
  }
  // The four Bell vectors are mutually orthogonal.
  EXPECT_NEAR(std::abs(bell_vector(BellKind::PsiPlus).dot(bell_vector(BellKind::PsiMinus))), 0.0,
              1e-15);
  EXPECT_NEAR(std::abs(bell_vector(BellKind::PhiPlus).dot(bell_vector(BellKind::PsiPlus))), 0.0,
              1e-15);
}

}  // namespace
}  // namespace qnet
