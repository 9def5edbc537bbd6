// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bhwalk/encoding.hpp"
#include "bhwalk/error.hpp"
#include "bhwalk/gates.hpp"
#include "oracles.hpp"

using namespace bhwalk;
using std::numbers::pi;

namespace {

// Simulates the gate on its own 1- or 2-qubit system with the test oracle.
oracle::Block simulate(const GateSpec& g, double fraction = 1.0) {
  const std::size_t n = g.arity();
  const EncodingMap enc = EncodingMap::for_qubits(n);
  const CMatrix h = oracle::first_quantized_hamiltonian(enc.basis(), g.config(n));
  return oracle::propagate_block(h, fraction * g.duration, enc.support());
}

double phi(int m) { return -pi * (m + std::sqrt(m * m - 16.0)); }

double mod2pi(double x) {
  double r = std::fmod(x, 2 * pi);
  return r < 0 ? r + 2 * pi : r;
}

}  // namespace

TEST(RxGate, DurationsAndMatrices) {
  const GateSpec g0 = rx_gate(1, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(g0.duration, 2 * pi);
  EXPECT_LT((g0.predicted - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);

  const GateSpec gpi = rx_gate(1, pi, 2.0);
  EXPECT_DOUBLE_EQ(gpi.duration, 3 * pi / 4.0);
  CMatrix minus_ix(2, 2);
  minus_ix << 0, Complex(0, -1), Complex(0, -1), 0;
  EXPECT_LT((gpi.predicted - minus_ix).cwiseAbs().maxCoeff(), 1e-15);
  ASSERT_EQ(gpi.edges().size(), 1u);
  EXPECT_EQ(gpi.edges()[0].a, VertexId::at(1, 0));
  EXPECT_EQ(gpi.edges()[0].b, VertexId::at(1, 1));

  const oracle::Block b = simulate(rx_gate(1, pi / 2, 1.0));
  EXPECT_LT((b.matrix - oracle::rx(pi / 2)).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_THROW(rx_gate(1, 2 * pi, 1.0), InvalidArgument);
  EXPECT_THROW(rx_gate(1, -0.1, 1.0), InvalidArgument);
  EXPECT_THROW(rx_gate(1, 0.1, 0.0), InvalidArgument);
}

TEST(RzGate, DurationsAndMatrices) {
  EXPECT_EQ(rz_gate(1, 0.0, 1.0).duration, 0.0);
  const GateSpec g = rz_gate(2, pi, 1.0);
  EXPECT_DOUBLE_EQ(g.duration, pi);
  EXPECT_TRUE(g.edges().empty());
  ASSERT_EQ(g.potentials().size(), 1u);
  EXPECT_EQ(g.potentials()[0].first, VertexId::at(2, 1));
  EXPECT_LT((g.predicted - oracle::pauli_z()).cwiseAbs().maxCoeff(), 1e-15);

  const oracle::Block b = simulate(rz_gate(1, pi / 2, 1.0));
  EXPECT_LT((b.matrix - oracle::phase(pi / 2)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(HadamardGate, SinglePulse) {
  const GateSpec h = hadamard_gate(1, 1.0);
  EXPECT_NEAR(h.duration, 1.1107, 1e-4);
  EXPECT_DOUBLE_EQ(h.potential, 2.0);
  const oracle::Block b = simulate(h);
  EXPECT_LT(oracle::phase_free_distance(b.matrix, oracle::hadamard()), 1e-10);
  // The stored phase is the one the pulse actually produces.
  EXPECT_LT((b.matrix - std::polar(1.0, h.global_phase) * oracle::hadamard()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT(oracle::phase_free_distance(b.matrix * b.matrix, CMatrix::Identity(2, 2)), 1e-10);
}

TEST(Euler, KnownAngles) {
  const EulerAngles h = euler_xzx_angles(oracle::hadamard());
  EXPECT_NEAR(h.first, pi / 2, 1e-12);
  EXPECT_NEAR(h.middle, pi / 2, 1e-12);
  EXPECT_NEAR(h.last, pi / 2, 1e-12);

  const EulerAngles id = euler_xzx_angles(CMatrix::Identity(2, 2));
  EXPECT_NEAR(id.first, 0.0, 1e-12);
  EXPECT_NEAR(id.middle, 0.0, 1e-12);
  EXPECT_NEAR(id.last, 0.0, 1e-12);
  const auto pulses = euler_single_qubit(1, CMatrix::Identity(2, 2), 1.0, 1.0);
  EXPECT_DOUBLE_EQ(pulses[0].duration, 2 * pi);
  EXPECT_EQ(pulses[1].duration, 0.0);

  CMatrix bad = CMatrix::Identity(2, 2);
  bad(0, 1) = 0.1;
  EXPECT_THROW(euler_xzx_angles(bad), InvalidArgument);
}

TEST(Euler, RandomUnitariesBySimulation) {
  std::mt19937_64 rng(2024);
  for (int s = 0; s < 20; ++s) {
    const CMatrix target = oracle::random_unitary_2x2(rng);
    const auto pulses = euler_single_qubit(1, target, 1.0, 1.0);
    ASSERT_EQ(pulses.size(), 3u);
    EXPECT_EQ(pulses[0].kind, GateKind::RX);
    EXPECT_EQ(pulses[1].kind, GateKind::RZ);
    CMatrix total = CMatrix::Identity(2, 2);
    for (const GateSpec& p : pulses) {
      if (p.duration > 0.0) total = simulate(p).matrix * total;
    }
    EXPECT_LT(oracle::phase_free_distance(total, target), 1e-9) << "sample " << s;
  }
}

TEST(CphaseGate, ParametersForM6) {
  const GateSpec g = cphase_gate(1, 6, 2, std::sqrt(20.0));
  EXPECT_NEAR(g.tunneling, 1.0, 1e-15);
  EXPECT_NEAR(g.duration, 2 * pi, 1e-14);
  EXPECT_NEAR(std::arg(g.predicted(3, 3)), std::remainder(phi(6), 2 * pi), 1e-12);
  EXPECT_FALSE(g.trivial_phase);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0].a, VertexId::at(1, 1));
  EXPECT_EQ(g.edges()[0].b, VertexId::at(2, 1));
}

TEST(CphaseGate, TrivialAndRejected) {
  EXPECT_TRUE(cphase_gate(1, 5, 2, 1.0).trivial_phase);
  EXPECT_THROW(cphase_gate(1, 4, 2, 1.0), InvalidArgument);
  EXPECT_THROW(cphase_gate(1, 3, 2, 1.0), InvalidArgument);
  EXPECT_THROW(cphase_gate(1, 8, 1, 1.0), InvalidArgument);        // odd k needs the flag
  EXPECT_THROW(cphase_gate(1, 7, 1, 1.0, true), InvalidArgument);  // m*k odd
  EXPECT_THROW(cphase_gate(1, 6, 0, 1.0), InvalidArgument);
}

TEST(CphaseGate, PhaseIdentityAtSamplePoints) {
  for (int m : {6, 8, 9, 16, 17}) {
    const GateSpec g = cphase_gate(1, m, 2, 1.0);
    const oracle::Block b = simulate(g);
    EXPECT_LT(b.leakage, 1e-8) << m;
    // Diagonal entries 1, 1, 1 are exact with no global phase; compare directly.
    EXPECT_NEAR(std::abs(std::remainder(std::arg(b.matrix(3, 3)) - phi(m), 2 * pi)), 0.0, 1e-8) << m;
    EXPECT_LT((b.matrix - oracle::cphase(phi(m))).cwiseAbs().maxCoeff(), 1e-8) << m;
  }
}

TEST(CphaseGate, OddKRealizesHalfPhase) {
  // k = 1 accumulates half the k = 2 phase and a local Z on each qubit.
  for (int m : {6, 8, 10}) {
    const GateSpec g = cphase_gate(1, m, 1, 1.0, true);
    const oracle::Block b = simulate(g);
    const CMatrix expected = oracle::kron(oracle::pauli_z(), oracle::pauli_z()) * oracle::cphase(phi(m) / 2);
    EXPECT_LT(b.leakage, 1e-8);
    EXPECT_LT(oracle::phase_free_distance(b.matrix, expected), 1e-8) << m;
    EXPECT_LT(oracle::phase_free_distance(b.matrix, g.predicted), 1e-8) << m;
  }
  // m = 8 is therefore not plain Z x Z.
  const oracle::Block b8 = simulate(cphase_gate(1, 8, 1, 1.0, true));
  EXPECT_GT(oracle::phase_free_distance(b8.matrix, oracle::kron(oracle::pauli_z(), oracle::pauli_z())), 0.1);
}

TEST(CphaseGate, HigherEvenK) {
  const GateSpec g = cphase_gate(1, 6, 4, 1.0);
  const oracle::Block b = simulate(g);
  EXPECT_LT(b.leakage, 1e-8);
  EXPECT_LT((b.matrix - oracle::cphase(2 * phi(6))).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LT((b.matrix - g.predicted).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(CphaseGate, ZeroZeroIsStationary) {
  const GateSpec g = cphase_gate(1, 6, 2, 2.0);
  const EncodingMap enc = EncodingMap::for_qubits(2);
  const CMatrix h = oracle::first_quantized_hamiltonian(enc.basis(), g.config(2));
  const std::size_t i00 = enc.index_of_label("00");
  for (double t : {0.3, 1.1, g.duration}) {
    const CMatrix u = oracle::expm(h, t);
    EXPECT_NEAR(std::abs(u(static_cast<Eigen::Index>(i00), static_cast<Eigen::Index>(i00))), 1.0, 1e-14);
  }
  EXPECT_TRUE(h.row(static_cast<Eigen::Index>(i00)).isZero(0.0));
}

TEST(CphaseGate, LargeMPhaseApproachesPositive8PiOverM) {
  const double wrapped = std::remainder(phi(200), 2 * pi);
  EXPECT_NEAR(wrapped, 8 * pi / 200, 0.05 * 8 * pi / 200);
  EXPECT_NEAR(cphase_phase(200), phi(200), 1e-9);
  EXPECT_NEAR(mod2pi(phi(200)), 8 * pi / 200, 1e-4);
}

TEST(SwapGate, MinimalSolution) {
  const GateSpec g = swap_gate(1, 1, 5, 2.0);
  EXPECT_NEAR(2.0 / g.tunneling, 16.0 / 3.0, 1e-14);
  EXPECT_NEAR(g.duration, 3 * pi / (2 * g.tunneling), 1e-14);
  EXPECT_NEAR(g.alpha, 9.0, 1e-14);
  EXPECT_EQ(g.swap_class, SwapClass::MinusSwap);
  EXPECT_EQ(g.edges().size(), 2u);
  const oracle::Block b = simulate(g);
  EXPECT_LT(b.leakage, 1e-8);
  EXPECT_LT((b.matrix + oracle::swap()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(SwapGate, EntanglingVariantAndClasses) {
  const GateSpec g = swap_gate(1, 1, 6, 1.0);
  EXPECT_NEAR(g.alpha, 6 + std::sqrt(27.0), 1e-14);
  EXPECT_EQ(g.swap_class, SwapClass::Entangling);
  const oracle::Block b = simulate(g);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = std::polar(1.0, -g.alpha * pi);
  expected(1, 2) = expected(2, 1) = -1.0;
  EXPECT_LT(b.leakage, 1e-8);
  EXPECT_LT((b.matrix - expected).cwiseAbs().maxCoeff(), 1e-8);

  // With s = sqrt(l^2 - (2k+1)^2), (l - s)(l + s) is an odd square, so an
  // integer alpha = l + s is always odd.
  int integer_cases = 0;
  for (int k = 0; k <= 6; ++k) {
    for (int l = 2 * k + 2; l <= 80; ++l) {
      const GateSpec s = swap_gate(1, k, l, 1.0);
      EXPECT_NE(s.swap_class, SwapClass::ZZSwap);
      if (s.swap_class == SwapClass::MinusSwap) ++integer_cases;
    }
  }
  EXPECT_GE(integer_cases, 6);
  EXPECT_EQ(swap_gate(1, 2, 13, 1.0).swap_class, SwapClass::MinusSwap);
  EXPECT_THROW(swap_gate(1, 0, 1, 1.0), InvalidArgument);
  EXPECT_THROW(swap_gate(1, 1, 3, 1.0), InvalidArgument);
}

TEST(GateLibrary, EveryGateMatchesItsPrediction) {
  std::vector<GateSpec> gates{rx_gate(1, 0.3, 0.7), rx_gate(1, 5.9, 1.3), rz_gate(1, 2.0, 0.4), hadamard_gate(1, 2.5),
                              cphase_gate(1, 7, 2, 3.0), cphase_gate(1, 12, 3, 1.0, true), swap_gate(1, 1, 5, 1.5),
                              swap_gate(1, 2, 9, 0.8), swap_gate(1, 1, 7, 1.0)};
  for (const GateSpec& g : gates) {
    const oracle::Block b = simulate(g);
    EXPECT_LT(b.leakage, 1e-8) << to_string(g.kind);
    EXPECT_LT(oracle::phase_free_distance(b.matrix, g.predicted), 1e-8) << to_string(g.kind);
    EXPECT_LT((g.predicted.adjoint() * g.predicted - CMatrix::Identity(g.predicted.rows(), g.predicted.rows()))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-14);
  }
}

TEST(GateLibrary, RescaleKeepsRatios) {
  const GateSpec h = rescaled_to(hadamard_gate(1, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(h.potential, 2 * h.tunneling);
  EXPECT_LT(oracle::phase_free_distance(simulate(h).matrix, oracle::hadamard()), 1e-10);
  const GateSpec rx = rescaled_to(rx_gate(1, 1.0, 1.0), 7.0);
  EXPECT_LT((simulate(rx).matrix - oracle::rx(1.0)).cwiseAbs().maxCoeff(), 1e-10);
  const GateSpec cp = cphase_gate(1, 6, 2, 1.0);
  EXPECT_THROW(rescaled_to(cp, cp.duration * 1.01), InvalidArgument);
  EXPECT_NO_THROW(rescaled_to(cp, cp.duration));
}
