// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "bhwalk/error.hpp"
#include "bhwalk/evolution.hpp"
#include "oracles.hpp"

using namespace bhwalk;

namespace {

GraphConfig chain(std::size_t sites, double u) {
  GraphConfig c(sites, u);
  for (std::size_t s = 0; s + 1 < sites; ++s) c.add_edge(VertexId::flat(s), VertexId::flat(s + 1), 1.0 + 0.1 * s);
  c.set_potential(VertexId::flat(0), 0.3);
  return c;
}

}  // namespace

TEST(Evolve, DenseMatchesPadeOracle) {
  const auto basis = enumerate_basis(3, 5);
  const GraphConfig c = chain(5, 2.5);
  const SparseHermitian h = build_hamiltonian(*basis, c);
  std::mt19937_64 rng(3);
  const StateVector psi(basis, oracle::random_state(basis->dimension(), rng));
  for (double t : {0.1, 1.7, -2.3, 9.0}) {
    const CVector ref = oracle::expm(oracle::first_quantized_hamiltonian(*basis, c), t) * psi.amplitudes();
    const StateVector out = evolve(h, psi, t, {EvolutionMethod::Dense});
    EXPECT_LT((out.amplitudes() - ref).cwiseAbs().maxCoeff(), 1e-11) << t;
  }
}

TEST(Evolve, KrylovAgreesWithDense) {
  const auto basis = enumerate_basis(4, 8);  // dimension 330
  GraphConfig c = chain(8, 3.0);
  c.set_potential(VertexId::flat(5), -1.2);
  const SparseHermitian h = build_hamiltonian(*basis, c);
  std::mt19937_64 rng(11);
  const StateVector psi(basis, oracle::random_state(basis->dimension(), rng));
  for (double t : {0.5, 6.0, -4.0}) {
    const StateVector dense = evolve(h, psi, t, {EvolutionMethod::Dense});
    const StateVector kry = evolve(h, psi, t, {EvolutionMethod::Krylov});
    EXPECT_LT((dense.amplitudes() - kry.amplitudes()).norm(), 1e-9) << t;
    EXPECT_NEAR(kry.norm(), 1.0, 1e-10);
  }
}

TEST(Evolve, ComplexHamiltonianPath) {
  std::vector<SparseHermitian::Entry> e{{0, 1, Complex(0.0, 1.0)}, {1, 0, Complex(0.0, -1.0)}};
  const SparseHermitian h(2, e);
  const DensePropagator p(h);
  const CMatrix ref = oracle::expm(h.to_dense(), 0.8);
  EXPECT_LT((p.matrix(0.8) - ref).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Evolve, ZeroTimeIsExactIdentity) {
  const auto basis = enumerate_basis(2, 4);
  const SparseHermitian h = build_hamiltonian(*basis, chain(4, 1.0));
  const StateVector psi = StateVector::basis_state(basis, 3);
  const StateVector out = evolve(h, psi, 0.0);
  EXPECT_EQ(out.amplitudes(), psi.amplitudes());
}

TEST(Evolve, ForwardThenBackward) {
  const auto basis = enumerate_basis(3, 6);
  const SparseHermitian h = build_hamiltonian(*basis, chain(6, 4.0));
  const StateVector psi = StateVector::basis_state(basis, 5);
  const StateVector there = evolve(h, psi, 3.3);
  const StateVector back = evolve(h, there, -3.3);
  EXPECT_LT((back.amplitudes() - psi.amplitudes()).norm(), 1e-12);
}

TEST(Evolve, Errors) {
  const auto basis = enumerate_basis(2, 4);
  const SparseHermitian h = build_hamiltonian(*basis, chain(4, 1.0));
  const StateVector wrong = StateVector::basis_state(enumerate_basis(1, 4), 0);
  EXPECT_THROW(evolve(h, wrong, 1.0), DimensionMismatch);
  EXPECT_THROW(StateVector(basis, CVector::Zero(3)), DimensionMismatch);
  EXPECT_THROW(evolve(h, StateVector::basis_state(basis, 0), NAN), InvalidArgument);
}

TEST(Restrict, WholeSpaceHasZeroLeakage) {
  const auto basis = enumerate_basis(2, 4);
  const SparseHermitian h = build_hamiltonian(*basis, chain(4, 2.0));
  std::vector<std::size_t> all(basis->dimension());
  std::iota(all.begin(), all.end(), 0);
  const RestrictedOperator r = restrict_evolution(h, 1.3, all);
  EXPECT_EQ(r.leakage, 0.0);
  const CMatrix unitary_check = r.matrix.adjoint() * r.matrix - CMatrix::Identity(10, 10);
  EXPECT_LT(unitary_check.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Restrict, LeakageMatchesOracleAndIdentityAtZero) {
  const auto basis = enumerate_basis(2, 4);
  const GraphConfig c = chain(4, 2.0);
  const SparseHermitian h = build_hamiltonian(*basis, c);
  const std::vector<std::size_t> sub{2, 3, 6};
  const RestrictedOperator r = restrict_evolution(h, 0.9, sub);
  const oracle::Block ref = oracle::propagate_block(oracle::first_quantized_hamiltonian(*basis, c), 0.9, sub);
  EXPECT_LT((r.matrix - ref.matrix).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(r.leakage, ref.leakage, 1e-12);

  const RestrictedOperator zero = restrict_evolution(h, 0.0, sub);
  EXPECT_EQ(zero.matrix, CMatrix::Identity(3, 3));
  EXPECT_EQ(zero.leakage, 0.0);

  const std::vector<std::size_t> dup{1, 1};
  EXPECT_THROW(restrict_evolution(h, 1.0, dup), InvalidArgument);
  const std::vector<std::size_t> far{99};
  EXPECT_THROW(restrict_evolution(h, 1.0, far), IndexError);
}

TEST(PhaseAlignment, RecoversGlobalPhase) {
  std::mt19937_64 rng(5);
  const CMatrix u = oracle::random_unitary_2x2(rng);
  const CMatrix shifted = std::polar(1.0, 2.1) * u;
  const PhaseAlignment a = align_global_phase(shifted, u);
  EXPECT_NEAR(a.phase, 2.1, 1e-12);
  EXPECT_LT(a.deviation, 1e-14);
  EXPECT_TRUE(equal_up_to_phase(shifted, u, 1e-12));
  EXPECT_FALSE(equal_up_to_phase(oracle::hadamard(), oracle::pauli_z(), 0.1));
  EXPECT_THROW(align_global_phase(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)), DimensionMismatch);
}
