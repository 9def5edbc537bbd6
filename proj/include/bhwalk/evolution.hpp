// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file evolution.hpp
 * @brief Exact time evolution exp(-iHt) on Fock-space state vectors.
 *
 * Small systems (dimension <= EvolveOptions::dense_limit) are propagated
 * through a full Hermitian eigendecomposition; larger ones through a
 * Lanczos (Krylov) propagator with adaptive step size.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bhwalk/fock.hpp"
#include "bhwalk/hamiltonian.hpp"

namespace bhwalk {

/// Amplitudes over a shared FockBasis.
class StateVector {
 public:
  StateVector(FockBasisPtr basis, CVector amplitudes);

  /// Unit vector on basis state `index`.
  static StateVector basis_state(FockBasisPtr basis, std::size_t index);

  const FockBasis& basis() const noexcept { return *basis_; }
  const FockBasisPtr& basis_ptr() const noexcept { return basis_; }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(std::size_t index) const;
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  double norm() const { return amplitudes_.norm(); }

  /// <this|other>
  Complex inner(const StateVector& other) const;

 private:
  FockBasisPtr basis_;
  CVector amplitudes_;
};

enum class EvolutionMethod { Auto, Dense, Krylov };

struct EvolveOptions {
  EvolutionMethod method = EvolutionMethod::Auto;
  /// Auto selects the dense path up to and including this dimension.
  std::size_t dense_limit = 2048;
  std::size_t krylov_dimension = 30;
  /// Local error target per accepted Krylov step.
  double krylov_tolerance = 1e-11;
  std::size_t max_krylov_steps = 1'000'000;
};

/// Eigendecomposition of a Hermitian matrix, reusable for many times t.
class DensePropagator {
 public:
  explicit DensePropagator(const SparseHermitian& hamiltonian);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(energies_.size()); }
  const Eigen::VectorXd& energies() const noexcept { return energies_; }

  /// exp(-iHt) psi
  CVector apply(const CVector& psi, double t) const;
  /// Columns `cols` of exp(-iHt).
  CMatrix columns(std::span<const std::size_t> cols, double t) const;
  /// Full exp(-iHt).
  CMatrix matrix(double t) const;

 private:
  CVector rotate(const CVector& coefficients, double t) const;

  Eigen::VectorXd energies_;
  bool real_ = true;
  Eigen::MatrixXd real_vectors_;
  CMatrix complex_vectors_;
};

/// Lanczos propagation of psi by exp(-iHt). Throws ConvergenceError when the
/// step size collapses without meeting the local error target.
CVector krylov_propagate(const SparseHermitian& hamiltonian, const CVector& psi, double t,
                         const EvolveOptions& options = {});

/// exp(-iHt) psi. t may be negative. Throws DimensionMismatch when the state
/// and matrix dimensions differ.
StateVector evolve(const SparseHermitian& hamiltonian, const StateVector& psi, double t,
                   const EvolveOptions& options = {});

/// Block of exp(-iHt) on a subspace of basis states, plus how much amplitude
/// escapes it.
struct RestrictedOperator {
  std::vector<std::size_t> subspace;
  CMatrix matrix;
  /// Per input column: squared norm of the evolved column outside the subspace.
  std::vector<double> column_leakage;
  /// max(column_leakage)
  double leakage = 0.0;
};

RestrictedOperator restrict_evolution(const SparseHermitian& hamiltonian, double t,
                                      std::span<const std::size_t> subspace,
                                      const EvolveOptions& options = {});

/// actual ~= exp(i*phase) * reference; deviation is the max-norm residual.
struct PhaseAlignment {
  double phase = 0.0;
  double deviation = 0.0;
};

/// Aligns global phase using the least-squares optimum arg tr(reference^dag actual).
PhaseAlignment align_global_phase(const CMatrix& actual, const CMatrix& reference);

bool equal_up_to_phase(const CMatrix& actual, const CMatrix& reference, double tolerance);

/// max_ij |m_ij|
double max_abs(const CMatrix& m);

}  // namespace bhwalk
