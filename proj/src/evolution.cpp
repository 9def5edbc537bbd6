// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhwalk/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "bhwalk/error.hpp"

namespace bhwalk {

namespace {

Eigen::Index as_index(std::size_t i) { return static_cast<Eigen::Index>(i); }

CVector phases(const Eigen::VectorXd& energies, double t) {
  CVector out(energies.size());
  for (Eigen::Index k = 0; k < energies.size(); ++k) {
    out[k] = std::polar(1.0, -energies[k] * t);
  }
  return out;
}

}  // namespace

StateVector::StateVector(FockBasisPtr basis, CVector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (!basis_) throw InvalidArgument("StateVector: null basis");
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_->dimension()) {
    throw DimensionMismatch("StateVector: amplitude count does not match basis dimension");
  }
}

StateVector StateVector::basis_state(FockBasisPtr basis, std::size_t index) {
  if (!basis) throw InvalidArgument("StateVector: null basis");
  if (index >= basis->dimension()) throw IndexError("StateVector: basis index out of range");
  CVector amps = CVector::Zero(as_index(basis->dimension()));
  amps[as_index(index)] = 1.0;
  return StateVector(std::move(basis), std::move(amps));
}

Complex StateVector::amplitude(std::size_t index) const {
  if (index >= dimension()) throw IndexError("StateVector: index out of range");
  return amplitudes_[as_index(index)];
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dimension() != dimension()) throw DimensionMismatch("StateVector::inner");
  return amplitudes_.dot(other.amplitudes_);
}

DensePropagator::DensePropagator(const SparseHermitian& hamiltonian) {
  const CMatrix dense = hamiltonian.to_dense();
  real_ = hamiltonian.is_real();
  if (real_) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense.real());
    if (solver.info() != Eigen::Success) throw Error("DensePropagator: eigensolver failed");
    energies_ = solver.eigenvalues();
    real_vectors_ = solver.eigenvectors();
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(dense);
    if (solver.info() != Eigen::Success) throw Error("DensePropagator: eigensolver failed");
    energies_ = solver.eigenvalues();
    complex_vectors_ = solver.eigenvectors();
  }
}

CVector DensePropagator::rotate(const CVector& coefficients, double t) const {
  return phases(energies_, t).cwiseProduct(coefficients);
}

CVector DensePropagator::apply(const CVector& psi, double t) const {
  if (static_cast<std::size_t>(psi.size()) != dimension()) {
    throw DimensionMismatch("DensePropagator::apply: dimension mismatch");
  }
  if (real_) {
    const CVector c = real_vectors_.transpose().cast<Complex>() * psi;
    return real_vectors_.cast<Complex>() * rotate(c, t);
  }
  const CVector c = complex_vectors_.adjoint() * psi;
  return complex_vectors_ * rotate(c, t);
}

CMatrix DensePropagator::columns(std::span<const std::size_t> cols, double t) const {
  const auto n = as_index(dimension());
  CMatrix out(n, as_index(cols.size()));
  const CVector ph = phases(energies_, t);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= dimension()) throw IndexError("DensePropagator::columns: index out of range");
    // Row cols[j] of V^dagger is the conjugate of row cols[j] of V.
    if (real_) {
      const Eigen::VectorXd row = real_vectors_.row(as_index(cols[j])).transpose();
      out.col(as_index(j)) = real_vectors_.cast<Complex>() * ph.cwiseProduct(row.cast<Complex>());
    } else {
      const CVector row = complex_vectors_.row(as_index(cols[j])).adjoint();
      out.col(as_index(j)) = complex_vectors_ * ph.cwiseProduct(row);
    }
  }
  return out;
}

CMatrix DensePropagator::matrix(double t) const {
  const CVector ph = phases(energies_, t);
  if (real_) {
    const CMatrix v = real_vectors_.cast<Complex>();
    return v * ph.asDiagonal() * v.transpose();
  }
  return complex_vectors_ * ph.asDiagonal() * complex_vectors_.adjoint();
}

CVector krylov_propagate(const SparseHermitian& hamiltonian, const CVector& psi, double t,
                         const EvolveOptions& options) {
  const std::size_t dim = hamiltonian.dimension();
  if (static_cast<std::size_t>(psi.size()) != dim) {
    throw DimensionMismatch("krylov_propagate: dimension mismatch");
  }
  const double beta0 = psi.norm();
  if (t == 0.0 || beta0 == 0.0) return psi;

  const std::size_t max_m = std::max<std::size_t>(1, std::min(options.krylov_dimension, dim));
  const double tol = options.krylov_tolerance;
  const double h_norm = std::max(hamiltonian.norm_inf(), 1e-300);
  const double direction = t > 0 ? 1.0 : -1.0;

  CVector v = psi;
  double remaining = std::abs(t);
  double step = remaining;
  std::size_t accepted = 0;

  CMatrix q(as_index(dim), as_index(max_m + 1));
  while (remaining > 0.0) {
    const double norm_v = v.norm();
    q.col(0) = v / norm_v;
    std::vector<double> alpha;
    std::vector<double> beta;
    bool exact = false;
    std::size_t m = 0;
    for (std::size_t j = 0; j < max_m; ++j) {
      CVector w = hamiltonian.multiply(q.col(as_index(j)));
      alpha.push_back(q.col(as_index(j)).dot(w).real());
      // Full reorthogonalization, applied twice.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i <= j; ++i) {
          w -= q.col(as_index(i)).dot(w) * q.col(as_index(i));
        }
      }
      const double b = w.norm();
      beta.push_back(b);
      m = j + 1;
      if (b <= 1e-13 * h_norm) {
        exact = true;
        break;
      }
      q.col(as_index(j + 1)) = w / b;
    }
    if (m == dim) exact = true;

    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(as_index(m), as_index(m));
    for (std::size_t j = 0; j < m; ++j) {
      tri(as_index(j), as_index(j)) = alpha[j];
      if (j + 1 < m) {
        tri(as_index(j), as_index(j + 1)) = beta[j];
        tri(as_index(j + 1), as_index(j)) = beta[j];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    const Eigen::MatrixXd& s = solver.eigenvectors();
    const CVector s_e1 = s.row(0).transpose().cast<Complex>();

    double dt = std::min(step, remaining);
    CVector c;
    double err = 0.0;
    for (;;) {
      c = s.cast<Complex>() * phases(lambda, direction * dt).cwiseProduct(s_e1);
      err = exact ? 0.0 : norm_v * beta[m - 1] * std::abs(c[as_index(m - 1)]);
      if (err <= tol) break;
      const double shrink = std::clamp(0.9 * std::pow(tol / err, 1.0 / static_cast<double>(m)), 0.1, 0.9);
      dt *= shrink;
      if (dt <= 1e-14 * std::abs(t)) {
        throw ConvergenceError("krylov_propagate: step size underflow, residual " + std::to_string(err),
                               err);
      }
    }
    v = norm_v * (q.leftCols(as_index(m)) * c);
    remaining = (dt >= remaining) ? 0.0 : remaining - dt;
    if (++accepted > options.max_krylov_steps) {
      throw ConvergenceError("krylov_propagate: step limit exceeded", err);
    }
    const double grow = err > 0.0 ? std::pow(tol / err, 1.0 / static_cast<double>(m)) : 2.0;
    step = dt * std::clamp(0.9 * grow, 0.5, 2.0);
  }
  return v;
}

StateVector evolve(const SparseHermitian& hamiltonian, const StateVector& psi, double t,
                   const EvolveOptions& options) {
  if (hamiltonian.dimension() != psi.dimension()) {
    throw DimensionMismatch("evolve: Hamiltonian dimension " + std::to_string(hamiltonian.dimension()) +
                            " vs state dimension " + std::to_string(psi.dimension()));
  }
  if (!std::isfinite(t)) throw InvalidArgument("evolve: time must be finite");
  if (t == 0.0) return psi;
  const bool dense = options.method == EvolutionMethod::Dense ||
                     (options.method == EvolutionMethod::Auto && psi.dimension() <= options.dense_limit);
  if (dense) {
    return StateVector(psi.basis_ptr(), DensePropagator(hamiltonian).apply(psi.amplitudes(), t));
  }
  return StateVector(psi.basis_ptr(), krylov_propagate(hamiltonian, psi.amplitudes(), t, options));
}

RestrictedOperator restrict_evolution(const SparseHermitian& hamiltonian, double t,
                                      std::span<const std::size_t> subspace,
                                      const EvolveOptions& options) {
  const std::size_t dim = hamiltonian.dimension();
  std::vector<char> inside(dim, 0);
  for (std::size_t idx : subspace) {
    if (idx >= dim) throw IndexError("restrict_evolution: subspace index out of range");
    if (inside[idx]) throw InvalidArgument("restrict_evolution: subspace indices must be distinct");
    inside[idx] = 1;
  }
  if (!std::isfinite(t)) throw InvalidArgument("restrict_evolution: time must be finite");

  RestrictedOperator out;
  out.subspace.assign(subspace.begin(), subspace.end());
  const auto k = as_index(subspace.size());
  out.matrix = CMatrix::Zero(k, k);
  out.column_leakage.assign(subspace.size(), 0.0);
  if (t == 0.0) {
    out.matrix.setIdentity();
    return out;
  }

  CMatrix full;
  const bool dense = options.method == EvolutionMethod::Dense ||
                     (options.method == EvolutionMethod::Auto && dim <= options.dense_limit);
  if (dense) {
    full = DensePropagator(hamiltonian).columns(subspace, t);
  } else {
    full.resize(as_index(dim), k);
    for (Eigen::Index j = 0; j < k; ++j) {
      CVector e = CVector::Zero(as_index(dim));
      e[as_index(subspace[static_cast<std::size_t>(j)])] = 1.0;
      full.col(j) = krylov_propagate(hamiltonian, e, t, options);
    }
  }
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < k; ++i) {
      out.matrix(i, j) = full(as_index(subspace[static_cast<std::size_t>(i)]), j);
    }
    double outside = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
      if (!inside[r]) outside += std::norm(full(as_index(r), j));
    }
    out.column_leakage[static_cast<std::size_t>(j)] = outside;
    out.leakage = std::max(out.leakage, outside);
  }
  return out;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

PhaseAlignment align_global_phase(const CMatrix& actual, const CMatrix& reference) {
  if (actual.rows() != reference.rows() || actual.cols() != reference.cols()) {
    throw DimensionMismatch("align_global_phase: shape mismatch");
  }
  const Complex overlap = (reference.adjoint() * actual).trace();
  const double phase = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  return {phase, max_abs(actual - std::polar(1.0, phase) * reference)};
}

bool equal_up_to_phase(const CMatrix& actual, const CMatrix& reference, double tolerance) {
  return align_global_phase(actual, reference).deviation < tolerance;
}

}  // namespace bhwalk
