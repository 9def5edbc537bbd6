// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hamiltonian.hpp
 * @brief Piecewise-constant lattice configurations and their Bose-Hubbard
 *        matrices.
 *
 * A GraphConfig fixes the primary graph for one time segment. Its matrix on a
 * FockBasis is
 *
 *   H = -sum_edges J (c^dag_a c_b + h.c.) - sum_i V_i n_i + sum_i U_i/2 n_i (n_i - 1)
 *
 * with hbar = 1. Potentials enter with a minus sign: a positive V_i lowers the
 * energy of site i.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "bhwalk/fock.hpp"

namespace bhwalk {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Undirected tunneling link between two distinct sites.
struct Edge {
  VertexId a;
  VertexId b;
  double tunneling = 0.0;

  bool operator==(const Edge&) const = default;
};

class GraphConfig {
 public:
  GraphConfig() = default;
  GraphConfig(std::size_t site_count, double interaction);

  std::size_t site_count() const noexcept { return potentials_.size(); }

  /// Adds an edge. Throws on self-loops, duplicate unordered pairs,
  /// out-of-range sites or non-finite amplitudes.
  GraphConfig& add_edge(VertexId a, VertexId b, double tunneling);
  /// Sets V_i (overwrites). Throws on out-of-range site or non-finite value.
  GraphConfig& set_potential(VertexId site, double potential);
  GraphConfig& set_interaction(double interaction);
  /// Opt-in per-site U_i; must have one finite entry per site.
  GraphConfig& set_site_interactions(std::vector<double> interactions);
  GraphConfig& clear_site_interactions();

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<double>& potentials() const noexcept { return potentials_; }
  double potential(VertexId site) const;
  double interaction() const noexcept { return interaction_; }
  const std::optional<std::vector<double>>& site_interactions() const noexcept {
    return site_interactions_;
  }
  /// U_i for a site, honoring the per-site override.
  double interaction_on(VertexId site) const;

  /// Sites touched by an edge or carrying a non-zero potential, ascending.
  std::vector<std::size_t> support() const;

  bool operator==(const GraphConfig&) const = default;

 private:
  std::vector<Edge> edges_;
  std::vector<double> potentials_;
  double interaction_ = 0.0;
  std::optional<std::vector<double>> site_interactions_;
};

/// H0: 2n isolated sites, no potentials, global interaction U.
GraphConfig default_config(std::size_t qubit_count, double interaction);

/**
 * Sparse Hermitian matrix stored as sorted, deduplicated (row, col, value)
 * triplets. Both triangles are stored explicitly.
 */
class SparseHermitian {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Complex value;
  };

  SparseHermitian() = default;
  /// Sorts `entries`, sums duplicates, drops exact zeros and verifies
  /// Hermiticity to `tolerance`. Throws InvalidArgument if not Hermitian.
  SparseHermitian(std::size_t dimension, std::vector<Entry> entries, double tolerance = 1e-12);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }

  Complex entry(std::size_t row, std::size_t col) const;
  /// True when every stored value has zero imaginary part.
  bool is_real() const noexcept;
  bool is_hermitian(double tolerance = 0.0) const;

  CVector multiply(const CVector& x) const;
  CMatrix to_dense() const;
  /// Largest absolute row sum; an upper bound on the spectral radius.
  double norm_inf() const;

 private:
  std::size_t dimension_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::size_t> row_begin_;
};

/// Assembles the Bose-Hubbard matrix of `config` on `basis`.
/// Throws DimensionMismatch if the site counts differ.
SparseHermitian build_hamiltonian(const FockBasis& basis, const GraphConfig& config);

}  // namespace bhwalk
