// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file secondary_graph.hpp
 * @brief The single-walker graph on Fock states induced by one configuration.
 *
 * Vertices are basis states; an edge joins two states with a non-zero
 * Hamiltonian entry and carries that entry as its weight; the diagonal is
 * kept as self-loop weights. The weighted adjacency matrix is therefore the
 * Hamiltonian itself.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bhwalk/encoding.hpp"
#include "bhwalk/fock.hpp"
#include "bhwalk/hamiltonian.hpp"

namespace bhwalk {

struct GraphEdge {
  std::size_t a;  // a < b
  std::size_t b;
  double weight;

  bool operator==(const GraphEdge&) const = default;
};

class SecondaryGraph {
 public:
  SecondaryGraph(std::vector<FockState> states, std::vector<GraphEdge> edges, std::vector<double> self_loops,
                 std::vector<char> computational);

  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<FockState>& states() const noexcept { return states_; }
  std::string label(std::size_t v) const { return states_.at(v).to_string(); }
  /// Sorted by (a, b).
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  double self_loop(std::size_t v) const { return self_loops_.at(v); }
  bool has_self_loop(std::size_t v) const { return self_loop(v) != 0.0; }
  std::size_t self_loop_count() const;
  bool is_computational(std::size_t v) const { return computational_.at(v) != 0; }
  std::size_t computational_count() const;

  /// Connected components by edges (self-loops ignored); each sorted, ordered
  /// by smallest member.
  std::vector<std::vector<std::size_t>> components() const;
  /// Vertices connected to at least one computational vertex.
  std::vector<std::size_t> reachable_from_computational() const;
  /// Induced subgraph on reachable_from_computational(), reindexed in order.
  SecondaryGraph pruned() const;

  /// Dense weighted adjacency matrix including the diagonal.
  CMatrix adjacency_matrix() const;

 private:
  std::vector<FockState> states_;
  std::vector<GraphEdge> edges_;
  std::vector<double> self_loops_;
  std::vector<char> computational_;
};

/// Marks states with exactly one boson per two-site column as computational.
SecondaryGraph build_secondary(const FockBasis& basis, const GraphConfig& config);
/// Same, checking that `encoding` describes `basis`; marks its support.
SecondaryGraph build_secondary(const FockBasis& basis, const GraphConfig& config, const EncodingMap& encoding);

struct ProductCheck {
  bool holds = false;
  std::string reason;
  /// For each (i_a, i_b) in row-major order, the matching vertex of the total graph.
  std::vector<std::size_t> mapping;
};

/**
 * Tests whether `total` contains the Cartesian product of `a` and `b`. The
 * bijection concatenates Fock labels (sites of `a` first). Only the sector of
 * `total` with the factor particle counts is compared; that sector must have
 * no edges leaving it. Throws DimensionMismatch when site counts do not add
 * up or `total` is too small to hold the product.
 */
ProductCheck cartesian_product_check(const SecondaryGraph& total, const SecondaryGraph& a, const SecondaryGraph& b);

struct ExportOptions {
  bool prune = false;
};

std::string export_dot(const SecondaryGraph& graph, const ExportOptions& options = {});
std::string export_json(const SecondaryGraph& graph, const ExportOptions& options = {});

}  // namespace bhwalk
