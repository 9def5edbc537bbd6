// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bhwalk/scheduler.hpp"

namespace bhwalk {

// Steane-code layout: each logical qubit i owns seven physical qubits (code
// positions c = 1..7), each a two-site column. With ancillas, a second block
// of seven columns sits next to the first with its |0>/|1> rows swapped, so
// the two |1> rows face each other.

enum class QeccMode { LogicalOnly, WithAncilla };
enum class Region { Logical, Ancilla };

std::string to_string(QeccMode mode);
std::string to_string(Region region);
QeccMode parse_qecc_mode(const std::string& text);

inline constexpr std::size_t kSteaneLength = 7;

struct QeccVertex {
  std::size_t row;             // x: 0 for the |0> site, 1 for the |1> site
  std::size_t layer;           // y: 0..1 logical, 2..3 ancilla
  std::size_t position;        // c: 1..7
  std::size_t logical;         // i: 1..n
  Region region;
  std::size_t physical_qubit;  // 1-based column in the simulated lattice
  std::size_t flat;            // Fock site index 2*(physical_qubit-1) + row
};

enum class LayoutEdgeKind { Local, CodeNeighbor, Entangle };

struct LayoutEdge {
  std::size_t u;  // vertex indices, u < v
  std::size_t v;
  LayoutEdgeKind kind;
};

class QeccLayout {
 public:
  QeccLayout(std::size_t logical_qubits, QeccMode mode);

  std::size_t logical_qubit_count() const noexcept { return logical_; }
  QeccMode mode() const noexcept { return mode_; }
  std::size_t physical_qubit_count() const noexcept;
  std::size_t qubits_per_logical() const noexcept { return mode_ == QeccMode::WithAncilla ? 14 : 7; }

  const std::vector<QeccVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<LayoutEdge>& edges() const noexcept { return edges_; }
  std::vector<LayoutEdge> edges_of(LayoutEdgeKind kind) const;

  std::size_t physical_qubit(std::size_t logical, Region region, std::size_t position) const;
  std::size_t vertex_index(std::size_t logical, Region region, std::size_t position, std::size_t row) const;

  /// Qubit pairs on which two-qubit gates may act.
  std::vector<std::pair<std::size_t, std::size_t>> couplings() const;

 private:
  std::size_t logical_;
  QeccMode mode_;
  std::vector<QeccVertex> vertices_;
  std::vector<LayoutEdge> edges_;
};

QeccLayout build_layout(std::size_t logical_qubits, QeccMode mode);

enum class LogicalGateKind { TransversalX, TransversalZ, TransversalHadamard, AncillaEntangle };

std::string to_string(LogicalGateKind kind);
LogicalGateKind parse_logical_gate(const std::string& text);

struct LogicalGate {
  LogicalGateKind kind = LogicalGateKind::TransversalX;
  std::size_t logical = 1;
  std::size_t position = 1;  // AncillaEntangle only
  int m = 6;
  int k = 2;
};

Circuit physical_circuit(const QeccLayout& layout, const LogicalGate& gate);

struct StabilizerRecord {
  char type;                             // 'X' or 'Z'
  std::array<std::size_t, 4> support;    // code positions
  std::size_t ancilla_position;          // 1..6
  std::size_t first_gate;                // [first_gate, end_gate) in the circuit
  std::size_t end_gate;
};

struct SyndromeCircuit {
  Circuit circuit;
  std::vector<StabilizerRecord> stabilizers;
};

/// Standard Steane generators measured one at a time through CPHASE
/// couplings, moving each ancilla along the ancilla row with SWAPs. Only the
/// shape (supports, gate counts, couplings) is meaningful.
SyndromeCircuit syndrome_circuit(const QeccLayout& layout, std::size_t logical);

/// Supports of the three Steane generators (identical for X and Z type).
const std::array<std::array<std::size_t, 4>, 3>& steane_supports();

}  // namespace bhwalk
