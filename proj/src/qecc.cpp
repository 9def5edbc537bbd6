// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhwalk/qecc.hpp"

#include <numbers>

#include "bhwalk/error.hpp"

namespace bhwalk {

namespace {

std::size_t region_offset(Region r) { return r == Region::Ancilla ? kSteaneLength : 0; }

}  // namespace

std::string to_string(QeccMode mode) {
  return mode == QeccMode::WithAncilla ? "with-ancilla" : "logical-only";
}

std::string to_string(Region region) { return region == Region::Ancilla ? "ancilla" : "logical"; }

QeccMode parse_qecc_mode(const std::string& text) {
  if (text == "logical-only") return QeccMode::LogicalOnly;
  if (text == "with-ancilla") return QeccMode::WithAncilla;
  throw InvalidArgument("unknown layout mode '" + text + "'");
}

std::string to_string(LogicalGateKind kind) {
  switch (kind) {
    case LogicalGateKind::TransversalX: return "x";
    case LogicalGateKind::TransversalZ: return "z";
    case LogicalGateKind::TransversalHadamard: return "h";
    case LogicalGateKind::AncillaEntangle: return "entangle";
  }
  return "?";
}

LogicalGateKind parse_logical_gate(const std::string& text) {
  if (text == "x") return LogicalGateKind::TransversalX;
  if (text == "z") return LogicalGateKind::TransversalZ;
  if (text == "h") return LogicalGateKind::TransversalHadamard;
  if (text == "entangle") return LogicalGateKind::AncillaEntangle;
  throw InvalidArgument("unsupported logical gate '" + text + "'");
}

QeccLayout::QeccLayout(std::size_t logical_qubits, QeccMode mode) : logical_(logical_qubits), mode_(mode) {
  if (logical_qubits == 0) throw InvalidArgument("QeccLayout: need at least one logical qubit");
  std::vector<Region> regions{Region::Logical};
  if (mode == QeccMode::WithAncilla) regions.push_back(Region::Ancilla);

  for (std::size_t i = 1; i <= logical_qubits; ++i) {
    for (Region r : regions) {
      for (std::size_t c = 1; c <= kSteaneLength; ++c) {
        const std::size_t pq = physical_qubit(i, r, c);
        for (std::size_t x = 0; x < 2; ++x) {
          // Ancilla rows are stacked in reverse so the two |1> rows are adjacent.
          const std::size_t y = r == Region::Logical ? x : 3 - x;
          vertices_.push_back({x, y, c, i, r, pq, 2 * (pq - 1) + x});
        }
      }
    }
  }

  for (std::size_t i = 1; i <= logical_qubits; ++i) {
    for (Region r : regions) {
      for (std::size_t c = 1; c <= kSteaneLength; ++c) {
        edges_.push_back({vertex_index(i, r, c, 0), vertex_index(i, r, c, 1), LayoutEdgeKind::Local});
        if (c < kSteaneLength) {
          for (std::size_t x = 0; x < 2; ++x) {
            edges_.push_back({vertex_index(i, r, c, x), vertex_index(i, r, c + 1, x), LayoutEdgeKind::CodeNeighbor});
          }
        }
      }
    }
    if (mode == QeccMode::WithAncilla) {
      for (std::size_t c = 1; c <= kSteaneLength; ++c) {
        edges_.push_back({vertex_index(i, Region::Logical, c, 1), vertex_index(i, Region::Ancilla, c, 1),
                          LayoutEdgeKind::Entangle});
      }
    }
  }
}

std::size_t QeccLayout::physical_qubit_count() const noexcept { return logical_ * qubits_per_logical(); }

std::vector<LayoutEdge> QeccLayout::edges_of(LayoutEdgeKind kind) const {
  std::vector<LayoutEdge> out;
  for (const LayoutEdge& e : edges_) {
    if (e.kind == kind) out.push_back(e);
  }
  return out;
}

std::size_t QeccLayout::physical_qubit(std::size_t logical, Region region, std::size_t position) const {
  if (logical == 0 || logical > logical_) throw IndexError("QeccLayout: logical index out of range");
  if (position == 0 || position > kSteaneLength) throw IndexError("QeccLayout: code position out of range");
  if (region == Region::Ancilla && mode_ != QeccMode::WithAncilla) {
    throw InvalidArgument("QeccLayout: layout has no ancilla region");
  }
  return (logical - 1) * qubits_per_logical() + region_offset(region) + position;
}

std::size_t QeccLayout::vertex_index(std::size_t logical, Region region, std::size_t position,
                                     std::size_t row) const {
  if (row > 1) throw IndexError("QeccLayout: row must be 0 or 1");
  return 2 * (physical_qubit(logical, region, position) - 1) + row;
}

std::vector<std::pair<std::size_t, std::size_t>> QeccLayout::couplings() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const LayoutEdge& e : edges_) {
    if (e.kind == LayoutEdgeKind::Local) continue;
    const std::size_t a = vertices_[e.u].physical_qubit;
    const std::size_t b = vertices_[e.v].physical_qubit;
    // CodeNeighbor edges come in row pairs; keep one coupling per qubit pair.
    if (e.kind == LayoutEdgeKind::CodeNeighbor && vertices_[e.u].row == 1) continue;
    out.emplace_back(a, b);
  }
  return out;
}

QeccLayout build_layout(std::size_t logical_qubits, QeccMode mode) { return QeccLayout(logical_qubits, mode); }

Circuit physical_circuit(const QeccLayout& layout, const LogicalGate& gate) {
  Circuit circuit;
  circuit.qubit_count = layout.physical_qubit_count();
  circuit.couplings = layout.couplings();
  auto each_position = [&](auto&& make) {
    for (std::size_t c = 1; c <= kSteaneLength; ++c) {
      circuit.gates.push_back(make(layout.physical_qubit(gate.logical, Region::Logical, c)));
    }
  };
  switch (gate.kind) {
    case LogicalGateKind::TransversalX:
      each_position([](std::size_t q) { return CircuitGate::rx(q, std::numbers::pi); });
      break;
    case LogicalGateKind::TransversalZ:
      each_position([](std::size_t q) { return CircuitGate::rz(q, std::numbers::pi); });
      break;
    case LogicalGateKind::TransversalHadamard:
      each_position([](std::size_t q) { return CircuitGate::h(q); });
      break;
    case LogicalGateKind::AncillaEntangle: {
      if (layout.mode() != QeccMode::WithAncilla) {
        throw InvalidArgument("physical_circuit: entangling with the ancilla needs a with-ancilla layout");
      }
      circuit.gates.push_back(CircuitGate::cphase(layout.physical_qubit(gate.logical, Region::Logical, gate.position),
                                                  layout.physical_qubit(gate.logical, Region::Ancilla, gate.position),
                                                  gate.m, gate.k));
      break;
    }
  }
  circuit.validate();
  return circuit;
}

const std::array<std::array<std::size_t, 4>, 3>& steane_supports() {
  static const std::array<std::array<std::size_t, 4>, 3> supports{{{4, 5, 6, 7}, {2, 3, 6, 7}, {1, 3, 5, 7}}};
  return supports;
}

SyndromeCircuit syndrome_circuit(const QeccLayout& layout, std::size_t logical) {
  if (layout.mode() != QeccMode::WithAncilla) {
    throw InvalidArgument("syndrome_circuit: needs a with-ancilla layout");
  }
  SyndromeCircuit out;
  Circuit& circuit = out.circuit;
  circuit.qubit_count = layout.physical_qubit_count();
  circuit.couplings = layout.couplings();
  auto data = [&](std::size_t c) { return layout.physical_qubit(logical, Region::Logical, c); };
  auto anc = [&](std::size_t c) { return layout.physical_qubit(logical, Region::Ancilla, c); };
  auto& gates = circuit.gates;

  std::size_t ancilla = 1;
  for (char type : {'X', 'Z'}) {
    for (const auto& support : steane_supports()) {
      StabilizerRecord rec{type, support, ancilla, gates.size(), 0};
      std::size_t at = ancilla;
      auto move_to = [&](std::size_t target) {
        for (; at < target; ++at) gates.push_back(CircuitGate::swap(anc(at), anc(at + 1)));
        for (; at > target; --at) gates.push_back(CircuitGate::swap(anc(at - 1), anc(at)));
      };
      gates.push_back(CircuitGate::h(anc(ancilla)));
      for (std::size_t c : support) {
        move_to(c);
        if (type == 'X') gates.push_back(CircuitGate::h(data(c)));
        gates.push_back(CircuitGate::cphase(data(c), anc(c)));
        if (type == 'X') gates.push_back(CircuitGate::h(data(c)));
      }
      move_to(ancilla);
      gates.push_back(CircuitGate::h(anc(ancilla)));
      rec.end_gate = gates.size();
      out.stabilizers.push_back(rec);
      ++ancilla;
    }
  }
  circuit.validate();
  return out;
}

}  // namespace bhwalk
