// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "bhwalk/encoding.hpp"
#include "bhwalk/evolution.hpp"
#include "bhwalk/gates.hpp"
#include "bhwalk/hamiltonian.hpp"

namespace bhwalk {

// An abstract gate as written in a circuit, before U is known.
struct CircuitGate {
  GateKind kind = GateKind::Identity;
  std::vector<std::size_t> targets;
  double theta = 0.0;
  int m = 6;
  int k = 2;
  int l = 5;
  bool allow_odd_k = false;

  static CircuitGate rx(std::size_t q, double theta) { return {GateKind::RX, {q}, theta}; }
  static CircuitGate rz(std::size_t q, double theta) { return {GateKind::RZ, {q}, theta}; }
  static CircuitGate h(std::size_t q) { return {GateKind::Hadamard, {q}}; }
  static CircuitGate cphase(std::size_t a, std::size_t b, int m = 6, int k = 2) {
    CircuitGate g{GateKind::CPhase, {a, b}};
    g.m = m;
    g.k = k;
    return g;
  }
  static CircuitGate swap(std::size_t a, std::size_t b, int k = 1, int l = 5) {
    CircuitGate g{GateKind::Swap, {a, b}};
    g.k = k;
    g.l = l;
    return g;
  }
};

struct Circuit {
  std::size_t qubit_count = 0;
  std::vector<CircuitGate> gates;
  // Allowed two-qubit pairs (unordered). Unset means nearest neighbours (i, i+1).
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> couplings;

  bool is_coupled(std::size_t a, std::size_t b) const;
  // Throws IndexError / InvalidArgument on the first bad gate.
  void validate() const;
};

struct PulseStep {
  GraphConfig config;
  double duration = 0.0;
  std::vector<std::size_t> gate_indices;  // positions in the source circuit
  std::vector<GateSpec> gates;            // resolved, rescaled to `duration`
};

struct Schedule {
  std::size_t qubit_count = 0;
  double interaction = 0.0;
  std::vector<PulseStep> steps;

  double total_duration() const;
};

enum class SchedulePolicy { GreedyLayer, Sequential };

struct CompileOptions {
  double interaction = 1.0;
  SchedulePolicy policy = SchedulePolicy::GreedyLayer;
  // Natural J and V of single-qubit gates before rescaling to a layer.
  double default_tunneling = 1.0;
  double default_potential = 1.0;
  double max_tunneling = std::numeric_limits<double>::infinity();
  double max_potential = std::numeric_limits<double>::infinity();
};

// Resolves one circuit gate against U. Angles are reduced mod 2pi.
// Returns nullopt for gates that compile to nothing (identity, zero angles).
std::optional<GateSpec> resolve_gate(const CircuitGate& gate, const CompileOptions& options);

Schedule compile(const Circuit& circuit, const CompileOptions& options);

using StepObserver = std::function<void(std::size_t step, const StateVector& state)>;

StateVector run(const Schedule& schedule, const StateVector& initial,
                const StepObserver& observer = {}, const EvolveOptions& evolve_options = {});

struct SweepPoint {
  double fraction = 0.0;
  double leakage = 0.0;  // worst computational input
};

// Runs `gate` alone on its own 1- or 2-qubit system for fraction * duration.
std::vector<SweepPoint> timing_sweep(const GateSpec& gate, const std::vector<double>& fractions);

// Ideal 2^n-dimensional output of `circuit` on the computational input `label`,
// using each gate's closed-form matrix (as realized by its pulse, up to a
// global phase per gate).
CVector ideal_state(const Circuit& circuit, const std::string& label);

// Applies a 2x2 (one target) or 4x4 (two targets) matrix to a 2^n register.
void apply_ideal(CVector& state, std::size_t qubit_count, const CMatrix& gate,
                 const std::vector<std::size_t>& targets);

}  // namespace bhwalk
