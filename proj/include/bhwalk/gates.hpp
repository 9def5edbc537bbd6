// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gates.hpp
 * @brief Pulse recipes (graph configuration + duration) for the logical gate
 *        set, with analytically predicted computational-subspace matrices.
 *
 * Qubits are 1-based. Two-qubit gates act on an ordered pair (first, second);
 * their 4x4 matrices use the basis |00>, |01>, |10>, |11> with `first` as the
 * left bit. Gates that depend on the interaction U take it as given and solve
 * for the tunneling J.
 *
 * Conventions: R_X(theta) = exp(-i theta X / 2); the Z pulse realizes
 * diag(1, e^{i theta}) = e^{i theta/2} R_Z(theta).
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bhwalk/hamiltonian.hpp"

namespace bhwalk {

enum class GateKind { RX, RZ, Hadamard, CPhase, Swap, Identity };

/// Character of the computational block realized by the SWAP pulse.
enum class SwapClass { MinusSwap, ZZSwap, Entangling };

std::string to_string(GateKind kind);
std::string to_string(SwapClass cls);
/// Parses "rx", "rz", "h"/"hadamard", "cphase", "swap", "id"/"identity".
GateKind parse_gate_kind(const std::string& name);

inline bool is_two_qubit(GateKind kind) { return kind == GateKind::CPhase || kind == GateKind::Swap; }
/// Gates whose duration is pinned once U is fixed.
inline bool is_interaction_locked(GateKind kind) { return is_two_qubit(kind); }

struct QubitPair {
  std::size_t first;
  std::size_t second;
};

/// A resolved pulse: which links and potentials to switch on, for how long,
/// and what it does to the encoded qubits.
struct GateSpec {
  GateKind kind = GateKind::Identity;
  std::vector<std::size_t> targets;

  double theta = 0.0;  // RX, RZ
  int m = 0;           // CPHASE
  int k = 0;           // CPHASE, SWAP
  int l = 0;           // SWAP

  double tunneling = 0.0;
  double potential = 0.0;
  double interaction = 0.0;
  double duration = 0.0;

  /// Simulated block = exp(i * global_phase) * predicted.
  double global_phase = 0.0;
  CMatrix predicted;

  /// CPHASE: phase on |11> (after removing the local Z(x)Z for odd k).
  double entangling_phase = 0.0;
  /// CPHASE whose entangling phase is a multiple of 2 pi.
  bool trivial_phase = false;
  /// SWAP only.
  double alpha = 0.0;
  std::optional<SwapClass> swap_class;

  std::vector<Edge> edges() const;
  /// (site, V) pairs; potentials enter the Hamiltonian as -V n.
  std::vector<std::pair<VertexId, double>> potentials() const;
  /// Adds this gate's links and potentials to `config`.
  void apply_to(GraphConfig& config) const;
  /// H0 on `qubit_count` qubits (with U = interaction) plus this gate.
  GraphConfig config(std::size_t qubit_count) const;
  /// Number of qubits the gate acts on.
  std::size_t arity() const noexcept { return targets.size(); }
};

/// R_X(theta) for theta in [0, 2 pi): link (i,0)-(i,1) with amplitude J for
/// t = (4 pi - theta) / (2 J).
GateSpec rx_gate(std::size_t qubit, double theta, double tunneling);

/// diag(1, e^{i theta}) for theta in [0, 2 pi): potential V on (i,1) for t = theta / V.
GateSpec rz_gate(std::size_t qubit, double theta, double potential);

/// Single-pulse Hadamard: link J on (i,0)-(i,1) and potential 2J on (i,0) for
/// t = pi / (2 sqrt(2) J). Realized up to a global phase.
GateSpec hadamard_gate(std::size_t qubit, double tunneling);

/// Euler angles (a, b, c) with target ~ R_X(a) diag(1, e^{ib}) R_X(c), each in [0, 2 pi).
struct EulerAngles {
  double first;   // a, applied last
  double middle;  // b
  double last;    // c, applied first
};
EulerAngles euler_xzx_angles(const CMatrix& target);

/// Three pulses, in time order R_X(c), R_Z(b), R_X(a), whose product equals
/// `target` up to global phase.
std::vector<GateSpec> euler_single_qubit(std::size_t qubit, const CMatrix& target, double tunneling,
                                         double potential);

/// Phase on |11> of the k = 2 CPHASE pulse: -pi (m + sqrt(m^2 - 16)).
double cphase_phase(int m);

/**
 * CPHASE pulse: link (first,1)-(second,1) with U/J = sqrt(m^2 - 16), held for
 * k pi / J. The realized block is
 *   diag(1, (-1)^k, (-1)^k, exp(i k phi_m / 2)),
 * which is CPHASE(phi_m) for k = 2 and (Z x Z) CPHASE(phi_m / 2) for k = 1.
 * Requires m > 4, k >= 1 and m*k even; odd k additionally requires
 * `allow_odd_k`.
 */
GateSpec cphase_gate(QubitPair qubits, int m, int k, double interaction, bool allow_odd_k = false);
GateSpec cphase_gate(std::size_t qubit, int m, int k, double interaction, bool allow_odd_k = false);

/// SWAP pulse: links (first,x)-(second,x) for x = 0, 1 with
/// U/J = 4 sqrt(l^2/(2k+1)^2 - 1), held for (2k+1) pi / (2J). Requires l > 2k+1.
GateSpec swap_gate(QubitPair qubits, int k, int l, double interaction);
GateSpec swap_gate(std::size_t qubit, int k, int l, double interaction);

/// Same gate driven over a new duration. Single-qubit gates rescale J (or V),
/// keeping the Hadamard ratio V/J = 2. Interaction-locked gates throw
/// InvalidArgument unless `duration` matches their own to 1e-12 relative.
GateSpec rescaled_to(const GateSpec& gate, double duration);

/// Copy of the gate acting on other qubits; `mapping[q-1]` is the new index of qubit q.
GateSpec relabeled(const GateSpec& gate, const std::vector<std::size_t>& mapping);

// Closed-form reference matrices.
CMatrix rx_matrix(double theta);
CMatrix rz_phase_matrix(double theta);  // diag(1, e^{i theta})
CMatrix hadamard_matrix();
CMatrix cphase_matrix(double phase);
CMatrix swap_matrix();
CMatrix swap_pulse_matrix(double alpha);
CMatrix pauli_z();

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

}  // namespace bhwalk
