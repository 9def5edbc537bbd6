// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhwalk/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bhwalk/error.hpp"
#include "bhwalk/evolution.hpp"

namespace bhwalk {

namespace {

using std::numbers::pi;
constexpr double kTwoPi = 2.0 * pi;
const Complex kI(0.0, 1.0);

void require_qubit(std::size_t qubit) {
  if (qubit == 0) throw IndexError("gate: qubits are 1-based");
}

void require_angle(double theta, const char* gate) {
  if (!std::isfinite(theta) || theta < 0.0 || theta >= kTwoPi) {
    throw InvalidArgument(std::string(gate) + ": theta must lie in [0, 2pi)");
  }
}

void require_positive(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) throw InvalidArgument(std::string(what) + " must be > 0");
}

void require_pair(QubitPair q) {
  require_qubit(q.first);
  require_qubit(q.second);
  if (q.first == q.second) throw InvalidArgument("two-qubit gate: targets must differ");
}

double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod can round a value just below 2pi up to 2pi after the shift.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

bool is_near_integer(double x, double tol = 1e-9) { return std::abs(x - std::round(x)) < tol; }

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RZ: return "rz";
    case GateKind::Hadamard: return "h";
    case GateKind::CPhase: return "cphase";
    case GateKind::Swap: return "swap";
    case GateKind::Identity: return "id";
  }
  return "?";
}

std::string to_string(SwapClass cls) {
  switch (cls) {
    case SwapClass::MinusSwap: return "-SWAP";
    case SwapClass::ZZSwap: return "ZZ-SWAP";
    case SwapClass::Entangling: return "entangling";
  }
  return "?";
}

GateKind parse_gate_kind(const std::string& name) {
  if (name == "rx") return GateKind::RX;
  if (name == "rz") return GateKind::RZ;
  if (name == "h" || name == "hadamard") return GateKind::Hadamard;
  if (name == "cphase" || name == "cp") return GateKind::CPhase;
  if (name == "swap") return GateKind::Swap;
  if (name == "id" || name == "identity") return GateKind::Identity;
  throw InvalidArgument("unknown gate kind '" + name + "'");
}

std::vector<Edge> GateSpec::edges() const {
  std::vector<Edge> out;
  switch (kind) {
    case GateKind::RX:
    case GateKind::Hadamard:
      out.push_back({VertexId::at(targets[0], 0), VertexId::at(targets[0], 1), tunneling});
      break;
    case GateKind::CPhase:
      out.push_back({VertexId::at(targets[0], 1), VertexId::at(targets[1], 1), tunneling});
      break;
    case GateKind::Swap:
      out.push_back({VertexId::at(targets[0], 0), VertexId::at(targets[1], 0), tunneling});
      out.push_back({VertexId::at(targets[0], 1), VertexId::at(targets[1], 1), tunneling});
      break;
    case GateKind::RZ:
    case GateKind::Identity:
      break;
  }
  return out;
}

std::vector<std::pair<VertexId, double>> GateSpec::potentials() const {
  switch (kind) {
    case GateKind::RZ: return {{VertexId::at(targets[0], 1), potential}};
    case GateKind::Hadamard: return {{VertexId::at(targets[0], 0), potential}};
    default: return {};
  }
}

void GateSpec::apply_to(GraphConfig& config) const {
  for (const Edge& e : edges()) config.add_edge(e.a, e.b, e.tunneling);
  for (const auto& [site, v] : potentials()) {
    if (config.potential(site) != 0.0) {
      throw InvalidArgument("GateSpec::apply_to: potential on site " + std::to_string(site.index()) +
                            " already set");
    }
    config.set_potential(site, v);
  }
}

GraphConfig GateSpec::config(std::size_t qubit_count) const {
  for (std::size_t q : targets) {
    if (q > qubit_count) throw IndexError("GateSpec::config: target beyond qubit count");
  }
  GraphConfig cfg = default_config(qubit_count, interaction);
  apply_to(cfg);
  return cfg;
}

CMatrix rx_matrix(double theta) {
  CMatrix m(2, 2);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  m << c, -kI * s, -kI * s, c;
  return m;
}

CMatrix rz_phase_matrix(double theta) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = std::polar(1.0, theta);
  return m;
}

CMatrix hadamard_matrix() {
  CMatrix m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

CMatrix cphase_matrix(double phase) {
  CMatrix m = CMatrix::Identity(4, 4);
  m(3, 3) = std::polar(1.0, phase);
  return m;
}

CMatrix swap_matrix() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

CMatrix swap_pulse_matrix(double alpha) {
  CMatrix m = CMatrix::Zero(4, 4);
  const Complex diag = std::polar(1.0, -alpha * pi);
  m(0, 0) = diag;
  m(1, 2) = -1.0;
  m(2, 1) = -1.0;
  m(3, 3) = diag;
  return m;
}

CMatrix pauli_z() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

double wrap_phase(double angle) {
  double r = std::remainder(angle, kTwoPi);
  if (r <= -pi) r += kTwoPi;
  return r;
}

GateSpec rx_gate(std::size_t qubit, double theta, double tunneling) {
  require_qubit(qubit);
  require_angle(theta, "rx_gate");
  require_positive(tunneling, "rx_gate: J");
  GateSpec g;
  g.kind = GateKind::RX;
  g.targets = {qubit};
  g.theta = theta;
  g.tunneling = tunneling;
  g.duration = (4.0 * pi - theta) / (2.0 * tunneling);
  g.predicted = rx_matrix(theta);
  return g;
}

GateSpec rz_gate(std::size_t qubit, double theta, double potential) {
  require_qubit(qubit);
  require_angle(theta, "rz_gate");
  require_positive(potential, "rz_gate: V");
  GateSpec g;
  g.kind = GateKind::RZ;
  g.targets = {qubit};
  g.theta = theta;
  g.potential = potential;
  g.duration = theta / potential;
  g.predicted = rz_phase_matrix(theta);
  return g;
}

GateSpec hadamard_gate(std::size_t qubit, double tunneling) {
  require_qubit(qubit);
  require_positive(tunneling, "hadamard_gate: J");
  GateSpec g;
  g.kind = GateKind::Hadamard;
  g.targets = {qubit};
  g.tunneling = tunneling;
  g.potential = 2.0 * tunneling;
  g.duration = pi / (2.0 * std::sqrt(2.0) * tunneling);
  g.predicted = hadamard_matrix();
  // exp(iJt(I + X + Z)) at sqrt(2) J t = pi/2 equals e^{iJt} * i * H.
  g.global_phase = wrap_phase(tunneling * g.duration + pi / 2.0);
  return g;
}

EulerAngles euler_xzx_angles(const CMatrix& target) {
  if (target.rows() != 2 || target.cols() != 2) throw DimensionMismatch("euler: expected 2x2 matrix");
  if (max_abs(target.adjoint() * target - CMatrix::Identity(2, 2)) > 1e-12) {
    throw InvalidArgument("euler: target is not unitary");
  }
  // Conjugating by H maps X-Z-X onto Z-X-Z. Solve W = H U H = R_Z(a) R_X(b) R_Z(c)
  // after projecting W into SU(2).
  const CMatrix h = hadamard_matrix();
  CMatrix w = h * target * h;
  const Complex det = w.determinant();
  w /= std::sqrt(det);
  const Complex alpha = w(0, 0);
  const Complex beta = w(1, 0);
  const double b = 2.0 * std::atan2(std::abs(beta), std::abs(alpha));
  double sum = 0.0;   // a + c
  double diff = 0.0;  // a - c
  if (std::abs(alpha) > 1e-14) sum = -2.0 * std::arg(alpha);
  if (std::abs(beta) > 1e-14) diff = 2.0 * (std::arg(beta) + pi / 2.0);
  if (std::abs(alpha) <= 1e-14) sum = diff;  // only a - c is determined; pick c = 0
  if (std::abs(beta) <= 1e-14) diff = sum;
  const double a = 0.5 * (sum + diff);
  const double c = 0.5 * (sum - diff);
  return {normalize_angle(a), normalize_angle(b), normalize_angle(c)};
}

std::vector<GateSpec> euler_single_qubit(std::size_t qubit, const CMatrix& target, double tunneling,
                                         double potential) {
  const EulerAngles e = euler_xzx_angles(target);
  return {rx_gate(qubit, e.last, tunneling), rz_gate(qubit, e.middle, potential),
          rx_gate(qubit, e.first, tunneling)};
}

double cphase_phase(int m) {
  const double md = m;
  return -pi * (md + std::sqrt(md * md - 16.0));
}

GateSpec cphase_gate(QubitPair qubits, int m, int k, double interaction, bool allow_odd_k) {
  require_pair(qubits);
  if (m < 4) throw InvalidArgument("cphase_gate: m must be >= 4");
  if (m == 4) {
    throw InvalidArgument("cphase_gate: trivial/degenerate m = 4 (requires U = 0, phase is trivial)");
  }
  if (k < 1) throw InvalidArgument("cphase_gate: k must be a positive integer");
  if (k % 2 != 0) {
    if (!allow_odd_k) throw InvalidArgument("cphase_gate: odd k changes the realized gate; enable odd k explicitly");
    if (m % 2 != 0) throw InvalidArgument("cphase_gate: m*k must be even");
  }
  require_positive(interaction, "cphase_gate: U");

  const double md = m;
  GateSpec g;
  g.kind = GateKind::CPhase;
  g.targets = {qubits.first, qubits.second};
  g.m = m;
  g.k = k;
  g.interaction = interaction;
  g.tunneling = interaction / std::sqrt(md * md - 16.0);
  g.duration = k * pi / g.tunneling;
  g.entangling_phase = wrap_phase(0.5 * k * cphase_phase(m));
  g.trivial_phase = std::abs(std::polar(1.0, g.entangling_phase) - 1.0) < 1e-9;
  g.predicted = cphase_matrix(g.entangling_phase);
  if (k % 2 != 0) {
    g.predicted(1, 1) = -1.0;
    g.predicted(2, 2) = -1.0;
  }
  return g;
}

GateSpec cphase_gate(std::size_t qubit, int m, int k, double interaction, bool allow_odd_k) {
  return cphase_gate(QubitPair{qubit, qubit + 1}, m, k, interaction, allow_odd_k);
}

GateSpec swap_gate(QubitPair qubits, int k, int l, double interaction) {
  require_pair(qubits);
  if (k < 0) throw InvalidArgument("swap_gate: k must be non-negative");
  if (l <= 2 * k + 1) throw InvalidArgument("swap_gate: l must exceed 2k+1");
  require_positive(interaction, "swap_gate: U");

  const double odd = 2.0 * k + 1.0;
  const double ld = l;
  GateSpec g;
  g.kind = GateKind::Swap;
  g.targets = {qubits.first, qubits.second};
  g.k = k;
  g.l = l;
  g.interaction = interaction;
  g.tunneling = interaction / (4.0 * std::sqrt(ld * ld / (odd * odd) - 1.0));
  g.duration = odd * pi / (2.0 * g.tunneling);
  g.alpha = ld + std::sqrt(ld * ld - 4.0 * k * (k + 1.0) - 1.0);
  g.entangling_phase = wrap_phase(-g.alpha * pi);
  if (is_near_integer(g.alpha)) {
    const auto a = static_cast<long long>(std::llround(g.alpha));
    g.swap_class = (a % 2 == 0) ? SwapClass::ZZSwap : SwapClass::MinusSwap;
  } else {
    g.swap_class = SwapClass::Entangling;
  }
  g.predicted = swap_pulse_matrix(g.alpha);
  return g;
}

GateSpec swap_gate(std::size_t qubit, int k, int l, double interaction) {
  return swap_gate(QubitPair{qubit, qubit + 1}, k, l, interaction);
}

GateSpec rescaled_to(const GateSpec& gate, double duration) {
  require_positive(duration, "rescaled_to: duration");
  GateSpec g = gate;
  switch (gate.kind) {
    case GateKind::RX:
      g.tunneling = (4.0 * pi - gate.theta) / (2.0 * duration);
      break;
    case GateKind::RZ:
      if (gate.theta == 0.0) throw InvalidArgument("rescaled_to: RZ(0) has no pulse to stretch");
      g.potential = gate.theta / duration;
      break;
    case GateKind::Hadamard:
      g.tunneling = pi / (2.0 * std::sqrt(2.0) * duration);
      g.potential = 2.0 * g.tunneling;
      g.global_phase = wrap_phase(g.tunneling * duration + pi / 2.0);
      break;
    case GateKind::CPhase:
    case GateKind::Swap:
      if (std::abs(duration - gate.duration) > 1e-12 * std::max(duration, gate.duration)) {
        throw InvalidArgument("rescaled_to: " + to_string(gate.kind) +
                              " duration is fixed by U and cannot be stretched");
      }
      break;
    case GateKind::Identity:
      break;
  }
  g.duration = duration;
  return g;
}

GateSpec relabeled(const GateSpec& gate, const std::vector<std::size_t>& mapping) {
  GateSpec g = gate;
  for (std::size_t& q : g.targets) {
    if (q == 0 || q > mapping.size()) throw IndexError("relabeled: qubit outside mapping");
    q = mapping[q - 1];
  }
  return g;
}

}  // namespace bhwalk
