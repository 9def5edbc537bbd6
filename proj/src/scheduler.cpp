// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhwalk/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bhwalk/error.hpp"

namespace bhwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLockedTolerance = 1e-12;

double reduce_angle(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("circuit: non-finite angle");
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

bool same_duration(double a, double b) {
  return std::abs(a - b) <= kLockedTolerance * std::max(std::abs(a), std::abs(b));
}

bool within_limits(const GateSpec& g, const CompileOptions& o) {
  return g.tunneling <= o.max_tunneling && g.potential <= o.max_potential;
}

struct Layer {
  std::vector<std::size_t> indices;
  std::vector<GateSpec> gates;
  std::optional<double> locked;

  double duration_with(const GateSpec* extra) const {
    if (locked) return *locked;
    if (extra && is_interaction_locked(extra->kind)) return extra->duration;
    double t = extra ? extra->duration : 0.0;
    for (const GateSpec& g : gates) t = std::max(t, g.duration);
    return t;
  }

  bool accepts(const GateSpec& spec, const CompileOptions& options) const {
    const bool spec_locked = is_interaction_locked(spec.kind);
    if (spec_locked && locked && !same_duration(*locked, spec.duration)) return false;
    const double t = duration_with(&spec);
    auto fits = [&](const GateSpec& g) {
      return is_interaction_locked(g.kind) || within_limits(rescaled_to(g, t), options);
    };
    if (!fits(spec)) return false;
    return std::all_of(gates.begin(), gates.end(), fits);
  }
};

}  // namespace

bool Circuit::is_coupled(std::size_t a, std::size_t b) const {
  if (!couplings) return (a + 1 == b) || (b + 1 == a);
  return std::any_of(couplings->begin(), couplings->end(), [&](const auto& p) {
    return (p.first == a && p.second == b) || (p.first == b && p.second == a);
  });
}

void Circuit::validate() const {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const CircuitGate& g = gates[i];
    const std::string where = "circuit gate " + std::to_string(i) + ": ";
    const std::size_t arity = is_two_qubit(g.kind) ? 2 : 1;
    if (g.kind != GateKind::Identity && g.targets.size() != arity) {
      throw InvalidArgument(where + "expected " + std::to_string(arity) + " target(s)");
    }
    for (std::size_t q : g.targets) {
      if (q == 0 || q > qubit_count) throw IndexError(where + "target " + std::to_string(q) + " out of range");
    }
    if (arity == 2) {
      if (g.targets[0] == g.targets[1]) throw InvalidArgument(where + "targets must differ");
      if (!is_coupled(g.targets[0], g.targets[1])) {
        throw InvalidArgument(where + "qubits " + std::to_string(g.targets[0]) + " and " +
                              std::to_string(g.targets[1]) + " are not adjacent");
      }
    }
  }
}

double Schedule::total_duration() const {
  double t = 0.0;
  for (const PulseStep& s : steps) t += s.duration;
  return t;
}

std::optional<GateSpec> resolve_gate(const CircuitGate& gate, const CompileOptions& options) {
  const double u = options.interaction;
  switch (gate.kind) {
    case GateKind::Identity:
      return std::nullopt;
    case GateKind::RX: {
      const double theta = reduce_angle(gate.theta);
      if (theta == 0.0) return std::nullopt;
      return rx_gate(gate.targets.at(0), theta, options.default_tunneling);
    }
    case GateKind::RZ: {
      const double theta = reduce_angle(gate.theta);
      if (theta == 0.0) return std::nullopt;
      return rz_gate(gate.targets.at(0), theta, options.default_potential);
    }
    case GateKind::Hadamard:
      return hadamard_gate(gate.targets.at(0), options.default_tunneling);
    case GateKind::CPhase:
      return cphase_gate(QubitPair{gate.targets.at(0), gate.targets.at(1)}, gate.m, gate.k, u,
                         gate.allow_odd_k);
    case GateKind::Swap:
      return swap_gate(QubitPair{gate.targets.at(0), gate.targets.at(1)}, gate.k, gate.l, u);
  }
  return std::nullopt;
}

Schedule compile(const Circuit& circuit, const CompileOptions& options) {
  if (!(options.interaction > 0.0) || !std::isfinite(options.interaction)) {
    throw InvalidArgument("compile: U must be positive and finite");
  }
  circuit.validate();

  std::vector<Layer> layers;
  std::vector<std::size_t> next_free(circuit.qubit_count + 1, 0);

  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const std::optional<GateSpec> spec = resolve_gate(circuit.gates[i], options);
    if (!spec) continue;
    if (!within_limits(*spec, options) && is_interaction_locked(spec->kind)) {
      throw InfeasibleSchedule("compile: " + to_string(spec->kind) + " needs J = " +
                                   std::to_string(spec->tunneling) + " above the tunneling limit",
                               {i});
    }

    std::size_t start = layers.size();
    if (options.policy == SchedulePolicy::GreedyLayer) {
      start = 0;
      for (std::size_t q : spec->targets) start = std::max(start, next_free[q]);
    }
    std::optional<std::size_t> first_rejecting;
    std::size_t placed = start;
    for (;; ++placed) {
      if (placed == layers.size()) {
        layers.emplace_back();
        if (!layers.back().accepts(*spec, options)) {
          std::vector<std::size_t> conflict{i};
          if (first_rejecting) {
            const auto& members = layers[*first_rejecting].indices;
            conflict.insert(conflict.end(), members.begin(), members.end());
          }
          throw InfeasibleSchedule("compile: gate " + std::to_string(i) + " (" + to_string(spec->kind) +
                                       ") cannot meet its parameter limits",
                                   conflict);
        }
      }
      if (layers[placed].accepts(*spec, options)) break;
      if (!first_rejecting) first_rejecting = placed;
    }
    Layer& layer = layers[placed];
    layer.indices.push_back(i);
    layer.gates.push_back(*spec);
    if (is_interaction_locked(spec->kind)) layer.locked = spec->duration;
    for (std::size_t q : spec->targets) next_free[q] = placed + 1;
  }

  Schedule schedule;
  schedule.qubit_count = circuit.qubit_count;
  schedule.interaction = options.interaction;
  for (const Layer& layer : layers) {
    PulseStep step;
    step.duration = layer.duration_with(nullptr);
    step.config = default_config(circuit.qubit_count, options.interaction);
    step.gate_indices = layer.indices;
    for (const GateSpec& g : layer.gates) {
      GateSpec scaled = rescaled_to(g, step.duration);
      scaled.apply_to(step.config);
      step.gates.push_back(std::move(scaled));
    }
    schedule.steps.push_back(std::move(step));
  }
  return schedule;
}

StateVector run(const Schedule& schedule, const StateVector& initial, const StepObserver& observer,
                const EvolveOptions& evolve_options) {
  const FockBasis& basis = initial.basis();
  if (basis.site_count() != 2 * schedule.qubit_count) {
    throw DimensionMismatch("run: state has " + std::to_string(basis.site_count()) + " sites, schedule needs " +
                            std::to_string(2 * schedule.qubit_count));
  }
  StateVector psi = initial;
  for (std::size_t s = 0; s < schedule.steps.size(); ++s) {
    const PulseStep& step = schedule.steps[s];
    psi = evolve(build_hamiltonian(basis, step.config), psi, step.duration, evolve_options);
    if (observer) observer(s, psi);
  }
  return psi;
}

std::vector<SweepPoint> timing_sweep(const GateSpec& gate, const std::vector<double>& fractions) {
  for (double f : fractions) {
    if (!(f > 0.0 && f <= 2.0)) throw InvalidArgument("timing_sweep: fractions must lie in (0, 2]");
  }
  std::vector<SweepPoint> out;
  if (gate.kind == GateKind::Identity || gate.targets.empty()) {
    for (double f : fractions) out.push_back({f, 0.0});
    return out;
  }
  const std::size_t highest = *std::max_element(gate.targets.begin(), gate.targets.end());
  std::vector<std::size_t> mapping(highest, 0);
  for (std::size_t j = 0; j < gate.targets.size(); ++j) mapping[gate.targets[j] - 1] = j + 1;
  const GateSpec local = relabeled(gate, mapping);

  const EncodingMap enc = EncodingMap::for_qubits(local.arity());
  const SparseHermitian h = build_hamiltonian(enc.basis(), local.config(local.arity()));
  for (double f : fractions) {
    const RestrictedOperator r = restrict_evolution(h, f * gate.duration, enc.support());
    out.push_back({f, r.leakage});
  }
  return out;
}

void apply_ideal(CVector& state, std::size_t qubit_count, const CMatrix& gate,
                 const std::vector<std::size_t>& targets) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (static_cast<std::size_t>(state.size()) != dim) throw DimensionMismatch("apply_ideal: register size");
  const std::size_t arity = targets.size();
  if (arity < 1 || arity > 2 || gate.rows() != (Eigen::Index{1} << arity)) {
    throw DimensionMismatch("apply_ideal: gate size does not match target count");
  }
  std::vector<std::size_t> masks;
  for (std::size_t q : targets) {
    if (q == 0 || q > qubit_count) throw IndexError("apply_ideal: target out of range");
    masks.push_back(std::size_t{1} << (qubit_count - q));
  }
  const std::size_t all = arity == 1 ? masks[0] : (masks[0] | masks[1]);
  const std::size_t sub = std::size_t{1} << arity;
  std::vector<std::size_t> idx(sub);
  CVector in(static_cast<Eigen::Index>(sub));
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & all) continue;
    for (std::size_t s = 0; s < sub; ++s) {
      std::size_t i = base;
      for (std::size_t j = 0; j < arity; ++j) {
        if ((s >> (arity - 1 - j)) & 1u) i |= masks[j];
      }
      idx[s] = i;
      in[static_cast<Eigen::Index>(s)] = state[static_cast<Eigen::Index>(i)];
    }
    const CVector outv = gate * in;
    for (std::size_t s = 0; s < sub; ++s) {
      state[static_cast<Eigen::Index>(idx[s])] = outv[static_cast<Eigen::Index>(s)];
    }
  }
}

CVector ideal_state(const Circuit& circuit, const std::string& label) {
  circuit.validate();
  const std::size_t n = circuit.qubit_count;
  if (label.size() != n) throw InvalidArgument("ideal_state: label length must equal qubit count");
  std::size_t value = 0;
  for (char c : label) {
    if (c != '0' && c != '1') throw InvalidArgument("ideal_state: label must be a bit string");
    value = (value << 1) | static_cast<std::size_t>(c - '0');
  }
  CVector state = CVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
  state[static_cast<Eigen::Index>(value)] = 1.0;
  CompileOptions opts;
  for (const CircuitGate& g : circuit.gates) {
    const std::optional<GateSpec> spec = resolve_gate(g, opts);
    if (spec) apply_ideal(state, n, spec->predicted, spec->targets);
  }
  return state;
}

}  // namespace bhwalk
