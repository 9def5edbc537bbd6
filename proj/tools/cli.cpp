// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "bhwalk/encoding.hpp"
#include "bhwalk/error.hpp"
#include "bhwalk/evolution.hpp"
#include "bhwalk/gates.hpp"
#include "bhwalk/measurement.hpp"
#include "bhwalk/qecc.hpp"
#include "bhwalk/scheduler.hpp"
#include "bhwalk/secondary_graph.hpp"
#include "bhwalk/serialization.hpp"

namespace bhwalk::cli {

namespace {

// Amplitudes below this magnitude are left out of run reports.
constexpr double kReportFloor = 1e-12;

struct GateArgs {
  std::string kind;
  std::optional<double> theta;
  double tunneling = 1.0;
  double potential = 1.0;
  int m = 6;
  std::optional<int> k;
  int l = 5;
  bool allow_odd_k = false;

  void attach(CLI::App* cmd, bool positional) {
    const std::vector<std::string> kinds{"rx", "rz", "h", "hadamard", "cphase", "swap"};
    if (positional) {
      cmd->add_option("gate", kind, "Gate kind")->required()->check(CLI::IsMember(kinds));
    } else {
      cmd->add_option("--gate", kind, "Gate kind")->check(CLI::IsMember(kinds));
    }
    cmd->add_option("--theta", theta, "Rotation angle in [0, 2pi) for rx/rz");
    cmd->add_option("--j", tunneling, "Tunneling J for rx/h")->capture_default_str();
    cmd->add_option("--v", potential, "Potential V for rz")->capture_default_str();
    cmd->add_option("--m", m, "CPHASE ratio index m")->capture_default_str();
    cmd->add_option("--k", k, "CPHASE/SWAP time index k (defaults 2 and 1)");
    cmd->add_option("--l", l, "SWAP ratio index l")->capture_default_str();
    cmd->add_flag("--allow-odd-k", allow_odd_k, "Accept odd k for CPHASE");
  }

  GateSpec build(double interaction) const {
    switch (parse_gate_kind(kind)) {
      case GateKind::RX:
        if (!theta) throw InvalidArgument("rx needs --theta");
        return rx_gate(1, *theta, tunneling);
      case GateKind::RZ:
        if (!theta) throw InvalidArgument("rz needs --theta");
        return rz_gate(1, *theta, potential);
      case GateKind::Hadamard:
        return hadamard_gate(1, tunneling);
      case GateKind::CPhase:
        return cphase_gate(1, m, k.value_or(2), interaction, allow_odd_k);
      case GateKind::Swap:
        return swap_gate(1, k.value_or(1), l, interaction);
      case GateKind::Identity:
        break;
    }
    throw InvalidArgument("unsupported gate '" + kind + "'");
  }
};

std::size_t dimension_cap_from_env() {
  const char* raw = std::getenv("BHWALK_DIM_CAP");
  if (!raw || !*raw) return kDefaultDimensionCap;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidArgument("BHWALK_DIM_CAP must be a positive integer, got '" + text + "'");
  }
  const unsigned long long cap = std::strtoull(text.c_str(), nullptr, 10);
  if (cap == 0) throw InvalidArgument("BHWALK_DIM_CAP must be positive");
  return static_cast<std::size_t>(cap);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write '" + path + "'");
  file << text;
  if (!file) throw InvalidArgument("write to '" + path + "' failed");
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

int cmd_verify_gate(const GateArgs& args, double u, double tol_leak, double tol_op, const std::string& out_path,
                    std::ostream& out) {
  const GateSpec gate = args.build(u);
  const std::size_t n = gate.arity();
  const EncodingMap enc = EncodingMap::for_qubits(n, dimension_cap_from_env());
  const SparseHermitian h = build_hamiltonian(enc.basis(), gate.config(n));
  const RestrictedOperator r = restrict_evolution(h, gate.duration, enc.support());
  const PhaseAlignment align = align_global_phase(r.matrix, gate.predicted);
  const bool pass = r.leakage < tol_leak && align.deviation < tol_op;

  Json doc;
  doc["schema"] = kGateReportSchema;
  doc["gate"] = to_json(gate);
  doc["simulated"] = matrix_to_json(r.matrix);
  doc["leakage"] = r.leakage;
  doc["aligned_phase"] = align.phase;
  doc["deviation"] = align.deviation;
  doc["tolerances"] = {{"leakage", tol_leak}, {"operator", tol_op}};
  doc["pass"] = pass;
  emit(dump(doc), out_path, out);
  return pass ? kExitPass : kExitVerificationFailed;
}

Schedule scaled(Schedule schedule, double fraction) {
  if (fraction == 1.0) return schedule;
  for (PulseStep& s : schedule.steps) s.duration *= fraction;
  return schedule;
}

int cmd_run(const Circuit& circuit, const RunConfig& config, const std::string& out_path, std::ostream& out) {
  config.validate();
  const std::size_t n = circuit.qubit_count;
  const std::string label = config.initial.value_or(std::string(n, '0'));
  const EncodingMap enc = EncodingMap::for_qubits(n, config.dimension_cap);

  CompileOptions options;
  options.interaction = config.interaction;
  options.policy = config.policy;
  const Schedule schedule = scaled(compile(circuit, options), config.timing_fraction);

  double max_step_leakage = 0.0;
  const StateVector initial = enc.encode(label);
  const StateVector final_state = run(schedule, initial, [&](std::size_t, const StateVector& psi) {
    max_step_leakage = std::max(max_step_leakage, enc.leakage(psi));
  });

  const CVector ideal = ideal_state(circuit, label);
  const CVector got = enc.computational_amplitudes(final_state);
  const double fidelity = std::norm(ideal.dot(got));
  const double leakage = enc.leakage(final_state);

  std::vector<std::size_t> qubits(n);
  for (std::size_t q = 0; q < n; ++q) qubits[q] = q + 1;

  Json doc;
  doc["schema"] = kRunReportSchema;
  doc["qubits"] = n;
  doc["initial"] = label;
  doc["interaction"] = config.interaction;
  doc["policy"] = to_string(config.policy);
  doc["timing_fraction"] = config.timing_fraction;
  doc["steps"] = schedule.steps.size();
  doc["total_duration"] = schedule.total_duration();
  Json amps = Json::object();
  Json probs = Json::object();
  for (std::size_t v = 0; v < enc.support().size(); ++v) {
    const Complex a = got[static_cast<Eigen::Index>(v)];
    if (std::abs(a) > kReportFloor) {
      amps[enc.label(v)] = complex_to_json(a);
      probs[enc.label(v)] = std::norm(a);
    }
  }
  doc["amplitudes"] = std::move(amps);
  doc["probabilities"] = std::move(probs);
  doc["leakage"] = leakage;
  doc["max_step_leakage"] = max_step_leakage;
  Json err = Json::object();
  for (std::size_t q : qubits) {
    const auto dist = outcome_probabilities(final_state, {q});
    err["q" + std::to_string(q)] = dist.at({QubitOutcome::Err});
  }
  doc["err_probability"] = std::move(err);
  doc["fidelity"] = fidelity;
  doc["fidelity_deficit"] = 1.0 - fidelity;

  if (config.shots > 0) {
    const auto shots = sample_shots(final_state, qubits, config.shots, config.seed);
    std::map<std::string, std::size_t> counts;
    for (const OutcomeVector& s : shots) ++counts[to_string(s)];
    Json c = Json::object();
    for (const auto& [k, v] : counts) c[k] = v;
    doc["seed"] = config.seed;
    doc["shot_counts"] = std::move(c);
    if (config.shots_path) emit(shots_to_csv(qubits, shots), *config.shots_path, out);
  }
  const bool pass = leakage < config.tol_leakage && (1.0 - fidelity) < config.tol_operator;
  doc["tolerances"] = {{"leakage", config.tol_leakage}, {"operator", config.tol_operator}};
  doc["pass"] = pass;
  emit(dump(doc), out_path.empty() ? config.state_path.value_or("") : out_path, out);
  return pass ? kExitPass : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bose-Hubbard quantum-walk gate compiler and simulator", "bhwalk"};
  app.require_subcommand(1);

  double u = 1.0;
  std::uint64_t seed = 0;
  double tol_leak = 1e-8;
  double tol_op = 1e-8;
  std::string out_path;
  std::string format = "dot";
  std::string policy = "greedy-layer";
  const std::vector<std::string> policies{"greedy-layer", "sequential"};

  // verify-gate
  auto* verify = app.add_subcommand("verify-gate", "Simulate one gate pulse and compare with its closed form");
  GateArgs verify_args;
  verify_args.attach(verify, true);
  verify->add_option("--u", u, "On-site interaction U")->capture_default_str();
  verify->add_option("--tol-leak", tol_leak, "Leakage tolerance")->capture_default_str();
  verify->add_option("--tol-op", tol_op, "Operator deviation tolerance")->capture_default_str();
  verify->add_option("--out", out_path, "Report path (default stdout)");

  // run
  auto* run_cmd = app.add_subcommand("run", "Compile and simulate a circuit");
  std::string circuit_path;
  std::string config_path;
  std::size_t shots = 0;
  double timing_fraction = 1.0;
  std::string initial;
  std::string shots_out;
  run_cmd->add_option("circuit", circuit_path, "Circuit JSON")->required();
  run_cmd->add_option("config", config_path, "Run-config JSON");
  auto* run_u = run_cmd->add_option("--u", u, "On-site interaction U");
  auto* run_seed = run_cmd->add_option("--seed", seed, "Sampler seed");
  auto* run_shots = run_cmd->add_option("--shots", shots, "Number of measurement shots");
  auto* run_tf = run_cmd->add_option("--timing-fraction", timing_fraction, "Scale every pulse duration");
  auto* run_init = run_cmd->add_option("--initial", initial, "Computational input label");
  auto* run_policy = run_cmd->add_option("--policy", policy, "Layering policy")->check(CLI::IsMember(policies));
  auto* run_tl = run_cmd->add_option("--tol-leak", tol_leak, "Leakage tolerance");
  auto* run_to = run_cmd->add_option("--tol-op", tol_op, "Fidelity-deficit tolerance");
  auto* run_so = run_cmd->add_option("--shots-out", shots_out, "CSV path for shots");
  run_cmd->add_option("--out", out_path, "Report path (default stdout)");

  // compile
  auto* compile_cmd = app.add_subcommand("compile", "Compile a circuit to a pulse schedule");
  compile_cmd->add_option("circuit", circuit_path, "Circuit JSON")->required();
  compile_cmd->add_option("--u", u, "On-site interaction U")->capture_default_str();
  compile_cmd->add_option("--policy", policy, "Layering policy")->check(CLI::IsMember(policies));
  compile_cmd->add_option("--out", out_path, "Schedule path (default stdout)");

  // export-graph
  auto* export_cmd = app.add_subcommand("export-graph", "Export the secondary graph of a configuration");
  GateArgs export_args;
  export_args.attach(export_cmd, false);
  std::size_t qubits = 0;
  std::optional<std::size_t> particles;
  bool prune = false;
  export_cmd->add_option("--config", config_path, "Graph-config JSON");
  export_cmd->add_option("--qubits", qubits, "Qubit count (gate or default configuration)");
  export_cmd->add_option("--particles", particles, "Boson count for --config (default sites/2)");
  export_cmd->add_option("--u", u, "On-site interaction U")->capture_default_str();
  export_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_flag("--prune", prune, "Drop vertices unreachable from the computational states");
  export_cmd->add_option("--out", out_path, "Output path (default stdout)");

  // qecc-layout
  auto* qecc_cmd = app.add_subcommand("qecc-layout", "Steane-code layout, transversal circuits, syndrome circuits");
  std::size_t logical = 1;
  std::string mode = "with-ancilla";
  std::string logical_gate;
  std::size_t logical_index = 1;
  std::size_t position = 1;
  bool syndrome = false;
  qecc_cmd->add_option("--logical", logical, "Logical qubit count")->capture_default_str();
  qecc_cmd->add_option("--mode", mode, "logical-only or with-ancilla")
      ->check(CLI::IsMember({"logical-only", "with-ancilla"}))
      ->capture_default_str();
  qecc_cmd->add_option("--gate", logical_gate, "Emit the physical circuit of x, z, h or entangle")
      ->check(CLI::IsMember({"x", "z", "h", "entangle"}));
  qecc_cmd->add_option("--index", logical_index, "Logical qubit the gate acts on")->capture_default_str();
  qecc_cmd->add_option("--position", position, "Code position for entangle")->capture_default_str();
  qecc_cmd->add_flag("--syndrome", syndrome, "Emit the syndrome-extraction circuit");
  qecc_cmd->add_option("--out", out_path, "Output path (default stdout)");

  // sweep-timing
  auto* sweep_cmd = app.add_subcommand("sweep-timing", "Worst-case leakage of a gate at scaled durations");
  GateArgs sweep_args;
  sweep_args.attach(sweep_cmd, true);
  std::vector<double> fractions{0.25, 0.5, 0.75, 0.9, 1.0, 1.1, 1.25, 1.5, 2.0};
  std::optional<double> single_fraction;
  sweep_cmd->add_option("--u", u, "On-site interaction U")->capture_default_str();
  sweep_cmd->add_option("--fractions", fractions, "Duration fractions in (0, 2]")->delimiter(',');
  sweep_cmd->add_option("--timing-fraction", single_fraction, "Single duration fraction");
  sweep_cmd->add_option("--out", out_path, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitInputError;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify_gate(verify_args, u, tol_leak, tol_op, out_path, out);
    }
    if (run_cmd->parsed()) {
      const Circuit circuit = circuit_from_json(parse_json(read_file(circuit_path)));
      RunConfig config;
      config.dimension_cap = dimension_cap_from_env();
      if (!config_path.empty()) {
        config = run_config_from_json(parse_json(read_file(config_path)));
        if (std::getenv("BHWALK_DIM_CAP")) config.dimension_cap = dimension_cap_from_env();
      }
      if (run_u->count()) config.interaction = u;
      if (run_seed->count()) config.seed = seed;
      if (run_shots->count()) config.shots = shots;
      if (run_tf->count()) config.timing_fraction = timing_fraction;
      if (run_init->count()) config.initial = initial;
      if (run_policy->count()) config.policy = parse_policy(policy);
      if (run_tl->count()) config.tol_leakage = tol_leak;
      if (run_to->count()) config.tol_operator = tol_op;
      if (run_so->count()) config.shots_path = shots_out;
      return cmd_run(circuit, config, out_path, out);
    }
    if (compile_cmd->parsed()) {
      const Circuit circuit = circuit_from_json(parse_json(read_file(circuit_path)));
      CompileOptions options;
      options.interaction = u;
      options.policy = parse_policy(policy);
      emit(dump(to_json(compile(circuit, options))), out_path, out);
      return kExitPass;
    }
    if (export_cmd->parsed()) {
      const std::size_t cap = dimension_cap_from_env();
      std::optional<SecondaryGraph> graph;
      if (!config_path.empty()) {
        if (!export_args.kind.empty()) throw InvalidArgument("export-graph: use either --config or --gate");
        const GraphConfig config = graph_config_from_json(parse_json(read_file(config_path)));
        const std::size_t n = particles.value_or(config.site_count() / 2);
        graph = build_secondary(*enumerate_basis(n, config.site_count(), cap), config);
      } else if (!export_args.kind.empty()) {
        const GateSpec gate = export_args.build(u);
        const std::size_t n = std::max(qubits, gate.arity());
        graph = build_secondary(*enumerate_basis(n, 2 * n, cap), gate.config(n));
      } else {
        if (qubits == 0) throw InvalidArgument("export-graph: give --config, --gate or --qubits");
        graph = build_secondary(*enumerate_basis(qubits, 2 * qubits, cap), default_config(qubits, u));
      }
      const ExportOptions options{prune};
      emit(format == "json" ? export_json(*graph, options) : export_dot(*graph, options), out_path, out);
      return kExitPass;
    }
    if (qecc_cmd->parsed()) {
      const QeccLayout layout = build_layout(logical, parse_qecc_mode(mode));
      if (syndrome) {
        const SyndromeCircuit sc = syndrome_circuit(layout, logical_index);
        Json doc;
        doc["schema"] = "bhwalk.syndrome-circuit/1";
        doc["circuit"] = to_json(sc.circuit);
        Json stabs = Json::array();
        for (const StabilizerRecord& s : sc.stabilizers) {
          stabs.push_back({{"type", std::string(1, s.type)},
                           {"support", s.support},
                           {"ancilla_position", s.ancilla_position},
                           {"gates", {s.first_gate, s.end_gate}}});
        }
        doc["stabilizers"] = std::move(stabs);
        emit(dump(doc), out_path, out);
      } else if (!logical_gate.empty()) {
        LogicalGate gate;
        gate.kind = parse_logical_gate(logical_gate);
        gate.logical = logical_index;
        gate.position = position;
        emit(dump(to_json(physical_circuit(layout, gate))), out_path, out);
      } else {
        emit(dump(to_json(layout)), out_path, out);
      }
      return kExitPass;
    }
    if (sweep_cmd->parsed()) {
      const GateSpec gate = sweep_args.build(u);
      const std::vector<double> fs = single_fraction ? std::vector<double>{*single_fraction} : fractions;
      Json doc;
      doc["schema"] = kSweepReportSchema;
      doc["gate"] = to_json(gate);
      Json points = Json::array();
      for (const SweepPoint& p : timing_sweep(gate, fs)) points.push_back({{"fraction", p.fraction}, {"leakage", p.leakage}});
      doc["points"] = std::move(points);
      emit(dump(doc), out_path, out);
      return kExitPass;
    }
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const InfeasibleSchedule& e) {
    err << "error: " << e.what() << " (gates";
    for (std::size_t g : e.gates()) err << ' ' << g;
    err << ")\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace bhwalk::cli
