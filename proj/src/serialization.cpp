// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhwalk/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "bhwalk/error.hpp"

namespace bhwalk {

namespace {

template <typename T>
T field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T field_or(const Json& doc, const char* key, T fallback) {
  if (!doc.contains(key) || doc.at(key).is_null()) return fallback;
  return field<T>(doc, key);
}

const Json& array_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array()) {
    throw SchemaError(std::string("field '") + key + "' must be an array");
  }
  return doc.at(key);
}

Json edge_json(const Edge& e) { return {{"a", e.a.index()}, {"b", e.b.index()}, {"tunneling", e.tunneling}}; }

}  // namespace

std::string format_number(double value) {
  char buf[40];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

void RunConfig::validate() const {
  if (!(interaction > 0.0) || !std::isfinite(interaction)) throw InvalidArgument("run config: U must be > 0");
  if (!(tol_leakage > 0.0 && tol_leakage < 1.0)) throw InvalidArgument("run config: leakage tolerance must lie in (0, 1)");
  if (!(tol_operator > 0.0 && tol_operator < 1.0)) {
    throw InvalidArgument("run config: operator tolerance must lie in (0, 1)");
  }
  if (!(timing_fraction > 0.0 && timing_fraction <= 2.0)) {
    throw InvalidArgument("run config: timing fraction must lie in (0, 2]");
  }
  if (dimension_cap == 0) throw InvalidArgument("run config: dimension cap must be positive");
}

std::string to_string(SchedulePolicy policy) {
  return policy == SchedulePolicy::Sequential ? "sequential" : "greedy-layer";
}

SchedulePolicy parse_policy(const std::string& text) {
  if (text == "greedy-layer") return SchedulePolicy::GreedyLayer;
  if (text == "sequential") return SchedulePolicy::Sequential;
  throw InvalidArgument("unknown policy '" + text + "'");
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

void expect_schema(const Json& doc, const char* expected) {
  const auto schema = field<std::string>(doc, "schema");
  if (schema != expected) throw SchemaError("expected schema '" + std::string(expected) + "', got '" + schema + "'");
}

Json to_json(const GraphConfig& config) {
  Json doc;
  doc["schema"] = kGraphConfigSchema;
  doc["sites"] = config.site_count();
  doc["interaction"] = config.interaction();
  Json edges = Json::array();
  for (const Edge& e : config.edges()) edges.push_back(edge_json(e));
  doc["edges"] = std::move(edges);
  Json potentials = Json::array();
  for (std::size_t s = 0; s < config.site_count(); ++s) {
    if (config.potentials()[s] != 0.0) potentials.push_back({{"site", s}, {"value", config.potentials()[s]}});
  }
  doc["potentials"] = std::move(potentials);
  if (config.site_interactions()) doc["site_interactions"] = *config.site_interactions();
  return doc;
}

GraphConfig graph_config_from_json(const Json& doc) {
  expect_schema(doc, kGraphConfigSchema);
  try {
    GraphConfig config(field<std::size_t>(doc, "sites"), field<double>(doc, "interaction"));
    for (const Json& e : field_or<Json>(doc, "edges", Json::array())) {
      config.add_edge(VertexId::flat(field<std::size_t>(e, "a")), VertexId::flat(field<std::size_t>(e, "b")),
                      field<double>(e, "tunneling"));
    }
    for (const Json& p : field_or<Json>(doc, "potentials", Json::array())) {
      config.set_potential(VertexId::flat(field<std::size_t>(p, "site")), field<double>(p, "value"));
    }
    if (doc.contains("site_interactions")) {
      config.set_site_interactions(field<std::vector<double>>(doc, "site_interactions"));
    }
    return config;
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(std::string("graph config: ") + e.what());
  }
}

Json to_json(const CircuitGate& gate) {
  Json j;
  j["gate"] = to_string(gate.kind);
  j["targets"] = gate.targets;
  switch (gate.kind) {
    case GateKind::RX:
    case GateKind::RZ:
      j["theta"] = gate.theta;
      break;
    case GateKind::CPhase:
      j["m"] = gate.m;
      j["k"] = gate.k;
      if (gate.allow_odd_k) j["allow_odd_k"] = true;
      break;
    case GateKind::Swap:
      j["k"] = gate.k;
      j["l"] = gate.l;
      break;
    default:
      break;
  }
  return j;
}

Json to_json(const Circuit& circuit) {
  Json doc;
  doc["schema"] = kCircuitSchema;
  doc["qubits"] = circuit.qubit_count;
  if (circuit.couplings) {
    Json pairs = Json::array();
    for (const auto& [a, b] : *circuit.couplings) pairs.push_back({a, b});
    doc["couplings"] = std::move(pairs);
  }
  Json gates = Json::array();
  for (const CircuitGate& g : circuit.gates) gates.push_back(to_json(g));
  doc["gates"] = std::move(gates);
  return doc;
}

Circuit circuit_from_json(const Json& doc) {
  expect_schema(doc, kCircuitSchema);
  Circuit circuit;
  circuit.qubit_count = field<std::size_t>(doc, "qubits");
  if (circuit.qubit_count == 0) throw SchemaError("circuit: qubits must be positive");
  if (doc.contains("couplings")) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const Json& p : array_field(doc, "couplings")) {
      if (!p.is_array() || p.size() != 2) throw SchemaError("circuit: couplings are [a, b] pairs");
      pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    circuit.couplings = std::move(pairs);
  }
  for (const Json& g : array_field(doc, "gates")) {
    CircuitGate gate;
    try {
      gate.kind = parse_gate_kind(field<std::string>(g, "gate"));
    } catch (const InvalidArgument& e) {
      throw SchemaError(e.what());
    }
    gate.targets = field<std::vector<std::size_t>>(g, "targets");
    gate.theta = field_or<double>(g, "theta", 0.0);
    gate.m = field_or<int>(g, "m", 6);
    gate.k = field_or<int>(g, "k", gate.kind == GateKind::Swap ? 1 : 2);
    gate.l = field_or<int>(g, "l", 5);
    gate.allow_odd_k = field_or<bool>(g, "allow_odd_k", false);
    circuit.gates.push_back(std::move(gate));
  }
  try {
    circuit.validate();
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
  return circuit;
}

Json to_json(const GateSpec& gate) {
  Json j;
  j["gate"] = to_string(gate.kind);
  j["targets"] = gate.targets;
  switch (gate.kind) {
    case GateKind::RX:
    case GateKind::RZ:
      j["theta"] = gate.theta;
      break;
    case GateKind::CPhase:
      j["m"] = gate.m;
      j["k"] = gate.k;
      break;
    case GateKind::Swap:
      j["k"] = gate.k;
      j["l"] = gate.l;
      j["alpha"] = gate.alpha;
      if (gate.swap_class) j["class"] = to_string(*gate.swap_class);
      break;
    default:
      break;
  }
  j["tunneling"] = gate.tunneling;
  j["potential"] = gate.potential;
  j["interaction"] = gate.interaction;
  j["duration"] = gate.duration;
  j["global_phase"] = gate.global_phase;
  if (gate.kind == GateKind::CPhase) {
    j["entangling_phase"] = gate.entangling_phase;
    j["trivial_phase"] = gate.trivial_phase;
  }
  j["predicted"] = matrix_to_json(gate.predicted);
  return j;
}

Json to_json(const Schedule& schedule) {
  Json doc;
  doc["schema"] = kScheduleSchema;
  doc["qubits"] = schedule.qubit_count;
  doc["interaction"] = schedule.interaction;
  doc["total_duration"] = schedule.total_duration();
  Json steps = Json::array();
  for (const PulseStep& s : schedule.steps) {
    Json step;
    step["duration"] = s.duration;
    step["circuit_gates"] = s.gate_indices;
    Json gates = Json::array();
    for (const GateSpec& g : s.gates) gates.push_back(to_json(g));
    step["gates"] = std::move(gates);
    Json config = to_json(s.config);
    config.erase("schema");
    step["config"] = std::move(config);
    steps.push_back(std::move(step));
  }
  doc["steps"] = std::move(steps);
  return doc;
}

Json to_json(const RunConfig& config) {
  Json doc;
  doc["schema"] = kRunConfigSchema;
  doc["interaction"] = config.interaction;
  doc["dimension_cap"] = config.dimension_cap;
  doc["tolerances"] = {{"leakage", config.tol_leakage}, {"operator", config.tol_operator}};
  doc["seed"] = config.seed;
  if (config.initial) doc["initial"] = *config.initial;
  doc["shots"] = config.shots;
  doc["policy"] = to_string(config.policy);
  doc["timing_fraction"] = config.timing_fraction;
  Json outputs = Json::object();
  if (config.state_path) outputs["state"] = *config.state_path;
  if (config.shots_path) outputs["shots"] = *config.shots_path;
  doc["outputs"] = std::move(outputs);
  return doc;
}

RunConfig run_config_from_json(const Json& doc) {
  expect_schema(doc, kRunConfigSchema);
  RunConfig c;
  c.interaction = field_or<double>(doc, "interaction", c.interaction);
  c.dimension_cap = field_or<std::size_t>(doc, "dimension_cap", c.dimension_cap);
  if (doc.contains("tolerances")) {
    const Json& t = doc.at("tolerances");
    c.tol_leakage = field_or<double>(t, "leakage", c.tol_leakage);
    c.tol_operator = field_or<double>(t, "operator", c.tol_operator);
  }
  c.seed = field_or<std::uint64_t>(doc, "seed", c.seed);
  if (doc.contains("initial")) c.initial = field<std::string>(doc, "initial");
  c.shots = field_or<std::size_t>(doc, "shots", c.shots);
  try {
    c.policy = parse_policy(field_or<std::string>(doc, "policy", "greedy-layer"));
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
  c.timing_fraction = field_or<double>(doc, "timing_fraction", c.timing_fraction);
  if (doc.contains("outputs")) {
    const Json& o = doc.at("outputs");
    if (o.contains("state")) c.state_path = field<std::string>(o, "state");
    if (o.contains("shots")) c.shots_path = field<std::string>(o, "shots");
  }
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
  return c;
}

Json to_json(const QeccLayout& layout) {
  Json doc;
  doc["schema"] = kLayoutSchema;
  doc["logical_qubits"] = layout.logical_qubit_count();
  doc["mode"] = to_string(layout.mode());
  doc["physical_qubits"] = layout.physical_qubit_count();
  Json vertices = Json::array();
  for (std::size_t v = 0; v < layout.vertices().size(); ++v) {
    const QeccVertex& q = layout.vertices()[v];
    vertices.push_back({{"index", v},
                        {"x", q.row},
                        {"y", q.layer},
                        {"c", q.position},
                        {"i", q.logical},
                        {"region", to_string(q.region)},
                        {"qubit", q.physical_qubit}});
  }
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const LayoutEdge& e : layout.edges()) {
    const char* kind = e.kind == LayoutEdgeKind::Local          ? "local"
                       : e.kind == LayoutEdgeKind::CodeNeighbor ? "code-neighbor"
                                                                : "cphase";
    edges.push_back({{"u", e.u}, {"v", e.v}, {"kind", kind}});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

}  // namespace bhwalk
