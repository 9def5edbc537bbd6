// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

// JSON documents exchanged by the command-line tool. Every top-level document
// carries a "schema" string of the form "bhwalk.<kind>/<version>"; readers
// reject any other value with SchemaError.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "bhwalk/fock.hpp"
#include "bhwalk/gates.hpp"
#include "bhwalk/hamiltonian.hpp"
#include "bhwalk/qecc.hpp"
#include "bhwalk/scheduler.hpp"

namespace bhwalk {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCircuitSchema = "bhwalk.circuit/1";
inline constexpr const char* kScheduleSchema = "bhwalk.schedule/1";
inline constexpr const char* kGraphConfigSchema = "bhwalk.graph-config/1";
inline constexpr const char* kRunConfigSchema = "bhwalk.run-config/1";
inline constexpr const char* kLayoutSchema = "bhwalk.qecc-layout/1";
inline constexpr const char* kGateReportSchema = "bhwalk.gate-report/1";
inline constexpr const char* kRunReportSchema = "bhwalk.run-report/1";
inline constexpr const char* kSweepReportSchema = "bhwalk.timing-sweep/1";

struct RunConfig {
  double interaction = 1.0;
  std::size_t dimension_cap = kDefaultDimensionCap;
  double tol_leakage = 1e-7;
  double tol_operator = 1e-8;
  std::uint64_t seed = 0;
  std::optional<std::string> initial;  // computational label; all zeros if unset
  std::size_t shots = 0;
  SchedulePolicy policy = SchedulePolicy::GreedyLayer;
  // Scales every pulse duration; 1 runs the schedule as compiled.
  double timing_fraction = 1.0;
  std::optional<std::string> state_path;
  std::optional<std::string> shots_path;

  // Throws InvalidArgument unless U > 0 and both tolerances lie in (0, 1).
  void validate() const;
};

std::string to_string(SchedulePolicy policy);
SchedulePolicy parse_policy(const std::string& text);

Json complex_to_json(Complex z);
Json matrix_to_json(const CMatrix& m);

Json to_json(const GraphConfig& config);
GraphConfig graph_config_from_json(const Json& doc);

Json to_json(const CircuitGate& gate);
Json to_json(const Circuit& circuit);
Circuit circuit_from_json(const Json& doc);

Json to_json(const GateSpec& gate);
Json to_json(const Schedule& schedule);

Json to_json(const RunConfig& config);
RunConfig run_config_from_json(const Json& doc);

Json to_json(const QeccLayout& layout);

/// Parses text; malformed JSON becomes SchemaError.
Json parse_json(const std::string& text);
/// Throws SchemaError unless doc["schema"] == expected.
void expect_schema(const Json& doc, const char* expected);

/// Shortest round-tripping decimal form, as used in reports.
std::string format_number(double value);

}  // namespace bhwalk
