// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "bhwalk/error.hpp"
#include "bhwalk/serialization.hpp"

using namespace bhwalk;

TEST(Serialization, CircuitRoundTrip) {
  Circuit c{3, {CircuitGate::h(1), CircuitGate::cphase(1, 2, 8, 4), CircuitGate::rx(3, 0.25),
                CircuitGate::swap(2, 3, 2, 7)},
            std::nullopt};
  const Json doc = to_json(c);
  EXPECT_EQ(doc["schema"], kCircuitSchema);
  const Circuit back = circuit_from_json(parse_json(doc.dump()));
  EXPECT_EQ(to_json(back), doc);
}

TEST(Serialization, GraphConfigAndRunConfigRoundTrip) {
  GraphConfig g(4, 2.5);
  g.add_edge(VertexId::flat(0), VertexId::flat(2), 0.75).set_potential(VertexId::flat(3), -1.0);
  EXPECT_EQ(to_json(graph_config_from_json(to_json(g))), to_json(g));

  RunConfig rc;
  rc.seed = 99;
  rc.initial = "10";
  rc.shots = 5;
  rc.policy = SchedulePolicy::Sequential;
  EXPECT_EQ(to_json(run_config_from_json(to_json(rc))), to_json(rc));
}

TEST(Serialization, RejectsBadInput) {
  EXPECT_THROW(parse_json("{"), SchemaError);
  EXPECT_THROW(circuit_from_json(Json{{"schema", "bhwalk.circuit/9"}}), SchemaError);
  EXPECT_THROW(circuit_from_json(Json{{"schema", kCircuitSchema}, {"qubits", "two"}}), SchemaError);
  EXPECT_THROW(parse_policy("fastest"), InvalidArgument);
  RunConfig rc;
  rc.tol_leakage = 1.0;
  EXPECT_THROW(rc.validate(), InvalidArgument);
}

TEST(Serialization, NumberFormatRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 4.47213595499958}) {
    EXPECT_EQ(std::stod(format_number(x)), x);
  }
}
