// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file measurement.hpp
 * @brief Position measurements of encoded qubits with an explicit loss outcome.
 *
 * Measuring qubit i looks at the two sites of column i. Exactly one boson on
 * (i,0) and none on (i,1) reads Zero; the mirror image reads One; any other
 * occupation (empty column, doublon, two walkers) reads Err. The three
 * operators are diagonal in the Fock basis and sum to the identity.
 *
 * Sampling uses std::mt19937_64, whose output sequence is fixed by the C++
 * standard, and converts the top 53 bits of each draw to a double in [0, 1).
 * Seeded runs are therefore reproducible across platforms and compilers.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bhwalk/evolution.hpp"
#include "bhwalk/fock.hpp"
#include "bhwalk/hamiltonian.hpp"

namespace bhwalk {

enum class QubitOutcome { Zero, One, Err };

using OutcomeVector = std::vector<QubitOutcome>;

std::string to_string(QubitOutcome outcome);
std::string to_string(const OutcomeVector& outcomes);

/// Result of measuring one column of a Fock state.
QubitOutcome classify(const FockState& state, std::size_t qubit);

struct MeasurementOutcome {
  OutcomeVector outcomes;
  StateVector state;  // collapsed and renormalized
  double probability = 0.0;
};

/// Full distribution over {Zero, One, Err}^k, zero entries included. Limited
/// to 12 qubits per call.
std::map<OutcomeVector, double> outcome_probabilities(const StateVector& psi,
                                                      const std::vector<std::size_t>& qubits);

MeasurementOutcome measure_qubits(const StateVector& psi, const std::vector<std::size_t>& qubits,
                                  std::uint64_t seed);

/// Independent shots from the Born distribution, one generator for the batch.
std::vector<OutcomeVector> sample_shots(const StateVector& psi, const std::vector<std::size_t>& qubits,
                                        std::size_t shots, std::uint64_t seed);

/// "shot,q<i>,..." header, then one row per shot with 0, 1 or err.
std::string shots_to_csv(const std::vector<std::size_t>& qubits, const std::vector<OutcomeVector>& shots);

/// Diagonal projector onto Fock states with exactly `count` bosons on `site`.
SparseHermitian vertex_projector(const FockBasis& basis, VertexId site, unsigned count);

/// M_{i,0}, M_{i,1} or M_err for qubit i as a diagonal operator.
SparseHermitian measurement_operator(const FockBasis& basis, std::size_t qubit, QubitOutcome outcome);

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
double uniform_from(std::uint64_t draw);

}  // namespace bhwalk
