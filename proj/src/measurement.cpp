// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhwalk/measurement.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "bhwalk/error.hpp"

namespace bhwalk {

namespace {

constexpr std::size_t kMaxMeasuredQubits = 12;

void check_qubits(const FockBasis& basis, const std::vector<std::size_t>& qubits) {
  if (basis.site_count() % 2 != 0) throw DimensionMismatch("measurement: odd site count");
  const std::size_t columns = basis.site_count() / 2;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] == 0 || qubits[i] > columns) throw IndexError("measurement: qubit out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) throw InvalidArgument("measurement: qubits must be distinct");
    }
  }
}

OutcomeVector outcomes_of(const FockState& s, const std::vector<std::size_t>& qubits) {
  OutcomeVector out;
  out.reserve(qubits.size());
  for (std::size_t q : qubits) out.push_back(classify(s, q));
  return out;
}

// Walks the cumulative distribution in map order; falls back to the last
// positive entry when rounding leaves u above the total.
const OutcomeVector& pick(const std::map<OutcomeVector, double>& dist, double u) {
  double total = 0.0;
  for (const auto& [o, p] : dist) total += p;
  const double target = u * total;
  double acc = 0.0;
  const OutcomeVector* last = nullptr;
  for (const auto& [o, p] : dist) {
    if (p <= 0.0) continue;
    last = &o;
    acc += p;
    if (target < acc) return o;
  }
  if (!last) throw InvalidArgument("measurement: state has zero norm");
  return *last;
}

void all_outcomes(std::size_t k, OutcomeVector& current, std::map<OutcomeVector, double>& out) {
  if (current.size() == k) {
    out.emplace(current, 0.0);
    return;
  }
  for (QubitOutcome o : {QubitOutcome::Zero, QubitOutcome::One, QubitOutcome::Err}) {
    current.push_back(o);
    all_outcomes(k, current, out);
    current.pop_back();
  }
}

}  // namespace

std::string to_string(QubitOutcome outcome) {
  switch (outcome) {
    case QubitOutcome::Zero: return "0";
    case QubitOutcome::One: return "1";
    case QubitOutcome::Err: return "err";
  }
  return "?";
}

std::string to_string(const OutcomeVector& outcomes) {
  std::string s;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (i) s += ',';
    s += to_string(outcomes[i]);
  }
  return s;
}

QubitOutcome classify(const FockState& state, std::size_t qubit) {
  const unsigned a = number_on(state, VertexId::at(qubit, 0));
  const unsigned b = number_on(state, VertexId::at(qubit, 1));
  if (a == 1 && b == 0) return QubitOutcome::Zero;
  if (a == 0 && b == 1) return QubitOutcome::One;
  return QubitOutcome::Err;
}

double uniform_from(std::uint64_t draw) { return static_cast<double>(draw >> 11) * 0x1.0p-53; }

std::map<OutcomeVector, double> outcome_probabilities(const StateVector& psi,
                                                      const std::vector<std::size_t>& qubits) {
  const FockBasis& basis = psi.basis();
  check_qubits(basis, qubits);
  if (qubits.size() > kMaxMeasuredQubits) {
    throw CapacityError("outcome_probabilities: too many qubits", qubits.size(), kMaxMeasuredQubits);
  }
  std::map<OutcomeVector, double> dist;
  OutcomeVector scratch;
  all_outcomes(qubits.size(), scratch, dist);
  const double norm2 = psi.amplitudes().squaredNorm();
  if (norm2 == 0.0) throw InvalidArgument("outcome_probabilities: zero state");
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const double p = std::norm(psi.amplitudes()[static_cast<Eigen::Index>(i)]);
    if (p != 0.0) dist[outcomes_of(basis.state(i), qubits)] += p / norm2;
  }
  return dist;
}

MeasurementOutcome measure_qubits(const StateVector& psi, const std::vector<std::size_t>& qubits,
                                  std::uint64_t seed) {
  const auto dist = outcome_probabilities(psi, qubits);
  std::mt19937_64 gen(seed);
  const OutcomeVector& chosen = pick(dist, uniform_from(gen()));

  const FockBasis& basis = psi.basis();
  CVector amps = psi.amplitudes();
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    if (outcomes_of(basis.state(i), qubits) != chosen) amps[static_cast<Eigen::Index>(i)] = 0.0;
  }
  const double norm = amps.norm();
  amps /= norm;
  return {chosen, StateVector(psi.basis_ptr(), std::move(amps)), dist.at(chosen)};
}

std::vector<OutcomeVector> sample_shots(const StateVector& psi, const std::vector<std::size_t>& qubits,
                                        std::size_t shots, std::uint64_t seed) {
  const auto dist = outcome_probabilities(psi, qubits);
  std::mt19937_64 gen(seed);
  std::vector<OutcomeVector> out;
  out.reserve(shots);
  for (std::size_t s = 0; s < shots; ++s) out.push_back(pick(dist, uniform_from(gen())));
  return out;
}

std::string shots_to_csv(const std::vector<std::size_t>& qubits, const std::vector<OutcomeVector>& shots) {
  std::ostringstream os;
  os << "shot";
  for (std::size_t q : qubits) os << ",q" << q;
  os << '\n';
  for (std::size_t s = 0; s < shots.size(); ++s) {
    os << s;
    for (QubitOutcome o : shots[s]) os << ',' << to_string(o);
    os << '\n';
  }
  return os.str();
}

SparseHermitian vertex_projector(const FockBasis& basis, VertexId site, unsigned count) {
  if (site.index() >= basis.site_count()) throw IndexError("vertex_projector: site out of range");
  std::vector<SparseHermitian::Entry> entries;
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    if (number_on(basis.state(i), site) == count) entries.push_back({i, i, 1.0});
  }
  return SparseHermitian(basis.dimension(), std::move(entries));
}

SparseHermitian measurement_operator(const FockBasis& basis, std::size_t qubit, QubitOutcome outcome) {
  check_qubits(basis, {qubit});
  std::vector<SparseHermitian::Entry> entries;
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    if (classify(basis.state(i), qubit) == outcome) entries.push_back({i, i, 1.0});
  }
  return SparseHermitian(basis.dimension(), std::move(entries));
}

}  // namespace bhwalk
