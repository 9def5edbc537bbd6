// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bhwalk/encoding.hpp"
#include "bhwalk/evolution.hpp"
#include "bhwalk/gates.hpp"
#include "bhwalk/measurement.hpp"
#include "bhwalk/scheduler.hpp"
#include "bhwalk/secondary_graph.hpp"
#include "oracles.hpp"

using namespace bhwalk;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0: no runtime bound
  std::function<Outcome()> body;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Gate1 {
  CMatrix matrix;
  double leakage;
};

// Simulated block of a single gate pulse on its own qubits.
Gate1 simulate(const GateSpec& g) {
  const std::size_t n = g.arity();
  const EncodingMap enc = EncodingMap::for_qubits(n);
  const RestrictedOperator r = restrict_evolution(build_hamiltonian(enc.basis(), g.config(n)), g.duration, enc.support());
  return {r.matrix, r.leakage};
}

Outcome fock_dimensions() {
  const std::size_t d2 = enumerate_basis(2, 4)->dimension();
  const std::size_t d3 = enumerate_basis(3, 6)->dimension();
  return {d2 == 10 && d3 == 56, "dims " + std::to_string(d2) + ", " + std::to_string(d3)};
}

const std::vector<double> kThetas{0.0, pi / 4, pi / 2, pi, 3 * pi / 2};

Outcome rx_identity() {
  double worst = 0.0;
  bool exact_zero = true;
  for (double th : kThetas) {
    const Gate1 s = simulate(rx_gate(1, th, 1.0));
    worst = std::max(worst, oracle::phase_free_distance(s.matrix, oracle::rx(th)));
    // Exact: the rotation angle fixes the phase, not just up to global phase.
    worst = std::max(worst, max_abs(s.matrix - oracle::rx(th)));
    exact_zero = exact_zero && s.leakage == 0.0;
  }
  return {worst < 1e-10 && exact_zero, "max dev " + fmt(worst) + (exact_zero ? ", leakage 0" : ", leakage nonzero")};
}

Outcome rz_identity() {
  double worst = 0.0;
  for (double th : kThetas) {
    const Gate1 s = simulate(rz_gate(1, th, 1.0));
    worst = std::max(worst, max_abs(s.matrix - oracle::phase(th)));
  }
  return {worst < 1e-10, "max dev " + fmt(worst)};
}

Outcome hadamard() {
  const GateSpec h = hadamard_gate(1, 1.0);
  const double dev = oracle::phase_free_distance(simulate(h).matrix, oracle::hadamard());

  const std::vector<GateSpec> euler = euler_single_qubit(1, hadamard_matrix(), 1.0, 2.0);
  double euler_time = 0.0;
  CMatrix product = CMatrix::Identity(2, 2);
  for (const GateSpec& g : euler) {
    euler_time += g.duration;
    product = simulate(g).matrix * product;
  }
  const double euler_dev = oracle::phase_free_distance(product, oracle::hadamard());
  const double ratio = euler_time / h.duration;
  return {dev < 1e-10 && euler_dev < 1e-10 && ratio > 10.0,
          "dev " + fmt(dev) + ", euler dev " + fmt(euler_dev) + ", time ratio " + fmt(ratio)};
}

Outcome cphase() {
  Outcome out;
  double worst_dev = 0.0;
  double worst_leak = 0.0;
  for (int m : {6, 8, 9, 16}) {
    const GateSpec g = cphase_gate(1, m, 2, std::sqrt(m * m - 16.0));
    const Gate1 s = simulate(g);
    const CMatrix ref = oracle::cphase(-pi * (m + std::sqrt(m * m - 16.0)));
    worst_dev = std::max(worst_dev, oracle::phase_free_distance(s.matrix, ref));
    worst_leak = std::max(worst_leak, s.leakage);
  }
  out.pass = worst_dev < 1e-8 && worst_leak < 1e-8;
  out.detail = "even k: dev " + fmt(worst_dev) + ", leak " + fmt(worst_leak);

  const GateSpec odd = cphase_gate(1, 8, 1, std::sqrt(48.0), true);
  const Gate1 s = simulate(odd);
  const CMatrix zz = oracle::kron(oracle::pauli_z(), oracle::pauli_z());
  const double odd_dev = oracle::phase_free_distance(s.matrix, zz);
  const bool odd_pass = odd_dev < 1e-8 && s.leakage < 1e-8;
  out.pass = out.pass && odd_pass;
  out.detail += "; (m=8,k=1) vs Z(x)Z: dev " + fmt(odd_dev) + ", leak " + fmt(s.leakage);
  return out;
}

Outcome swap() {
  const GateSpec a = swap_gate(1, 1, 5, 16.0 / 3.0);
  const Gate1 sa = simulate(a);
  const double rel_j = std::abs(a.tunneling - 1.0);
  const double rel_t = std::abs(a.duration - 3 * pi / 2);
  const double dev_a = oracle::phase_free_distance(sa.matrix, -1.0 * oracle::swap());

  const double alpha = 6.0 + std::sqrt(27.0);
  const Complex e = std::exp(Complex(0.0, -alpha * pi));
  CMatrix ref = CMatrix::Zero(4, 4);
  ref(0, 0) = e;
  ref(1, 2) = -1.0;
  ref(2, 1) = -1.0;
  ref(3, 3) = e;
  const GateSpec b = swap_gate(1, 1, 6, 1.0);
  const Gate1 sb = simulate(b);
  const double dev_b = oracle::phase_free_distance(sb.matrix, ref);
  const bool pass = dev_a < 1e-8 && dev_b < 1e-8 && sa.leakage < 1e-8 && sb.leakage < 1e-8 && rel_j < 1e-12 &&
                    rel_t < 1e-12;
  return {pass, "l=5 dev " + fmt(dev_a) + ", l=6 dev " + fmt(dev_b)};
}

std::set<std::set<std::string>> components_by_label(const SecondaryGraph& g) {
  std::set<std::set<std::string>> out;
  for (const auto& comp : g.components()) {
    std::set<std::string> labels;
    for (std::size_t v : comp) labels.insert(g.label(v));
    out.insert(labels);
  }
  return out;
}

Outcome cphase_graph() {
  const EncodingMap enc = EncodingMap::for_qubits(2);
  const SecondaryGraph g = build_secondary(enc.basis(), cphase_gate(1, 6, 2, 1.0).config(2), enc);
  const std::set<std::set<std::string>> expected{
      {"1010"}, {"1001", "1100"}, {"0110", "0011"}, {"0101", "0200", "0002"}, {"2000"}, {"0020"}};
  std::set<std::string> loops;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.has_self_loop(v)) loops.insert(g.label(v));
  }
  const bool comps = components_by_label(g) == expected;
  const bool self = loops == std::set<std::string>{"2000", "0200", "0020", "0002"};
  return {comps && self, std::string("components ") + (comps ? "match" : "differ") + ", self-loops " +
                             (self ? "match" : "differ")};
}

Outcome cartesian() {
  const double u = 1.0;
  GraphConfig total_cfg = swap_gate(2, 1, 5, u).config(3);
  rx_gate(1, pi / 3, 1.0).apply_to(total_cfg);
  const SecondaryGraph total = build_secondary(*enumerate_basis(3, 6), total_cfg);
  GraphConfig rx_cfg(2, u);
  rx_gate(1, pi / 3, 1.0).apply_to(rx_cfg);
  const GraphConfig swap_cfg = swap_gate(1, 1, 5, u).config(2);

  std::set<std::size_t> covered;
  bool holds = total.size() == 56;
  std::string reason;
  for (std::size_t na = 0; na <= 3; ++na) {
    const ProductCheck r = cartesian_product_check(total, build_secondary(*enumerate_basis(na, 2), rx_cfg),
                                                   build_secondary(*enumerate_basis(3 - na, 4), swap_cfg));
    if (!r.holds) {
      holds = false;
      reason = r.reason;
    }
    covered.insert(r.mapping.begin(), r.mapping.end());
  }
  holds = holds && covered.size() == 56;
  return {holds, std::to_string(covered.size()) + "/56 vertices matched" + (reason.empty() ? "" : ": " + reason)};
}

Outcome end_to_end() {
  std::mt19937_64 rng(20260415);
  std::uniform_int_distribution<std::size_t> depth(1, 6);
  const EncodingMap enc = EncodingMap::for_qubits(3);
  double worst_deficit = 0.0;
  double worst_leak = 0.0;
  for (int c = 0; c < 100; ++c) {
    const Circuit circuit = oracle::random_circuit(3, depth(rng), rng);
    const CVector input = oracle::random_state(8, rng);
    CompileOptions opts;
    opts.interaction = 1.0;
    const StateVector out = run(compile(circuit, opts), enc.encode(input));
    const CVector ideal = oracle::circuit_unitary(circuit) * input;
    const CVector got = enc.computational_amplitudes(out);
    worst_deficit = std::max(worst_deficit, 1.0 - std::norm(ideal.dot(got)));
    worst_leak = std::max(worst_leak, enc.leakage(out));
  }
  return {worst_deficit < 1e-7 && worst_leak < 1e-7,
          "worst deficit " + fmt(worst_deficit) + ", worst leak " + fmt(worst_leak)};
}

Outcome measurement() {
  double completeness = 0.0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto basis = enumerate_basis(n, 2 * n);
    const auto d = static_cast<Eigen::Index>(basis->dimension());
    for (std::size_t q = 1; q <= n; ++q) {
      const CMatrix sum = measurement_operator(*basis, q, QubitOutcome::Zero).to_dense() +
                          measurement_operator(*basis, q, QubitOutcome::One).to_dense() +
                          measurement_operator(*basis, q, QubitOutcome::Err).to_dense();
      completeness = std::max(completeness, max_abs(sum - CMatrix::Identity(d, d)));
    }
  }

  const EncodingMap one = EncodingMap::for_qubits(1);
  CVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const std::size_t shots = 10000;
  std::size_t zeros = 0;
  for (const auto& s : sample_shots(one.encode(plus), {1}, shots, 12345)) zeros += s[0] == QubitOutcome::Zero;
  const double freq = static_cast<double>(zeros) / shots;
  const double sigma = std::sqrt(0.25 / shots);

  const GateSpec g = cphase_gate(1, 6, 2, std::sqrt(20.0));
  const EncodingMap two = EncodingMap::for_qubits(2);
  const double t = 0.9 * g.duration;
  const StateVector psi = evolve(build_hamiltonian(two.basis(), g.config(2)), two.encode("01"), t);
  double err = 0.0;
  for (const auto& [o, p] : outcome_probabilities(psi, {1, 2})) {
    if (o[0] == QubitOutcome::Err || o[1] == QubitOutcome::Err) err += p;
  }
  // |1001> and |1100> form a two-level system coupled by -J.
  const double closed = std::pow(std::sin(g.tunneling * t), 2);
  const double err_dev = std::abs(err - closed);

  return {completeness == 0.0 && std::abs(freq - 0.5) <= 3 * sigma && err_dev < 1e-8,
          "completeness " + fmt(completeness) + ", freq " + fmt(freq) + ", err " + fmt(err) + " vs " + fmt(closed)};
}

Outcome asymptotic_phase() {
  const int m = 200;
  const double phi = wrap_phase(cphase_phase(m));
  const double target = -8 * pi / m;
  const double rel = std::abs(phi - target) / std::abs(target);
  return {rel < 0.05, "phi mod 2pi " + fmt(phi) + " vs " + fmt(target) + ", rel " + fmt(rel)};
}

Outcome coupling_count() {
  const EncodingMap enc = EncodingMap::for_qubits(3);
  std::vector<GraphConfig> configs;
  for (std::size_t a : {1, 2}) {
    configs.push_back(cphase_gate(a, 6, 2, 1.0).config(3));
    configs.push_back(swap_gate(a, 1, 5, 1.0).config(3));
  }
  const std::size_t reached = reachable_states(enc, configs).size();
  return {true, "reached " + std::to_string(reached) + " of 56 (reference: 24)" +
                    (reached == 24 ? "" : "; mismatch reported")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "fock dimensions", 0.010, fock_dimensions},
      {2, "rx identity", 1.0, rx_identity},
      {3, "rz identity", 0.0, rz_identity},
      {4, "one-step hadamard", 0.0, hadamard},
      {5, "cphase", 2.0, cphase},
      {6, "swap", 1.0, swap},
      {7, "cphase secondary graph", 0.0, cphase_graph},
      {8, "cartesian product", 0.0, cartesian},
      {9, "end-to-end oracle", 60.0, end_to_end},
      {10, "measurement", 0.0, measurement},
      {11, "asymptotic phase", 0.0, asymptotic_phase},
      {12, "coupling count (informational)", 0.0, coupling_count},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    failures += !o.pass;
    std::printf("%s %2d %-32s %9.3f ms  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs * 1e3,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
