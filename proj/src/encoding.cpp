// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhwalk/encoding.hpp"

#include <algorithm>
#include <deque>

#include "bhwalk/error.hpp"

namespace bhwalk {

EncodingMap::EncodingMap(FockBasisPtr basis) : basis_(std::move(basis)) {
  if (!basis_) throw InvalidArgument("EncodingMap: null basis");
  qubits_ = basis_->particle_count();
  if (qubits_ == 0 || basis_->site_count() != 2 * qubits_) {
    throw DimensionMismatch("EncodingMap: need n bosons on 2n sites");
  }
  if (qubits_ >= 8 * sizeof(std::size_t) - 1) throw CapacityError("EncodingMap: too many qubits", qubits_, 62);
  const std::size_t count = std::size_t{1} << qubits_;
  support_.reserve(count);
  encoded_.assign(basis_->dimension(), 0);
  for (std::size_t value = 0; value < count; ++value) {
    std::vector<FockState::Occupation> occ(2 * qubits_, 0);
    for (std::size_t q = 0; q < qubits_; ++q) {
      const std::size_t bit = (value >> (qubits_ - 1 - q)) & 1u;
      occ[2 * q + bit] = 1;
    }
    const std::size_t idx = basis_->index_of(FockState(std::move(occ)));
    support_.push_back(idx);
    encoded_[idx] = 1;
  }
}

EncodingMap EncodingMap::for_qubits(std::size_t qubit_count, std::size_t dimension_cap) {
  return EncodingMap(enumerate_basis(qubit_count, 2 * qubit_count, dimension_cap));
}

std::string EncodingMap::label(std::size_t label_value) const {
  if (label_value >= support_.size()) throw IndexError("EncodingMap: label value out of range");
  std::string bits(qubits_, '0');
  for (std::size_t q = 0; q < qubits_; ++q) {
    if ((label_value >> (qubits_ - 1 - q)) & 1u) bits[q] = '1';
  }
  return bits;
}

std::size_t EncodingMap::label_value(const std::string& bits) const {
  if (bits.size() != qubits_) {
    throw InvalidArgument("EncodingMap: label '" + bits + "' should have " + std::to_string(qubits_) +
                          " bits");
  }
  std::size_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("EncodingMap: label must be a bit string");
    value = (value << 1) | static_cast<std::size_t>(c - '0');
  }
  return value;
}

std::size_t EncodingMap::index_of_label(const std::string& bits) const {
  return support_[label_value(bits)];
}

bool EncodingMap::is_encoded_index(std::size_t basis_index) const {
  if (basis_index >= encoded_.size()) throw IndexError("EncodingMap: basis index out of range");
  return encoded_[basis_index] != 0;
}

StateVector EncodingMap::encode(const std::string& bits) const {
  return StateVector::basis_state(basis_, index_of_label(bits));
}

StateVector EncodingMap::encode(const CVector& computational) const {
  if (static_cast<std::size_t>(computational.size()) != support_.size()) {
    throw DimensionMismatch("EncodingMap::encode: expected 2^n amplitudes");
  }
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(basis_->dimension()));
  for (std::size_t v = 0; v < support_.size(); ++v) {
    amps[static_cast<Eigen::Index>(support_[v])] = computational[static_cast<Eigen::Index>(v)];
  }
  return StateVector(basis_, std::move(amps));
}

void EncodingMap::check_basis(const StateVector& psi) const {
  if (psi.basis_ptr() != basis_ && (psi.basis().particle_count() != basis_->particle_count() ||
                                    psi.basis().site_count() != basis_->site_count())) {
    throw DimensionMismatch("EncodingMap: state lives on a different Fock space");
  }
}

double EncodingMap::leakage(const StateVector& psi) const {
  check_basis(psi);
  double outside = 0.0;
  for (std::size_t i = 0; i < psi.dimension(); ++i) {
    if (!encoded_[i]) outside += std::norm(psi.amplitudes()[static_cast<Eigen::Index>(i)]);
  }
  return outside;
}

bool EncodingMap::is_computational(const StateVector& psi, double tolerance) const {
  return leakage(psi) < tolerance;
}

CVector EncodingMap::computational_amplitudes(const StateVector& psi) const {
  check_basis(psi);
  CVector out(static_cast<Eigen::Index>(support_.size()));
  for (std::size_t v = 0; v < support_.size(); ++v) {
    out[static_cast<Eigen::Index>(v)] = psi.amplitudes()[static_cast<Eigen::Index>(support_[v])];
  }
  return out;
}

DecodedState EncodingMap::decode(const StateVector& psi) const {
  DecodedState out;
  const CVector amps = computational_amplitudes(psi);
  for (std::size_t v = 0; v < support_.size(); ++v) {
    const Complex a = amps[static_cast<Eigen::Index>(v)];
    if (a != Complex(0.0, 0.0)) out.amplitudes.emplace(label(v), a);
  }
  out.leakage = leakage(psi);
  return out;
}

std::vector<std::size_t> reachable_states(const EncodingMap& encoding,
                                          std::span<const GraphConfig> configs) {
  const FockBasis& basis = encoding.basis();
  std::vector<char> reached(basis.dimension(), 0);
  for (std::size_t idx : encoding.support()) reached[idx] = 1;

  for (const GraphConfig& config : configs) {
    const SparseHermitian h = build_hamiltonian(basis, config);
    std::vector<std::vector<std::size_t>> adjacency(basis.dimension());
    for (const auto& e : h.entries()) {
      if (e.row != e.col) adjacency[e.col].push_back(e.row);
    }
    std::vector<char> seen(basis.dimension(), 0);
    std::deque<std::size_t> frontier;
    for (std::size_t idx : encoding.support()) {
      seen[idx] = 1;
      frontier.push_back(idx);
    }
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop_front();
      reached[v] = 1;
      for (std::size_t w : adjacency[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          frontier.push_back(w);
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    if (reached[i]) out.push_back(i);
  }
  return out;
}

}  // namespace bhwalk
