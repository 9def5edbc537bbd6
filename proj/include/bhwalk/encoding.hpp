// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file encoding.hpp
 * @brief Position encoding of n qubits in n bosons on 2n sites.
 *
 * Qubit i is |0> when its boson sits on site (i,0) and |1> when it sits on
 * site (i,1). Computational labels are big-endian bit strings with qubit 1
 * leftmost, so for two qubits "11" is the Fock state |0101>.
 */

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bhwalk/evolution.hpp"
#include "bhwalk/fock.hpp"
#include "bhwalk/hamiltonian.hpp"

namespace bhwalk {

inline constexpr double kDefaultValidityTolerance = 1e-8;

/// Amplitudes on the 2^n encoded states plus the probability outside them.
struct DecodedState {
  /// Label -> amplitude, only for labels with non-zero amplitude.
  std::map<std::string, Complex> amplitudes;
  double leakage = 0.0;
};

class EncodingMap {
 public:
  /// Builds the canonical map for n qubits. The basis must hold n bosons on
  /// 2n sites.
  explicit EncodingMap(FockBasisPtr basis);

  /// Convenience: enumerates the basis for `qubit_count` qubits.
  static EncodingMap for_qubits(std::size_t qubit_count,
                                std::size_t dimension_cap = kDefaultDimensionCap);

  std::size_t qubit_count() const noexcept { return qubits_; }
  const FockBasis& basis() const noexcept { return *basis_; }
  const FockBasisPtr& basis_ptr() const noexcept { return basis_; }

  /// Basis indices of the encoded states, ordered by label value (label
  /// "0...0" first, qubit 1 is the most significant bit).
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  std::string label(std::size_t label_value) const;
  std::size_t label_value(const std::string& bits) const;
  std::size_t index_of_label(const std::string& bits) const;
  bool is_encoded_index(std::size_t basis_index) const;

  StateVector encode(const std::string& bits) const;
  /// Encodes an arbitrary computational vector of length 2^n.
  StateVector encode(const CVector& computational) const;

  bool is_computational(const StateVector& psi, double tolerance = kDefaultValidityTolerance) const;
  DecodedState decode(const StateVector& psi) const;
  /// Dense length-2^n vector of encoded amplitudes in label order.
  CVector computational_amplitudes(const StateVector& psi) const;
  /// 1 - sum of |amplitude|^2 on the encoded states, computed from the
  /// complement so that an exactly encoded state reports exactly 0.
  double leakage(const StateVector& psi) const;

 private:
  void check_basis(const StateVector& psi) const;

  FockBasisPtr basis_;
  std::size_t qubits_;
  std::vector<std::size_t> support_;
  std::vector<char> encoded_;
};

/// Basis indices reachable from the encoded subspace by following the
/// couplings of any of `configs` (each config separately). The result
/// includes the encoded states and is sorted ascending.
std::vector<std::size_t> reachable_states(const EncodingMap& encoding,
                                          std::span<const GraphConfig> configs);

}  // namespace bhwalk
