// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Bosonic Fock space over a labeled set of lattice sites.
 *
 * Sites are arranged in two-site columns: column i (1-based) holds the
 * |0> site (row 0) and the |1> site (row 1) of qubit i. Internally every
 * site is a flat index 0..V-1 with index = 2*(column-1) + row.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace bhwalk {

/// Default upper bound on the number of Fock states a basis may hold.
inline constexpr std::size_t kDefaultDimensionCap = 200'000;

/// A lattice site. Thin wrapper over the flat site index.
class VertexId {
 public:
  constexpr VertexId() = default;

  static constexpr VertexId flat(std::size_t index) { return VertexId(index); }

  /// Site of row `row` (0 or 1) in 1-based column `column`.
  static VertexId at(std::size_t column, std::size_t row);

  constexpr std::size_t index() const noexcept { return index_; }
  constexpr std::size_t column() const noexcept { return index_ / 2 + 1; }
  constexpr std::size_t row() const noexcept { return index_ % 2; }

  constexpr auto operator<=>(const VertexId&) const = default;

 private:
  constexpr explicit VertexId(std::size_t index) : index_(index) {}
  std::size_t index_ = 0;
};

/// Occupation-number vector, one entry per site.
class FockState {
 public:
  using Occupation = std::uint8_t;

  FockState() = default;
  explicit FockState(std::vector<Occupation> occupations)
      : occupations_(std::move(occupations)) {}
  FockState(std::initializer_list<int> occupations);

  std::size_t site_count() const noexcept { return occupations_.size(); }
  unsigned particle_count() const noexcept;
  const std::vector<Occupation>& occupations() const noexcept { return occupations_; }
  Occupation operator[](std::size_t site) const { return occupations_[site]; }

  /// Digit string such as "1010"; sites with more than nine bosons are
  /// written in brackets, e.g. "[12]0".
  std::string to_string() const;

  /// Inverse of to_string().
  static FockState parse(const std::string& text);

  auto operator<=>(const FockState&) const = default;

 private:
  friend struct FockStateHash;
  std::vector<Occupation> occupations_;
};

struct FockStateHash {
  std::size_t operator()(const FockState& state) const noexcept;
};

/// Number of Fock states for n bosons on V sites, C(V+n-1, n), saturating
/// at `limit + 1` so that overflow never occurs.
std::size_t multiset_count(std::size_t particles, std::size_t sites,
                           std::size_t limit = static_cast<std::size_t>(-1) - 1);

/**
 * Ordered enumeration of every occupation vector with a fixed particle
 * number. States are sorted lexicographically descending, so for two bosons
 * on four sites the order starts |2000>, |1100>, |1010>, ...
 *
 * Immutable after construction; safe to share between threads.
 */
class FockBasis {
 public:
  FockBasis(std::size_t particles, std::size_t sites,
            std::size_t dimension_cap = kDefaultDimensionCap);

  std::size_t particle_count() const noexcept { return particles_; }
  std::size_t site_count() const noexcept { return sites_; }
  std::size_t dimension() const noexcept { return states_.size(); }

  const std::vector<FockState>& states() const noexcept { return states_; }
  const FockState& state(std::size_t index) const;

  /// Index of `state`, or nullopt if it is not part of this basis.
  std::optional<std::size_t> find(const FockState& state) const;
  /// Index of `state`; throws IndexError if absent.
  std::size_t index_of(const FockState& state) const;

 private:
  std::size_t particles_;
  std::size_t sites_;
  std::vector<FockState> states_;
  std::unordered_map<FockState, std::size_t, FockStateHash> lookup_;
};

using FockBasisPtr = std::shared_ptr<const FockBasis>;

/// Builds the basis of `particles` bosons on `sites` sites.
/// Throws CapacityError if the dimension would exceed `dimension_cap`.
FockBasisPtr enumerate_basis(std::size_t particles, std::size_t sites,
                             std::size_t dimension_cap = kDefaultDimensionCap);

/// Result of moving one boson: the new state and the bosonic matrix element.
struct HopResult {
  FockState state;
  double amplitude = 0.0;
};

/// Matrix element of c^dagger_to c_from acting on `state`. Returns the input
/// state with amplitude 0 when `from` is empty.
HopResult apply_hop(const FockState& state, VertexId from, VertexId to);

/// Eigenvalue of the number operator on `site`.
unsigned number_on(const FockState& state, VertexId site);

}  // namespace bhwalk
