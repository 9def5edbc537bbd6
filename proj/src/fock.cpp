// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhwalk/fock.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "bhwalk/error.hpp"

namespace bhwalk {

VertexId VertexId::at(std::size_t column, std::size_t row) {
  if (column == 0) throw IndexError("VertexId: columns are 1-based");
  if (row > 1) throw IndexError("VertexId: row must be 0 or 1");
  return VertexId(2 * (column - 1) + row);
}

FockState::FockState(std::initializer_list<int> occupations) {
  occupations_.reserve(occupations.size());
  for (int n : occupations) {
    if (n < 0 || n > std::numeric_limits<Occupation>::max()) {
      throw InvalidArgument("FockState: occupation out of range");
    }
    occupations_.push_back(static_cast<Occupation>(n));
  }
}

unsigned FockState::particle_count() const noexcept {
  return std::accumulate(occupations_.begin(), occupations_.end(), 0u);
}

std::string FockState::to_string() const {
  std::string out;
  out.reserve(occupations_.size());
  for (Occupation n : occupations_) {
    if (n < 10) {
      out.push_back(static_cast<char>('0' + n));
    } else {
      out += '[' + std::to_string(static_cast<unsigned>(n)) + ']';
    }
  }
  return out;
}

FockState FockState::parse(const std::string& text) {
  std::vector<Occupation> occ;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      occ.push_back(static_cast<Occupation>(c - '0'));
    } else if (c == '[') {
      const auto close = text.find(']', i);
      if (close == std::string::npos) throw InvalidArgument("FockState: unbalanced '['");
      const int value = std::stoi(text.substr(i + 1, close - i - 1));
      if (value < 0 || value > std::numeric_limits<Occupation>::max()) {
        throw InvalidArgument("FockState: occupation out of range");
      }
      occ.push_back(static_cast<Occupation>(value));
      i = close;
    } else {
      throw InvalidArgument(std::string("FockState: unexpected character '") + c + "'");
    }
  }
  return FockState(std::move(occ));
}

std::size_t FockStateHash::operator()(const FockState& state) const noexcept {
  // FNV-1a over the occupation bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto n : state.occupations_) {
    h ^= n;
    h *= 1099511628211ull;
  }
  return h;
}

__extension__ using Wide = unsigned __int128;

std::size_t multiset_count(std::size_t particles, std::size_t sites, std::size_t limit) {
  if (sites == 0) return particles == 0 ? 1 : 0;
  // C(sites + particles - 1, k) built up incrementally; each partial product
  // is itself a binomial coefficient, so the division is exact.
  const std::size_t k = std::min(particles, sites - 1);
  const std::size_t top = sites + particles - 1;
  Wide value = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    value = value * (top - k + j) / j;
    if (value > limit) return limit + 1;
  }
  return static_cast<std::size_t>(value);
}

namespace {

void enumerate_rec(std::size_t site, unsigned remaining, std::vector<FockState::Occupation>& work,
                   std::vector<FockState>& out) {
  if (site + 1 == work.size()) {
    work[site] = static_cast<FockState::Occupation>(remaining);
    out.emplace_back(work);
    return;
  }
  for (int n = static_cast<int>(remaining); n >= 0; --n) {
    work[site] = static_cast<FockState::Occupation>(n);
    enumerate_rec(site + 1, remaining - static_cast<unsigned>(n), work, out);
  }
}

}  // namespace

FockBasis::FockBasis(std::size_t particles, std::size_t sites, std::size_t dimension_cap)
    : particles_(particles), sites_(sites) {
  if (sites == 0) throw InvalidArgument("FockBasis: at least one site is required");
  if (particles > std::numeric_limits<FockState::Occupation>::max()) {
    throw InvalidArgument("FockBasis: at most 255 particles are supported");
  }
  const std::size_t dim = multiset_count(particles, sites, dimension_cap);
  if (dim > dimension_cap) {
    throw CapacityError("FockBasis: dimension C(" + std::to_string(sites + particles - 1) + ", " +
                            std::to_string(particles) + ") exceeds cap " +
                            std::to_string(dimension_cap),
                        dim, dimension_cap);
  }
  states_.reserve(dim);
  std::vector<FockState::Occupation> work(sites, 0);
  enumerate_rec(0, static_cast<unsigned>(particles), work, states_);
  lookup_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) lookup_.emplace(states_[i], i);
}

const FockState& FockBasis::state(std::size_t index) const {
  if (index >= states_.size()) throw IndexError("FockBasis: state index out of range");
  return states_[index];
}

std::optional<std::size_t> FockBasis::find(const FockState& state) const {
  const auto it = lookup_.find(state);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FockBasis::index_of(const FockState& state) const {
  if (auto idx = find(state)) return *idx;
  throw IndexError("FockBasis: state " + state.to_string() + " is not in the basis");
}

FockBasisPtr enumerate_basis(std::size_t particles, std::size_t sites, std::size_t dimension_cap) {
  return std::make_shared<const FockBasis>(particles, sites, dimension_cap);
}

HopResult apply_hop(const FockState& state, VertexId from, VertexId to) {
  const std::size_t f = from.index();
  const std::size_t t = to.index();
  if (f >= state.site_count() || t >= state.site_count()) {
    throw IndexError("apply_hop: vertex out of range");
  }
  if (f == t) throw InvalidArgument("apply_hop: from and to must differ");
  const unsigned n_from = state[f];
  if (n_from == 0) return {state, 0.0};
  const unsigned n_to = state[t];
  if (n_to == std::numeric_limits<FockState::Occupation>::max()) {
    throw InvalidArgument("apply_hop: occupation overflow");
  }
  auto occ = state.occupations();
  occ[f] = static_cast<FockState::Occupation>(n_from - 1);
  occ[t] = static_cast<FockState::Occupation>(n_to + 1);
  return {FockState(std::move(occ)), std::sqrt(static_cast<double>(n_from)) *
                                         std::sqrt(static_cast<double>(n_to + 1))};
}

unsigned number_on(const FockState& state, VertexId site) {
  if (site.index() >= state.site_count()) throw IndexError("number_on: vertex out of range");
  return state[site.index()];
}

}  // namespace bhwalk
