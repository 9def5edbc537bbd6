// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhwalk/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bhwalk/error.hpp"

namespace bhwalk {

namespace {

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) throw InvalidArgument(std::string(what) + " must be finite");
}

}  // namespace

GraphConfig::GraphConfig(std::size_t site_count, double interaction)
    : potentials_(site_count, 0.0), interaction_(interaction) {
  require_finite(interaction, "GraphConfig: interaction");
}

GraphConfig& GraphConfig::add_edge(VertexId a, VertexId b, double tunneling) {
  if (a.index() >= site_count() || b.index() >= site_count()) {
    throw IndexError("GraphConfig: edge endpoint out of range");
  }
  if (a == b) throw InvalidArgument("GraphConfig: self-loops must be expressed as potentials");
  require_finite(tunneling, "GraphConfig: tunneling");
  if (b < a) std::swap(a, b);
  for (const Edge& e : edges_) {
    if (e.a == a && e.b == b) {
      throw InvalidArgument("GraphConfig: duplicate edge " + std::to_string(a.index()) + "-" +
                            std::to_string(b.index()));
    }
  }
  edges_.push_back({a, b, tunneling});
  return *this;
}

GraphConfig& GraphConfig::set_potential(VertexId site, double potential) {
  if (site.index() >= site_count()) throw IndexError("GraphConfig: potential site out of range");
  require_finite(potential, "GraphConfig: potential");
  potentials_[site.index()] = potential;
  return *this;
}

GraphConfig& GraphConfig::set_interaction(double interaction) {
  require_finite(interaction, "GraphConfig: interaction");
  interaction_ = interaction;
  return *this;
}

GraphConfig& GraphConfig::set_site_interactions(std::vector<double> interactions) {
  if (interactions.size() != site_count()) {
    throw DimensionMismatch("GraphConfig: per-site interactions need one entry per site");
  }
  for (double u : interactions) require_finite(u, "GraphConfig: site interaction");
  site_interactions_ = std::move(interactions);
  return *this;
}

GraphConfig& GraphConfig::clear_site_interactions() {
  site_interactions_.reset();
  return *this;
}

double GraphConfig::potential(VertexId site) const {
  if (site.index() >= site_count()) throw IndexError("GraphConfig: site out of range");
  return potentials_[site.index()];
}

double GraphConfig::interaction_on(VertexId site) const {
  if (site.index() >= site_count()) throw IndexError("GraphConfig: site out of range");
  return site_interactions_ ? (*site_interactions_)[site.index()] : interaction_;
}

std::vector<std::size_t> GraphConfig::support() const {
  std::vector<std::size_t> sites;
  for (const Edge& e : edges_) {
    sites.push_back(e.a.index());
    sites.push_back(e.b.index());
  }
  for (std::size_t i = 0; i < potentials_.size(); ++i) {
    if (potentials_[i] != 0.0) sites.push_back(i);
  }
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  return sites;
}

GraphConfig default_config(std::size_t qubit_count, double interaction) {
  if (qubit_count == 0) throw InvalidArgument("default_config: need at least one qubit");
  return GraphConfig(2 * qubit_count, interaction);
}

SparseHermitian::SparseHermitian(std::size_t dimension, std::vector<Entry> entries,
                                 double tolerance)
    : dimension_(dimension) {
  for (const Entry& e : entries) {
    if (e.row >= dimension || e.col >= dimension) {
      throw IndexError("SparseHermitian: entry out of range");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  });
  entries_.reserve(entries.size());
  for (const Entry& e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.value == Complex(0.0, 0.0); });

  row_begin_.assign(dimension_ + 1, 0);
  for (const Entry& e : entries_) ++row_begin_[e.row + 1];
  for (std::size_t r = 0; r < dimension_; ++r) row_begin_[r + 1] += row_begin_[r];

  if (!is_hermitian(tolerance)) throw InvalidArgument("SparseHermitian: matrix is not Hermitian");
}

Complex SparseHermitian::entry(std::size_t row, std::size_t col) const {
  if (row >= dimension_ || col >= dimension_) throw IndexError("SparseHermitian: out of range");
  const auto first = entries_.begin() + static_cast<std::ptrdiff_t>(row_begin_[row]);
  const auto last = entries_.begin() + static_cast<std::ptrdiff_t>(row_begin_[row + 1]);
  const auto it =
      std::lower_bound(first, last, col, [](const Entry& e, std::size_t c) { return e.col < c; });
  return (it != last && it->col == col) ? it->value : Complex(0.0, 0.0);
}

bool SparseHermitian::is_real() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.value.imag() == 0.0; });
}

bool SparseHermitian::is_hermitian(double tolerance) const {
  for (const Entry& e : entries_) {
    if (e.row == e.col) {
      if (std::abs(e.value.imag()) > tolerance) return false;
    } else if (std::abs(entry(e.col, e.row) - std::conj(e.value)) > tolerance) {
      return false;
    }
  }
  return true;
}

CVector SparseHermitian::multiply(const CVector& x) const {
  if (static_cast<std::size_t>(x.size()) != dimension_) {
    throw DimensionMismatch("SparseHermitian::multiply: vector length mismatch");
  }
  CVector y = CVector::Zero(x.size());
  for (const Entry& e : entries_) {
    y[static_cast<Eigen::Index>(e.row)] += e.value * x[static_cast<Eigen::Index>(e.col)];
  }
  return y;
}

CMatrix SparseHermitian::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dimension_);
  CMatrix m = CMatrix::Zero(n, n);
  for (const Entry& e : entries_) {
    m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
  }
  return m;
}

double SparseHermitian::norm_inf() const {
  std::vector<double> sums(dimension_, 0.0);
  for (const Entry& e : entries_) sums[e.row] += std::abs(e.value);
  return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
}

SparseHermitian build_hamiltonian(const FockBasis& basis, const GraphConfig& config) {
  if (basis.site_count() != config.site_count()) {
    throw DimensionMismatch("build_hamiltonian: basis has " + std::to_string(basis.site_count()) +
                            " sites but config has " + std::to_string(config.site_count()));
  }
  for (const Edge& e : config.edges()) require_finite(e.tunneling, "build_hamiltonian: tunneling");
  for (double v : config.potentials()) require_finite(v, "build_hamiltonian: potential");
  require_finite(config.interaction(), "build_hamiltonian: interaction");

  std::vector<SparseHermitian::Entry> triplets;
  triplets.reserve(basis.dimension() * (1 + 2 * config.edges().size()));
  const std::size_t sites = basis.site_count();
  for (std::size_t col = 0; col < basis.dimension(); ++col) {
    const FockState& s = basis.state(col);
    double diagonal = 0.0;
    for (std::size_t i = 0; i < sites; ++i) {
      const double n = s[i];
      const auto v = VertexId::flat(i);
      diagonal += -config.potential(v) * n + 0.5 * config.interaction_on(v) * n * (n - 1.0);
    }
    if (diagonal != 0.0) triplets.push_back({col, col, Complex(diagonal, 0.0)});
    for (const Edge& e : config.edges()) {
      if (e.tunneling == 0.0) continue;
      for (const auto& [from, to] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        HopResult hop = apply_hop(s, from, to);
        if (hop.amplitude == 0.0) continue;
        triplets.push_back({basis.index_of(hop.state), col, Complex(-e.tunneling * hop.amplitude, 0.0)});
      }
    }
  }
  return SparseHermitian(basis.dimension(), std::move(triplets));
}

}  // namespace bhwalk
