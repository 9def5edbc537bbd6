// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhwalk/secondary_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <tuple>

#include <json.hpp>

#include "bhwalk/error.hpp"

namespace bhwalk {

namespace {

constexpr double kWeightTolerance = 1e-12;

bool one_per_column(const FockState& s) {
  if (s.site_count() % 2 != 0) return false;
  for (std::size_t c = 0; c < s.site_count(); c += 2) {
    if (s[c] + s[c + 1] != 1) return false;
  }
  return true;
}

std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", w);
  return buf;
}

// Simple union-find over vertex indices.
struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

SecondaryGraph::SecondaryGraph(std::vector<FockState> states, std::vector<GraphEdge> edges,
                               std::vector<double> self_loops, std::vector<char> computational)
    : states_(std::move(states)),
      edges_(std::move(edges)),
      self_loops_(std::move(self_loops)),
      computational_(std::move(computational)) {
  if (self_loops_.size() != states_.size() || computational_.size() != states_.size()) {
    throw DimensionMismatch("SecondaryGraph: per-vertex arrays differ in length");
  }
  for (GraphEdge& e : edges_) {
    if (e.a == e.b || e.a >= states_.size() || e.b >= states_.size()) {
      throw IndexError("SecondaryGraph: bad edge endpoint");
    }
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const GraphEdge& x, const GraphEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
}

std::size_t SecondaryGraph::self_loop_count() const {
  return static_cast<std::size_t>(std::count_if(self_loops_.begin(), self_loops_.end(), [](double w) { return w != 0.0; }));
}

std::size_t SecondaryGraph::computational_count() const {
  return static_cast<std::size_t>(std::count(computational_.begin(), computational_.end(), 1));
}

std::vector<std::vector<std::size_t>> SecondaryGraph::components() const {
  Dsu dsu(size());
  for (const GraphEdge& e : edges_) dsu.unite(e.a, e.b);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < size(); ++v) groups[dsu.find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<std::size_t> SecondaryGraph::reachable_from_computational() const {
  Dsu dsu(size());
  for (const GraphEdge& e : edges_) dsu.unite(e.a, e.b);
  std::vector<char> hit(size(), 0);
  for (std::size_t v = 0; v < size(); ++v) {
    if (computational_[v]) hit[dsu.find(v)] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (hit[dsu.find(v)]) out.push_back(v);
  }
  return out;
}

SecondaryGraph SecondaryGraph::pruned() const {
  const std::vector<std::size_t> keep = reachable_from_computational();
  std::vector<std::size_t> remap(size(), static_cast<std::size_t>(-1));
  std::vector<FockState> states;
  std::vector<double> loops;
  std::vector<char> comp;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = i;
    states.push_back(states_[keep[i]]);
    loops.push_back(self_loops_[keep[i]]);
    comp.push_back(computational_[keep[i]]);
  }
  std::vector<GraphEdge> edges;
  for (const GraphEdge& e : edges_) {
    if (remap[e.a] != static_cast<std::size_t>(-1)) edges.push_back({remap[e.a], remap[e.b], e.weight});
  }
  return SecondaryGraph(std::move(states), std::move(edges), std::move(loops), std::move(comp));
}

CMatrix SecondaryGraph::adjacency_matrix() const {
  const auto n = static_cast<Eigen::Index>(size());
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t v = 0; v < size(); ++v) {
    m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) = self_loops_[v];
  }
  for (const GraphEdge& e : edges_) {
    m(static_cast<Eigen::Index>(e.a), static_cast<Eigen::Index>(e.b)) = e.weight;
    m(static_cast<Eigen::Index>(e.b), static_cast<Eigen::Index>(e.a)) = e.weight;
  }
  return m;
}

SecondaryGraph build_secondary(const FockBasis& basis, const GraphConfig& config) {
  const SparseHermitian h = build_hamiltonian(basis, config);
  std::vector<GraphEdge> edges;
  std::vector<double> loops(basis.dimension(), 0.0);
  for (const auto& e : h.entries()) {
    if (e.value.imag() != 0.0) throw InvalidArgument("build_secondary: complex Hamiltonian entry");
    if (e.row == e.col) {
      loops[e.row] = e.value.real();
    } else if (e.row < e.col) {
      edges.push_back({e.row, e.col, e.value.real()});
    }
  }
  std::vector<char> comp(basis.dimension(), 0);
  if (basis.site_count() == 2 * basis.particle_count()) {
    for (std::size_t i = 0; i < basis.dimension(); ++i) comp[i] = one_per_column(basis.state(i)) ? 1 : 0;
  }
  return SecondaryGraph(basis.states(), std::move(edges), std::move(loops), std::move(comp));
}

SecondaryGraph build_secondary(const FockBasis& basis, const GraphConfig& config, const EncodingMap& encoding) {
  if (encoding.basis().dimension() != basis.dimension() || encoding.basis().site_count() != basis.site_count()) {
    throw DimensionMismatch("build_secondary: encoding does not match basis");
  }
  SecondaryGraph g = build_secondary(basis, config);
  std::vector<char> comp(basis.dimension(), 0);
  for (std::size_t idx : encoding.support()) comp[idx] = 1;
  return SecondaryGraph(g.states(), g.edges(), [&] {
    std::vector<double> loops;
    for (std::size_t v = 0; v < g.size(); ++v) loops.push_back(g.self_loop(v));
    return loops;
  }(), std::move(comp));
}

ProductCheck cartesian_product_check(const SecondaryGraph& total, const SecondaryGraph& a, const SecondaryGraph& b) {
  if (a.size() == 0 || b.size() == 0) throw DimensionMismatch("cartesian_product_check: empty factor");
  const std::size_t sites_a = a.states().front().site_count();
  const std::size_t sites_b = b.states().front().site_count();
  if (total.size() == 0 || total.states().front().site_count() != sites_a + sites_b) {
    throw DimensionMismatch("cartesian_product_check: site counts do not add up");
  }
  if (total.size() < a.size() * b.size()) {
    throw DimensionMismatch("cartesian_product_check: total graph smaller than |a|*|b|");
  }

  ProductCheck out;
  std::map<FockState, std::size_t> index;
  for (std::size_t v = 0; v < total.size(); ++v) index.emplace(total.states()[v], v);

  const std::size_t nb = b.size();
  std::vector<char> in_sector(total.size(), 0);
  out.mapping.reserve(a.size() * nb);
  for (std::size_t ia = 0; ia < a.size(); ++ia) {
    for (std::size_t ib = 0; ib < nb; ++ib) {
      std::vector<FockState::Occupation> occ = a.states()[ia].occupations();
      const auto& tail = b.states()[ib].occupations();
      occ.insert(occ.end(), tail.begin(), tail.end());
      const FockState joined(std::move(occ));
      const auto it = index.find(joined);
      if (it == index.end()) {
        out.reason = "no vertex " + joined.to_string() + " in total graph";
        return out;
      }
      out.mapping.push_back(it->second);
      in_sector[it->second] = 1;
    }
  }

  std::vector<GraphEdge> expected;
  for (const GraphEdge& e : a.edges()) {
    for (std::size_t ib = 0; ib < nb; ++ib) expected.push_back({out.mapping[e.a * nb + ib], out.mapping[e.b * nb + ib], e.weight});
  }
  for (const GraphEdge& e : b.edges()) {
    for (std::size_t ia = 0; ia < a.size(); ++ia) expected.push_back({out.mapping[ia * nb + e.a], out.mapping[ia * nb + e.b], e.weight});
  }
  for (GraphEdge& e : expected) {
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  auto by_endpoints = [](const GraphEdge& x, const GraphEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); };
  std::sort(expected.begin(), expected.end(), by_endpoints);

  std::vector<GraphEdge> actual;
  for (const GraphEdge& e : total.edges()) {
    if (in_sector[e.a] != in_sector[e.b]) {
      out.reason = "edge " + total.label(e.a) + " -- " + total.label(e.b) + " leaves the product sector";
      return out;
    }
    if (in_sector[e.a]) actual.push_back(e);
  }
  if (actual.size() != expected.size()) {
    out.reason = "edge count " + std::to_string(actual.size()) + " vs product " + std::to_string(expected.size());
    return out;
  }
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const GraphEdge& x = actual[i];
    const GraphEdge& y = expected[i];
    if (x.a != y.a || x.b != y.b) {
      out.reason = "edge " + total.label(x.a) + " -- " + total.label(x.b) + " has no product counterpart";
      return out;
    }
    if (std::abs(x.weight - y.weight) > kWeightTolerance) {
      out.reason = "weight mismatch on " + total.label(x.a) + " -- " + total.label(x.b);
      return out;
    }
  }
  for (std::size_t ia = 0; ia < a.size(); ++ia) {
    for (std::size_t ib = 0; ib < nb; ++ib) {
      const std::size_t v = out.mapping[ia * nb + ib];
      if (std::abs(total.self_loop(v) - (a.self_loop(ia) + b.self_loop(ib))) > kWeightTolerance) {
        out.reason = "self-loop on " + total.label(v) + " is not the sum of the factors";
        return out;
      }
    }
  }
  out.holds = true;
  return out;
}

std::string export_dot(const SecondaryGraph& source, const ExportOptions& options) {
  const SecondaryGraph g = options.prune ? source.pruned() : source;
  std::string s = "graph secondary {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    s += "  n" + std::to_string(v) + " [label=\"" + g.label(v) + "\"";
    if (g.is_computational(v)) s += ", style=filled, fillcolor=lightgray";
    s += "];\n";
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.has_self_loop(v)) {
      s += "  n" + std::to_string(v) + " -- n" + std::to_string(v) + " [label=\"" + format_weight(g.self_loop(v)) + "\"];\n";
    }
  }
  for (const GraphEdge& e : g.edges()) {
    s += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [label=\"" + format_weight(e.weight) + "\"];\n";
  }
  s += "}\n";
  return s;
}

std::string export_json(const SecondaryGraph& source, const ExportOptions& options) {
  const SecondaryGraph g = options.prune ? source.pruned() : source;
  nlohmann::ordered_json doc;
  doc["schema"] = "bhwalk.secondary-graph/1";
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    vertices.push_back({{"index", v}, {"label", g.label(v)}, {"computational", g.is_computational(v)},
                        {"self_loop", g.self_loop(v)}});
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const GraphEdge& e : g.edges()) edges.push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

}  // namespace bhwalk
