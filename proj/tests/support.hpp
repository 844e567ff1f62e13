#pragma once

// Brute-force reference computations used as independent oracles in the unit tests.

#include <cmath>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "clustnet/graph_state.hpp"
#include "clustnet/rng.hpp"
#include "clustnet/triadic_chain.hpp"

namespace testing {

using clustnet::GraphState;
using clustnet::Vertex;
using clustnet::VertexPair;

inline GraphState make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  GraphState g(n);
  for (auto [a, b] : edges) g.toggle_edge(a, b);
  return g;
}

inline GraphState complete_graph(std::size_t n) {
  GraphState g(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) g.toggle_edge(i, j);
  return g;
}

inline GraphState random_graph(std::size_t n, double p, clustnet::Rng& rng) {
  GraphState g(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (rng.bernoulli(p)) g.toggle_edge(i, j);
  return g;
}

inline std::size_t brute_degree(const GraphState& g, Vertex v) {
  std::size_t d = 0;
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (w != v && g.has_edge(v, w)) ++d;
  return d;
}

inline std::vector<Vertex> brute_common(const GraphState& g, Vertex i, Vertex j) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != i && v != j && g.has_edge(i, v) && g.has_edge(j, v)) out.push_back(v);
  return out;
}

inline std::uint64_t brute_triangles(const GraphState& g) {
  std::uint64_t t = 0;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++t;
  return t;
}

inline std::uint64_t brute_two_paths(const GraphState& g) {
  std::uint64_t t = 0;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex centre = 0; centre < n; ++centre)
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (a != centre && b != centre && g.has_edge(centre, a) && g.has_edge(centre, b)) ++t;
  return t;
}

inline std::size_t brute_largest_component(const GraphState& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::size_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t size = 0;
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      ++size;
      for (Vertex w = 0; w < n; ++w) {
        if (w != v && !seen[w] && g.has_edge(v, w)) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    best = std::max(best, size);
  }
  return best;
}

/// Toggle intensity written directly from the model definition, with no shared code paths.
inline double brute_intensity(const GraphState& g, const clustnet::TriadicParams& p, Vertex i, Vertex j) {
  using clustnet::Variant;
  const std::size_t n = g.vertex_count();
  double nu_a = 0.0, nu_b = 0.0, star = 0.0;
  for (Vertex v : brute_common(g, i, j)) {
    const double d = static_cast<double>(brute_degree(g, v));
    nu_a += std::pow(d, -p.alpha);
    nu_b += std::pow(d, -p.beta);
    star += 2.0 / (d * (d - 1.0));
  }
  const double birth0 = p.lambda_v.empty() ? p.lambda0 : p.lambda_v[i] * p.lambda_v[j];
  const double death0 = p.mu_v.empty() ? p.mu0 : p.mu_v[i] * p.mu_v[j];
  const bool edge = g.has_edge(i, j);
  switch (p.variant) {
    case Variant::independent:
      return edge ? death0 : birth0;
    case Variant::corrected: {
      if (edge) return death0;
      double kappa = 0.0;
      for (Vertex e : {i, j}) {
        const std::size_t d = brute_degree(g, e);
        if (d == 0) kappa += 1.0 / static_cast<double>(n - 1);
        if (d == 1) kappa += 1.0 / static_cast<double>(n - 2);
      }
      return birth0 + p.lambda * star + p.lambda * kappa;
    }
    default:
      return edge ? std::max(0.0, death0 - p.mu * nu_b) : birth0 + p.lambda * nu_a;
  }
}

/// Total-variation distance between two empirical count vectors.
inline double count_tv(const std::vector<double>& a, const std::vector<double>& b) {
  double sa = 0.0, sb = 0.0;
  for (double x : a) sa += x;
  for (double x : b) sb += x;
  double tv = 0.0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const double pa = k < a.size() ? a[k] / sa : 0.0;
    const double pb = k < b.size() ? b[k] / sb : 0.0;
    tv += std::abs(pa - pb);
  }
  return tv / 2.0;
}

}  // namespace testing
